"""Root data, lattices, pairings, orbit dimensions and perversity.

Coordinates: the weight lattice X and coweight lattice Y are written in dual
bases, so the canonical pairing is the dot product. For the simply-connected
flavor X uses fundamental weights (coroots are unit vectors in Y); for the
adjoint flavor X uses simple roots (fundamental coweights are unit vectors).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

Vec = tuple[int, ...]

WEYL_CAP = 1024


class RootDatumError(ValueError):
    pass


class RootDatum:
    def __init__(self, cartan: Sequence[Sequence[int]], flavor: str):
        if flavor not in ("simply-connected", "adjoint"):
            raise RootDatumError(f"unknown lattice flavor {flavor!r}")
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        self.flavor = flavor
        self.rank = len(self.cartan)
        for i, row in enumerate(self.cartan):
            if len(row) != self.rank or row[i] != 2:
                raise RootDatumError("not a Cartan matrix")
        if flavor == "simply-connected":
            # alpha_j = sum_i C_ij w_i ; alphach_j = e_j
            self.simple_roots = tuple(
                tuple(self.cartan[i][j] for i in range(self.rank)) for j in range(self.rank)
            )
            self.simple_coroots = tuple(_unit(j, self.rank) for j in range(self.rank))
        else:
            # alpha_j = e_j ; alphach_j = sum_i C_ji wch_i
            self.simple_roots = tuple(_unit(j, self.rank) for j in range(self.rank))
            self.simple_coroots = tuple(self.cartan[j] for j in range(self.rank))
        self._roots: tuple[tuple[Vec, Vec], ...] | None = None

    # -- pairing and reflections -------------------------------------------

    @staticmethod
    def pairing(weight: Sequence[int], coweight: Sequence[int]) -> int:
        """The canonical pairing <., .>: X x Y -> Z (dot product in dual bases)."""
        return sum(a * b for a, b in zip(weight, coweight))

    def reflect_weight(self, i: int, weight: Vec) -> Vec:
        n = self.pairing(weight, self.simple_coroots[i])
        return tuple(w - n * a for w, a in zip(weight, self.simple_roots[i]))

    def reflect_coweight(self, i: int, coweight: Vec) -> Vec:
        n = self.pairing(self.simple_roots[i], coweight)
        return tuple(w - n * a for w, a in zip(coweight, self.simple_coroots[i]))

    # -- the root system -----------------------------------------------------

    def root_pairs(self) -> tuple[tuple[Vec, Vec], ...]:
        """All (root, coroot) pairs, closed under simple reflections."""
        if self._roots is None:
            seen = {}
            frontier = list(zip(self.simple_roots, self.simple_coroots))
            for a, ac in frontier:
                seen[a] = ac
            while frontier:
                nxt = []
                for a, ac in frontier:
                    for i in range(self.rank):
                        b = self.reflect_weight(i, a)
                        bc = self.reflect_coweight(i, ac)
                        if b not in seen:
                            seen[b] = bc
                            nxt.append((b, bc))
                            if len(seen) > WEYL_CAP:
                                raise RootDatumError("root system closure exceeded cap")
                frontier = nxt
            for a, ac in seen.items():
                if self.pairing(a, ac) != 2:
                    raise RootDatumError("<alpha, alphach> != 2 in generated root system")
            self._roots = tuple(sorted(seen.items()))
        return self._roots

    def roots(self) -> tuple[Vec, ...]:
        return tuple(a for a, _ in self.root_pairs())

    def positive_root_pairs(self) -> tuple[tuple[Vec, Vec], ...]:
        out = []
        for a, ac in self.root_pairs():
            coeffs = self._simple_coefficients(a)
            if all(c >= 0 for c in coeffs):
                out.append((a, ac))
        return tuple(out)

    def _simple_coefficients(self, root: Vec) -> tuple[Fraction, ...]:
        cols = [list(a) for a in self.simple_roots]
        return _solve_columns(cols, root)

    def two_rho(self) -> Vec:
        total = [0] * self.rank
        for a, _ in self.positive_root_pairs():
            for k, v in enumerate(a):
                total[k] += v
        return tuple(total)

    # -- Weyl group -------------------------------------------------------------

    def weyl_elements(self, cap: int = WEYL_CAP) -> list[tuple[Vec, ...]]:
        """W as matrices on X (tuples of basis-vector images), BFS closure."""
        identity = tuple(_unit(i, self.rank) for i in range(self.rank))
        gens = []
        for i in range(self.rank):
            gens.append(tuple(self.reflect_weight(i, _unit(k, self.rank)) for k in range(self.rank)))
        for g in gens:
            if _compose(g, g) != identity:
                raise RootDatumError("Weyl generator is not an involution")
        seen = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    wg = _compose(g, w)
                    if wg not in seen:
                        seen.add(wg)
                        nxt.append(wg)
                        if len(seen) > cap:
                            raise RootDatumError(f"Weyl group exceeds cap {cap}")
            frontier = nxt
        return sorted(seen)

    # -- dominance, dimension, perversity ----------------------------------------

    def is_dominant_coweight(self, coweight: Sequence[int]) -> bool:
        return all(self.pairing(a, coweight) >= 0 for a in self.simple_roots)

    def orbit_dimension(self, coweight: Sequence[int]) -> int:
        """dim of the orbit labelled by a dominant coweight: <2 rho, coweight>."""
        if not self.is_dominant_coweight(coweight):
            raise RootDatumError(f"coweight {coweight} is not dominant")
        return self.pairing(self.two_rho(), coweight)

    def perversity_doubled(self, coweight: Sequence[int]) -> int:
        """-2*<rho, coweight> = -<2 rho, coweight>, exact doubled-integer form."""
        return -self.orbit_dimension(coweight)

    def perversity(self, coweight: Sequence[int]) -> Fraction:
        return Fraction(self.perversity_doubled(coweight), 2)

    # -- serialization --------------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"cartan": [list(r) for r in self.cartan], "flavor": self.flavor})

    @classmethod
    def from_json(cls, text: str) -> "RootDatum":
        data = json.loads(text)
        return cls(data["cartan"], data["flavor"])

    def __repr__(self):
        return f"RootDatum(cartan={self.cartan}, flavor={self.flavor!r})"

    def __eq__(self, other):
        return (
            isinstance(other, RootDatum)
            and self.cartan == other.cartan
            and self.flavor == other.flavor
        )

    def __hash__(self):
        return hash((self.cartan, self.flavor))


def sl2() -> RootDatum:
    """Rank 1 simply connected: X = Z*omega, alpha = 2*omega, alphach primitive."""
    return RootDatum([[2]], "simply-connected")


def pgl2() -> RootDatum:
    """Rank 1 adjoint: X = Z*alpha, Y = Z*omegach, alphach = 2*omegach."""
    return RootDatum([[2]], "adjoint")


def _unit(i: int, n: int) -> Vec:
    return tuple(1 if k == i else 0 for k in range(n))


def _compose(a: tuple[Vec, ...], b: tuple[Vec, ...]) -> tuple[Vec, ...]:
    """(a after b) acting on X row-vectors-of-images."""
    n = len(a)
    out = []
    for i in range(n):
        row = [0] * n
        for k, c in enumerate(b[i]):
            if c:
                for m, d in enumerate(a[k]):
                    row[m] += c * d
        out.append(tuple(row))
    return tuple(out)


def _solve_columns(cols: list[list[int]], target: Sequence[int]) -> tuple[Fraction, ...]:
    """Solve sum_j x_j * cols[j] = target exactly (square, invertible)."""
    n = len(cols)
    m = [[Fraction(cols[j][i]) for j in range(n)] + [Fraction(target[i])] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            raise RootDatumError("singular simple-root matrix")
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(m[i][n] for i in range(n))
