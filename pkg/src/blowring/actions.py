"""Finite group actions on Laurent rings by signed monomial substitutions.

Every generator sends a variable to (unit coefficient) * (monomial); this
covers all the actions in scope: Weyl inversions w(y,z) = (y^-1, z^-1),
isogeny sign flips, and the wall-ratio twists on blow-up generators.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .poly import LaurentPoly
from .rings import PresentedRing
from .scalars import ONE, GaussianRational

GROUP_CAP = 1024

Image = tuple[GaussianRational, dict[str, int]]


class GroupCapExceeded(RuntimeError):
    pass


class Substitution:
    """A ring automorphism v -> c * prod(w^e); unmapped variables are fixed."""

    __slots__ = ("images",)

    def __init__(self, images: Mapping[str, Image]):
        clean = {}
        for v, (coeff, mono) in images.items():
            if not coeff:
                raise ValueError(f"zero coefficient in image of {v!r}")
            clean[v] = (coeff, {w: int(e) for w, e in mono.items() if e})
        object.__setattr__(self, "images", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Substitution is immutable")

    @classmethod
    def parse(cls, table: Mapping[str, str]) -> "Substitution":
        """Build from a substitution table like {"y": "y^-1", "z": "-z"}."""
        from .poly import parse_poly

        images = {}
        for v, text in table.items():
            p = parse_poly(text)
            if not p.is_monomial():
                raise ValueError(f"image of {v!r} is not a monomial: {text!r}")
            ((exps, coeff),) = p.terms.items()
            images[v] = (coeff, {w: e for w, e in zip(p.vars, exps) if e})
        return cls(images)

    def image_of(self, var: str) -> Image:
        return self.images.get(var, (ONE, {var: 1}))

    def __call__(self, f: LaurentPoly) -> LaurentPoly:
        return f.substitute_monomials(self.images)

    def compose(self, other: "Substitution") -> "Substitution":
        """self after other."""
        vars = set(self.images) | set(other.images)
        out: dict[str, Image] = {}
        for v in vars:
            coeff, mono = other.image_of(v)
            acc: dict[str, int] = {}
            c = coeff
            for w, e in mono.items():
                wc, wm = self.image_of(w)
                c = c * wc ** e
                for u, ue in wm.items():
                    acc[u] = acc.get(u, 0) + ue * e
            out[v] = (c, {u: e for u, e in acc.items() if e})
        return Substitution(out)

    def _canonical(self):
        items = []
        for v in sorted(self.images):
            coeff, mono = self.images[v]
            if coeff == ONE and mono == {v: 1}:
                continue
            items.append((v, coeff.re, coeff.im, tuple(sorted(mono.items()))))
        return tuple(items)

    def __eq__(self, other):
        return isinstance(other, Substitution) and self._canonical() == other._canonical()

    def __hash__(self):
        return hash(self._canonical())

    def is_identity(self) -> bool:
        return not self._canonical()

    def __repr__(self):
        body = ", ".join(
            f"{v} -> {LaurentPoly.monomial(c, m)}" for v, (c, m) in sorted(self.images.items())
        )
        return f"<Substitution {body or 'id'}>"


IDENTITY = Substitution({})


class GroupAction:
    """The finite group generated by a list of substitutions."""

    def __init__(self, generators: Iterable[Substitution], cap: int = GROUP_CAP):
        self.generators = list(generators)
        self.cap = cap
        self._elements: list[Substitution] | None = None

    @classmethod
    def from_tables(cls, tables: Iterable[Mapping[str, str]], cap: int = GROUP_CAP) -> "GroupAction":
        return cls([Substitution.parse(t) for t in tables], cap)

    def elements(self) -> list[Substitution]:
        if self._elements is None:
            seen = {IDENTITY}
            frontier = [IDENTITY]
            while frontier:
                nxt = []
                for g in frontier:
                    for s in self.generators:
                        h = s.compose(g)
                        if h not in seen:
                            if len(seen) >= self.cap:
                                raise GroupCapExceeded(f"group enumeration exceeded cap {self.cap}")
                            seen.add(h)
                            nxt.append(h)
                frontier = nxt
            self._elements = sorted(seen, key=lambda s: s._canonical())
        return self._elements

    def order(self) -> int:
        return len(self.elements())

    def act(self, g: Substitution, f: LaurentPoly) -> LaurentPoly:
        return g(f)

    def reynolds(self, f: LaurentPoly) -> LaurentPoly:
        """The invariant projector (1/|G|) * sum_g g(f)."""
        els = self.elements()
        total = LaurentPoly.zero(f.vars)
        for g in els:
            total = total + g(f)
        return total * Fraction(1, len(els))

    def is_invariant(self, f: LaurentPoly) -> bool:
        return all(s(f) == f for s in self.generators)


def act(g: Substitution, f: LaurentPoly) -> LaurentPoly:
    return g(f)


def invariant_generators(
    action: GroupAction,
    laurent_vars: Sequence[str] = (),
    poly_vars: Sequence[str] = (),
    degree_bound: int = 2,
    ring: PresentedRing | None = None,
    tag_prefix: str = "_s",
) -> list[LaurentPoly]:
    """Generators of the invariant ring up to the degree bound.

    Symmetrizes every monomial with exponent height <= degree_bound, walks the
    candidates degree by degree and keeps those not already in the subalgebra
    generated in strictly smaller degrees (Gröbner subalgebra-membership
    oracle). Deterministic; complete at the bound by construction: every
    candidate symmetrization lies in the algebra generated by the output.
    """
    if ring is None:
        ring = PresentedRing(laurent_vars, poly_vars, [])
    else:
        laurent_vars = ring.laurent_vars
        poly_vars = ring.poly_vars
    candidates = _symmetrized_candidates(action, laurent_vars, poly_vars, degree_bound, ring)
    gens: list[LaurentPoly] = []
    oracle = None
    batch_start = 0
    current_height = None
    for (height, _), cand in candidates:
        if height != current_height:
            # seal the previous batch into the oracle
            if len(gens) > batch_start or oracle is None:
                if gens:
                    oracle = ring.subalgebra_oracle(
                        gens, [f"{tag_prefix}{k}" for k in range(len(gens))]
                    )
            batch_start = len(gens)
            current_height = height
        if oracle is not None and oracle.contains(cand):
            continue
        gens.append(cand)
    return gens


def _symmetrized_candidates(action, laurent_vars, poly_vars, bound, ring):
    vars = tuple(laurent_vars) + tuple(poly_vars)
    seen: set = set()
    out: list[tuple[tuple, LaurentPoly]] = []
    for exps in _exponent_box(len(laurent_vars), len(poly_vars), bound):
        if not any(exps):
            continue
        mono = LaurentPoly(vars, {exps: ONE})
        sym = action.reynolds(mono)
        if sym.is_zero():
            continue
        _, prim = sym.scaled_primitive()
        if ring.relations or ring.ideal.gens:
            reduced = ring.nf(prim)
            if reduced.is_zero():
                continue
        key = prim._canonical_items()
        if key in seen:
            continue
        seen.add(key)
        height = sum(abs(e) for e in exps)
        out.append(((height, key), prim))
    out.sort(key=lambda pair: pair[0])
    return out


def _exponent_box(n_laurent: int, n_poly: int, bound: int):
    def rec(i, remaining, prefix):
        if i == n_laurent + n_poly:
            yield tuple(prefix)
            return
        lo = -min(remaining, bound) if i < n_laurent else 0
        hi = min(remaining, bound)
        for e in range(lo, hi + 1):
            prefix.append(e)
            yield from rec(i + 1, remaining - abs(e), prefix)
            prefix.pop()

    yield from rec(0, bound, [])
