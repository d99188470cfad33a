"""The rank-1 convolution K-ring in its three presentations.

Abstract: polynomials in a, b, c modulo the cubic hypersurface relation.
Localized: Weyl-invariant wall fractions in the torus coordinates y, z.
Blow-up: elements of the saturated GG blow-up quotient.

The basis classes v(n)_m are formal symbols; only the entries the
generator equations determine are mapped to polynomials, and everything else
raises instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blowup import BlowupAlgebra, build_blowup, membership
from .centralizer import model
from .fractions import RingFraction
from .poly import LaurentPoly, parse_poly
from .rings import PresentedRing, SubalgebraOracle
from .rootdata import sl2
from .scalars import gauss

PRESENTATIONS = ("abstract", "localized", "blowup")


class KRingError(ValueError):
    pass


class NotDerivableError(KRingError):
    """The requested basis class is outside the dictionary's derived closure."""


@dataclass(frozen=True)
class VClass:
    """The basis symbol v(n)_m: degree-n line bundle class on the m-orbit."""

    n: int
    m: int

    def __post_init__(self):
        if self.m < 0:
            raise KRingError("orbit label m must be nonnegative")
        if self.m == 0 and self.n < 0:
            raise KRingError("on the point orbit v(n) requires n >= 0")

    def image(self) -> LaurentPoly:
        return v_dictionary(self.n, self.m)

    def g_equivariant_side(self) -> bool:
        """Even m: lies in the convolution subring of the smaller Grassmannian."""
        return self.m % 2 == 0

    def sheaf_side(self) -> bool:
        """Even n: the dual-group-equivariant classes."""
        return self.n % 2 == 0

    def __str__(self):
        return f"v({self.n})_{self.m}"


# the generator equations of the basis classes and one-step consequences
_DICTIONARY: dict[tuple[int, int], str] = {
    (1, 0): "a",
    (0, 1): "b",
    (1, 1): "c",
    (-1, 1): "a*b - c",  # from v(1)_0 * v(0)_1 = v(1)_1 + v(-1)_1
    (2, 1): "a*c - b",  # from v(2)_1 = v(1)_1 * v(1)_0 - v(0)_1
    (0, 2): "b^2",  # v(0)_1 * v(0)_1
    (2, 2): "c^2",  # v(1)_1 * v(1)_1
    (1, 2): "b*c",  # v(1)_1 * v(0)_1
    (2, 0): "a^2 - 1",  # v(1)_0 * v(1)_0 - 1
}


def v_dictionary(n: int, m: int) -> LaurentPoly:
    """The abstract-presentation image of v(n)_m, for derivable (n, m) only."""
    key = (n, m)
    if key not in _DICTIONARY:
        raise NotDerivableError(
            f"v({n})_{m} is not derivable from the generator equations"
        )
    return parse_poly(_DICTIONARY[key], vars=("a", "b", "c"))


def abstract_ring(relation: LaurentPoly | None = None) -> PresentedRing:
    rel = relation if relation is not None else model("S").relation
    return PresentedRing((), ("a", "b", "c"), [rel])


def kring_multiply(f: LaurentPoly, g: LaurentPoly, ring: PresentedRing | None = None) -> LaurentPoly:
    """Product in the abstract presentation, reduced modulo the relation."""
    ring = ring or abstract_ring()
    return ring.nf(f * g).with_vars(("a", "b", "c"))


def subring_filter(f: LaurentPoly, side: str) -> bool:
    """Membership of an abstract element in the parity subrings.

    side "G": fixed by the center involution negating b and c (even m);
    side "Gv": fixed by the involution negating a and c (even n); "both"
    requires both.
    """
    m = model("S")
    if side == "G":
        subs = [m.involutions["iota"]]
    elif side == "Gv":
        subs = [m.involutions["jmath"]]
    elif side == "both":
        subs = [m.involutions["iota"], m.involutions["jmath"]]
    else:
        raise KRingError(f"unknown side {side!r} (want 'G', 'Gv' or 'both')")
    return all(s(f) == f for s in subs)


class KRing:
    """The three isomorphic presentations with conversion maps."""

    def __init__(self, datum=None):
        self.datum = datum or sl2()
        self.model = model("S")
        self.ring = abstract_ring()
        self.blowup: BlowupAlgebra = build_blowup(self.datum, "GG")
        self._to_blowup_certs: dict[str, LaurentPoly] | None = None
        self._from_blowup: SubalgebraOracle | None = None

    # -- certificates of the abstract generators inside the blow-up ----------

    def generator_certificates(self) -> dict[str, LaurentPoly]:
        if self._to_blowup_certs is None:
            certs = {}
            for coord in self.model.coords:
                res = membership(self.model.parametrization.images[coord], self.blowup)
                if not res.member:
                    raise KRingError(f"generator {coord} failed blow-up membership")
                certs[coord] = res.certificate
            self._to_blowup_certs = certs
        return self._to_blowup_certs

    def _blowup_oracle(self) -> SubalgebraOracle:
        if self._from_blowup is None:
            certs = self.generator_certificates()
            self._from_blowup = self.blowup.ring.subalgebra_oracle(
                [certs[c] for c in self.model.coords], self.model.coords
            )
        return self._from_blowup

    # -- conversions ------------------------------------------------------------

    def convert(self, value, src: str, dst: str):
        if src not in PRESENTATIONS or dst not in PRESENTATIONS:
            raise KRingError(f"presentations are {PRESENTATIONS}")
        if src == dst:
            return value
        route = {
            ("abstract", "localized"): self.abstract_to_localized,
            ("abstract", "blowup"): self.abstract_to_blowup,
            ("localized", "abstract"): self.localized_to_abstract,
            ("localized", "blowup"): self.localized_to_blowup,
            ("blowup", "abstract"): self.blowup_to_abstract,
            ("blowup", "localized"): self.blowup_to_localized,
        }
        return route[(src, dst)](value)

    def abstract_to_localized(self, f: LaurentPoly) -> RingFraction:
        return self.model.parametrization(f)

    def abstract_to_blowup(self, f: LaurentPoly) -> LaurentPoly:
        certs = self.generator_certificates()
        image = f.substitute({c: certs[c] for c in self.model.coords})
        return self.blowup.ring.nf(image)

    def localized_to_blowup(self, frac: RingFraction) -> LaurentPoly:
        deck = self.model.deck
        acted = RingFraction(deck(frac.num), deck(frac.den))
        if acted != frac:
            raise KRingError("localized element is not Weyl-invariant")
        res = membership(frac, self.blowup)
        if not res.member:
            raise KRingError("localized element is not in the blow-up ring")
        return res.certificate

    def blowup_to_abstract(self, g: LaurentPoly) -> LaurentPoly:
        rewritten = self._blowup_oracle().rewrite(g)
        if rewritten is None:
            raise KRingError("blow-up element is not in the convolution subring")
        return self.ring.nf(rewritten).with_vars(("a", "b", "c"))

    def localized_to_abstract(self, frac: RingFraction) -> LaurentPoly:
        return self.blowup_to_abstract(self.localized_to_blowup(frac))

    def blowup_to_localized(self, g: LaurentPoly) -> RingFraction:
        pres = self.abstract_to_localized
        return pres(self.blowup_to_abstract(g))

    # -- the localization identities -----------------------------------------

    def localization_checks(self) -> dict[str, bool]:
        """The Iwahori localization identities, in the localized presentation.

        The skyscraper classes enter only through the combination
        u_0 - u_2 = -i * y^-1; eliminating it turns the second formula into
        y + y^-1 = i(2 v(0)_1 - v(1)_0 v(1)_1), and consistency with the
        first one is exactly the generator equation behind v(2)_1.
        """
        i = gauss(0, 1)
        y = LaurentPoly.var("y")
        loc = self.abstract_to_localized
        a_l = loc(parse_poly("a"))
        b_l = loc(parse_poly("b"))
        c_l = loc(parse_poly("c"))
        v01 = b_l
        v21 = loc(v_dictionary(2, 1))
        checks = {}
        # y + y^-1 = i(2 v(0)_1 - v(1)_0 v(1)_1)
        checks["moka_sum"] = (a_l * c_l - v01 * 2) * i == RingFraction(-(y + y**-1))
        # y - y^-1 = i (z - z^-1) v(1)_1
        z = LaurentPoly.var("z")
        checks["moka_difference"] = RingFraction((z - z**-1) * i) * c_l == RingFraction(y - y**-1)
        # y = i(v(0)_1 - v(2)_1 + u_2 - u_0) with u_0 - u_2 = -i y^-1
        u_diff = RingFraction(y**-1 * -i)
        checks["skyscraper_combination"] = (v01 - v21) * i - u_diff * i == RingFraction(y)
        return checks


_DEFAULT_KRING: "KRing | None" = None


def presentation_convert(value, src: str, dst: str, ring: "KRing | None" = None):
    """Convert an element between the three presentations (module-level surface)."""
    global _DEFAULT_KRING
    if ring is None:
        if _DEFAULT_KRING is None:
            _DEFAULT_KRING = KRing()
        ring = _DEFAULT_KRING
    return ring.convert(value, src, dst)


def dictionary_rederivations() -> dict[str, bool]:
    """Re-derive the consequence entries from the generator equations."""
    a, b, c = (parse_poly(s, vars=("a", "b", "c")) for s in "abc")
    ring = abstract_ring()
    checks = {}
    v_m11 = v_dictionary(-1, 1)
    checks["v(-1)_1 from the evident relation"] = ring.equal(
        kring_multiply(a, b), v_dictionary(1, 1) + v_m11
    )
    checks["v(0)_2 = v(0)_1 * v(0)_1"] = ring.equal(kring_multiply(b, b), v_dictionary(0, 2))
    checks["v(2)_0 = v(1)_0 * v(1)_0 - 1"] = ring.equal(
        kring_multiply(a, a) - 1, v_dictionary(2, 0)
    )
    checks["v(2)_1 = v(1)_1 * v(1)_0 - v(0)_1"] = ring.equal(
        kring_multiply(c, a) - b, v_dictionary(2, 1)
    )
    return checks
