"""Shared exact-arithmetic test helpers.

The Schwartz-Zippel screen: any identity accepted symbolically must also
hold at random Gaussian-rational points avoiding the denominators; a
symbolic/numeric disagreement is a hard failure, never a skip.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from blowring.fractions import RingFraction
from blowring.poly import LaurentPoly
from blowring.scalars import GaussianRational, gauss


def random_gaussian(rng: random.Random, span: int = 7) -> GaussianRational:
    return gauss(
        Fraction(rng.randint(-span, span), rng.randint(1, 4)),
        Fraction(rng.randint(-span, span), rng.randint(1, 4)),
    )


def random_point(vars, rng: random.Random, avoid=()) -> dict[str, GaussianRational]:
    """A random evaluation point at which no avoided polynomial vanishes."""
    for _ in range(200):
        point = {v: random_gaussian(rng) for v in vars}
        if all(point[v] for v in vars) and all(p.evaluate(point) for p in avoid):
            return point
    raise AssertionError("could not find an admissible random point")


def sz_agree(f, g, vars, seed=0, rounds=20) -> bool:
    """Exact agreement of two fractions at `rounds` random points."""
    rng = random.Random(seed)
    f = RingFraction.of(f)
    g = RingFraction.of(g)
    avoid = [p for p in (f.den, g.den) if not p.is_monomial()]
    for _ in range(rounds):
        point = random_point(vars, rng, avoid=avoid)
        if f.evaluate(point) != g.evaluate(point):
            return False
    return True


def random_laurent(rng: random.Random, vars, n_terms=4, span=3) -> LaurentPoly:
    terms = {}
    for _ in range(n_terms):
        exps = tuple(rng.randint(-span, span) for _ in vars)
        terms[exps] = random_gaussian(rng, span=5)
    return LaurentPoly(tuple(vars), terms)


@pytest.fixture(scope="session")
def sl2_datum():
    from blowring.rootdata import sl2

    return sl2()


@pytest.fixture(scope="session")
def blowups(sl2_datum):
    """All five rank-1 blow-ups, built once per session."""
    from blowring.blowup import FLAVORS, build_blowup

    return {flavor: build_blowup(sl2_datum, flavor) for flavor in FLAVORS}
