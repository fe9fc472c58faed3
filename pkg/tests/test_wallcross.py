from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest

from hurwitz.charactereval import hurwitz_disconnected
from hurwitz.wallcross import (
    InvalidSplit,
    WallCrossingProblem,
    refined_series,
    verify_wallcrossing,
    wallcrossing_polynomial,
)
from hurwitz.wedge import OnWall, Wall, chamber_of, chamber_polynomial, evaluate

WALL = Wall((1,), (1,), 2, 2)
C2 = chamber_of((3, 1), (2, 2))  # mu1 - nu1 > 0
C1 = chamber_of((2, 2), (3, 1))  # mu1 - nu1 < 0, same side of every other wall


def _diag_pure(kind, mu, nu, b):
    """Sum of the joint u^v z^v coefficients with |v| = b."""
    n = len(nu)
    s = refined_series(kind, mu, nu, 2 * b)
    tot = Fraction(0)
    for v in product(range(b + 1), repeat=n):
        if sum(v) != b:
            continue
        mono = {}
        for j in range(1, n + 1):
            mono[f"u{j}"] = v[j - 1]
            mono[f"z{j}"] = v[j - 1]
        tot += s.coeff(mono)
    return tot


def test_problem_validation():
    prob = WallCrossingProblem(WALL, C1, C2, "monotone", 0)
    assert prob.b == 2 and prob.pqr() == (0, 2, 0)
    with pytest.raises(InvalidSplit):
        WallCrossingProblem(WALL, C2, C1, "monotone", 0)  # orientation flipped
    with pytest.raises(ValueError):
        WallCrossingProblem(WALL, chamber_of((1, 3), (2, 2)), C2, "monotone", 0)
    with pytest.raises(ValueError):
        WallCrossingProblem(WALL, C1, C2, "nonsense", 0)


def test_degenerate_problem_gives_zero():
    prob = WallCrossingProblem(WALL, C2, C2, "strict", 1)
    assert wallcrossing_polynomial(prob).is_zero()


def test_crossing_polynomial_is_signed_difference():
    prob = WallCrossingProblem(WALL, C1, C2, "monotone", 1)
    wc = wallcrossing_polynomial(prob)
    p1 = chamber_polynomial("monotone", 1, C1)
    p2 = chamber_polynomial("monotone", 1, C2)
    assert wc == p2 - p1
    assert wc == -(p1 - p2)
    # degree bound 4g - 3 + m + n
    assert wc.total_degree() <= 4 * 1 - 3 + 2 + 2


def test_refined_series_trivial_profile():
    # mu = nu = (1): the correlator core is sigma(z)/sigma(z) = 1, so the
    # series is exactly the marker sum with rising factorials of 1
    s = refined_series("monotone", (1,), (1,), 3)
    fact = 1
    for k in range(4):
        assert s.coeff({"u1": k}) == fact
        fact *= k + 1
    assert s.coeff({"u1": 1, "z1": 1}) == 0


def test_refined_series_zero_order():
    # truncating at order zero leaves at most the constant, which is the
    # weight-zero count: 1/d for a pair of single cycles, zero otherwise
    s = refined_series("strict", (3,), (3,), 0)
    assert s.coeff({}) == Fraction(1, 3)
    assert len(s.data) == 1
    s = refined_series("strict", (3, 1), (2, 2), 0)
    assert s.is_zero()  # fewer than m + n - 2 transpositions cannot connect


def test_refined_series_on_wall():
    with pytest.raises(OnWall):
        refined_series("monotone", (2, 2), (2, 2), 2)


@pytest.mark.parametrize(
    "kind,mu,nu,b,pqr",
    [
        ("monotone", (2,), (2,), 2, (0, 2, 0)),
        ("monotone", (3, 1), (2, 2), 2, (0, 2, 0)),
        ("strict", (3, 1), (2, 2), 2, (0, 0, 2)),
        ("strict", (3,), (1, 2), 1, (0, 0, 1)),
    ],
)
def test_diagonal_extraction_recovers_counts(kind, mu, nu, b, pqr):
    assert _diag_pure(kind, mu, nu, b) == hurwitz_disconnected(mu, nu, *pqr)


def test_mixed_diagonal_extraction():
    # h(p,q,r) = p! * sum over |v|=q, |w|=r of [X^p t^v y^v u^w z^w]
    mu, nu, (p, q, r) = (3, 1), (2, 2), (1, 1, 0)
    s = refined_series("mixed", mu, nu, p + 2 * q + 2 * r)
    tot = Fraction(0)
    for v in product(range(q + 1), repeat=2):
        if sum(v) != q:
            continue
        mono = {"X": p}
        for j in (1, 2):
            mono[f"t{j}"] = v[j - 1]
            mono[f"y{j}"] = v[j - 1]
        tot += s.coeff(mono)
    assert tot == hurwitz_disconnected(mu, nu, p, q, r)


def test_wallcrossing_identity_monotone_g0():
    prob = WallCrossingProblem(WALL, C1, C2, "monotone", 0)
    rep = verify_wallcrossing(prob, [((3, 1), (2, 2)), ((5, 1), (3, 3))])
    assert rep["ok"]
    assert all(s["equal"] and s["first_mismatch"] is None for s in rep["samples"])


def test_wallcrossing_identity_mixed():
    prob = WallCrossingProblem(WALL, C1, C2, "mixed", (1, 1, 0))
    rep = verify_wallcrossing(prob, [((3, 1), (2, 2)), ((5, 1), (3, 3))])
    assert rep["ok"]


def test_wallcrossing_sample_validation():
    prob = WallCrossingProblem(WALL, C1, C2, "monotone", 0)
    with pytest.raises(InvalidSplit):
        verify_wallcrossing(prob, [((2, 2), (3, 1))])  # delta < 0 side
    with pytest.raises(OnWall):
        verify_wallcrossing(prob, [((2, 2), (2, 2))])  # on the wall itself


def test_series_jump_matches_polynomial_difference():
    # summing the jump's diagonal coefficients recovers the evaluated
    # wall-crossing polynomial at the sample
    prob = WallCrossingProblem(WALL, C1, C2, "monotone", 0)
    wc = wallcrossing_polynomial(prob)
    mu, nu = (3, 1), (2, 2)
    b = 2
    jump_hi = refined_series("monotone", mu, nu, 2 * b, chamber=C2)
    jump_lo = refined_series("monotone", mu, nu, 2 * b, chamber=C1)
    jump = jump_hi - jump_lo
    tot = Fraction(0)
    for v in product(range(b + 1), repeat=2):
        if sum(v) != b:
            continue
        mono = {}
        for j in (1, 2):
            mono[f"u{j}"] = v[j - 1]
            mono[f"z{j}"] = v[j - 1]
        tot += jump.coeff(mono)
    assert tot == evaluate(wc, mu, nu)
