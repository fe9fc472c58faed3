"""Direct symmetric-group enumeration: hand-checked anchors and invariants.

Every expected number here was either computed by hand (tiny cases written
out as explicit permutation words) or pinned from an earlier run of this
same enumeration and re-checked against the character-sum route.
"""

from fractions import Fraction

import pytest

from hurwitz.oracle import (
    BoundExceeded,
    FactorizationSpec,
    MAX_DEGREE,
    count_factorizations,
    compose,
    cycle_type,
    identity,
    permutations_of_type,
    sweep,
)
from hurwitz.partitions import SizeMismatch


def test_permutation_helpers():
    p = (1, 2, 0)  # the 3-cycle 0->1->2->0
    q = (1, 0, 2)  # the transposition (0 1)
    assert cycle_type(p) == (3,)
    assert cycle_type(identity(3)) == (1, 1, 1)
    assert compose(p, q) != compose(q, p)
    # (p*q)(i) = p(q(i))
    assert compose(p, q) == tuple(p[q[i]] for i in range(3))


def test_permutations_of_type_counts():
    assert len(permutations_of_type(4, (2, 1, 1))) == 6
    assert len(permutations_of_type(4, (4,))) == 6
    assert len(permutations_of_type(5, (3, 2))) == 20


def test_spec_validation():
    with pytest.raises(SizeMismatch):
        FactorizationSpec((2,), (1, 1, 1), 1, 0, 0)
    with pytest.raises(ValueError):
        FactorizationSpec((2,), (1, 1), -1, 0, 0)
    spec = FactorizationSpec((3, 1), (2, 2), 2, 0, 0)
    assert spec.d == 4 and spec.b == 2
    assert spec.genus() == 0


def test_genus_gate():
    # parity mismatch: b and m+n disagree mod 2
    assert FactorizationSpec((2,), (2,), 1, 0, 0).genus() is None
    assert count_factorizations(FactorizationSpec((2,), (2,), 1, 0, 0)).value == 0
    # negative genus
    assert FactorizationSpec((2, 2), (2, 2), 0, 0, 0).genus() is None


# -- hand-checked anchors ---------------------------------------------------------
# h((2),(1,1); p=1): sigma_1 = (01), the only transposition undoing it is (01);
# 1 factorization / 2! times the labeling factor 2! for nu = (1,1).
# h((3),(3); b=0): two 3-cycles, each its own factorization; 2/3! * 1 = 1/3.
# monotone h((2),(2); q=2): tau_1 tau_2 sigma_1 with tau_i = (01) forced; 1/2! = 1/2.
# strict h((2),(2); r=2): needs s_1 < s_2 among smaller elements, impossible in S_2.
# h((1,1),(1,1); p=2): sigma_1 = id, tau_1 = tau_2 = (01); 1/2! * 2!*2! = 2.
ANCHORS = [
    ((2,), (1, 1), (1, 0, 0), Fraction(1)),
    ((3,), (3,), (0, 0, 0), Fraction(1, 3)),
    ((2,), (2,), (0, 2, 0), Fraction(1, 2)),
    ((2,), (2,), (0, 0, 2), Fraction(0)),
    ((1, 1), (1, 1), (2, 0, 0), Fraction(2)),
    ((2,), (2,), (2, 0, 0), Fraction(1, 2)),
]


@pytest.mark.parametrize("mu,nu,pqr,want", ANCHORS)
def test_anchor_counts(mu, nu, pqr, want):
    assert count_factorizations(FactorizationSpec(mu, nu, *pqr)).value == want


def test_genus_gate_negative():
    # b = 0 with m + n = 4 would need genus -1: gated to zero even though
    # disconnected identity covers exist combinatorially
    assert count_factorizations(FactorizationSpec((1, 1), (1, 1), 0, 0, 0)).value == 0


def test_connected_filter():
    # the only factorization of ((1,1),(1,1); p=2) is tau_1 = tau_2 = (01):
    # transitive, so the connected count keeps the full labeled weight 2
    disc = count_factorizations(FactorizationSpec((1, 1), (1, 1), 2, 0, 0))
    conn = count_factorizations(FactorizationSpec((1, 1), (1, 1), 2, 0, 0, connected=True))
    assert disc.value == 2 and conn.value == 2
    # a single 2-cycle is transitive on its support
    conn2 = count_factorizations(FactorizationSpec((2,), (2,), 0, 2, 0, connected=True))
    assert conn2.value == Fraction(1, 2)
    # ((2,1),(2,1); p=2) has genuine non-transitive factorizations (fixed third sheet)
    disc3 = count_factorizations(FactorizationSpec((2, 1), (2, 1), 2, 0, 0))
    conn3 = count_factorizations(FactorizationSpec((2, 1), (2, 1), 2, 0, 0, connected=True))
    assert 0 < conn3.value < disc3.value


def test_mu_nu_symmetry():
    # reading the factorization backwards swaps the roles of mu and nu
    for mu, nu, pqr in [
        ((3, 1), (2, 2), (2, 0, 0)),
        ((4,), (2, 2), (1, 0, 1)),
        ((3,), (1, 1, 1), (0, 2, 0)),
    ]:
        a = count_factorizations(FactorizationSpec(mu, nu, *pqr)).value
        b = count_factorizations(FactorizationSpec(nu, mu, *pqr)).value
        assert a == b


def test_conventions_agree_spot_checks():
    for mu, nu, q in [((3, 1), (2, 2), 2), ((2, 2, 1), (5,), 3), ((4,), (4,), 2)]:
        spec = FactorizationSpec(mu, nu, 0, q, 0)
        assert (
            count_factorizations(spec, convention="smaller").value
            == count_factorizations(spec, convention="larger").value
        )


def test_bound_guard():
    big = (MAX_DEGREE + 1,)
    with pytest.raises(BoundExceeded):
        count_factorizations(FactorizationSpec(big, big, 0, 0, 0))


def test_sweep_is_deterministic_and_valid():
    rows = list(sweep(3, 3))
    assert rows == list(sweep(3, 3))
    for spec, value in rows:
        assert spec.genus() is not None
        assert spec.d <= 3 and spec.b <= 3
    # pairs with a valid genus in range appear; ((1,1,1),(1,1,1)) needs b >= 4
    seen = {(spec.mu, spec.nu) for spec, _ in rows}
    assert ((2, 1), (3,)) in seen
    assert ((1, 1, 1), (1, 1, 1)) not in seen
    assert ((1, 1, 1), (1, 1, 1)) in {(s.mu, s.nu) for s, _ in sweep(3, 4)}
