"""Partitions, compositions, Young-diagram contents, and symmetric-group
characters.

Profiles of branch points are compositions (ordered tuples of positive
integers) because the parts carry labels; characters only depend on the
underlying partition and sort internally.  Characters use the
Murnaghan-Nakayama recursion on beta-numbers (first-column hook lengths),
memoized over (shape, remaining cycle lengths).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial


class SizeMismatch(ValueError):
    """Two profiles/shapes that must have equal size do not."""


def check_composition(parts) -> tuple:
    parts = tuple(int(x) for x in parts)
    if not parts:
        raise ValueError("empty composition")
    if any(x < 1 for x in parts):
        raise ValueError(f"composition parts must be >= 1: {parts}")
    return parts


def partitions(d: int):
    """All partitions of d as weakly decreasing tuples, in descending lex order."""

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    yield from gen(d, d)


def compositions(d: int):
    """All compositions of d (ordered tuples of positive parts)."""

    def gen(remaining):
        if remaining == 0:
            yield ()
            return
        for first in range(1, remaining + 1):
            for rest in gen(remaining - first):
                yield (first,) + rest

    yield from gen(d)


def conjugate(lam) -> tuple:
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(sum(1 for row in lam if row > i) for i in range(lam[0]))


def contents(lam) -> tuple:
    """Multiset of box contents j - i (0-based), row by row."""
    return tuple(j - i for i, row in enumerate(lam) for j in range(row))


def f2_eigenvalue(lam) -> Fraction:
    """Sum of the contents: the transposition-sum eigenvalue on the shape."""
    return Fraction(sum(contents(lam)))


def multiplicity_factor(mu) -> int:
    """prod over part values of (multiplicity)! — the label-assignment count."""
    mults = {}
    for part in mu:
        mults[part] = mults.get(part, 0) + 1
    out = 1
    for m in mults.values():
        out *= factorial(m)
    return out


def centralizer_size(mu) -> int:
    """z_mu = prod over part values l of l^(m_l) * (m_l)!"""
    mults = {}
    for part in mu:
        mults[part] = mults.get(part, 0) + 1
    out = 1
    for l, m in mults.items():
        out *= l ** m * factorial(m)
    return out


@lru_cache(maxsize=None)
def _char_rec(lam: tuple, mu: tuple) -> int:
    if not mu:
        return 1
    t = mu[0]
    rest = mu[1:]
    k = len(lam)
    beta = [lam[i] + (k - 1 - i) for i in range(k)]  # strictly decreasing
    beta_set = set(beta)
    total = 0
    for i, b in enumerate(beta):
        nb = b - t
        if nb < 0 or nb in beta_set:
            continue
        # height of the border strip = number of beta entries passed over
        height = sum(1 for other in beta if nb < other < b)
        new_beta = sorted(beta, reverse=True)
        new_beta[new_beta.index(b)] = nb
        new_beta.sort(reverse=True)
        new_lam = tuple(
            bb - (k - 1 - pos) for pos, bb in enumerate(new_beta) if bb - (k - 1 - pos) > 0
        )
        total += (-1) ** height * _char_rec(new_lam, rest)
    return total


def character(lam, mu) -> int:
    """Irreducible symmetric-group character chi^lam at cycle type mu."""
    lam = tuple(sorted(lam, reverse=True))
    mu = tuple(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    return _char_rec(lam, mu)


def dimension(lam) -> int:
    return character(lam, (1,) * sum(lam))


@lru_cache(maxsize=None)
def _sym_at_contents(lam: tuple, kmax: int) -> tuple:
    """(h_0..h_kmax, e_0..e_kmax) evaluated at the content multiset of lam."""
    cr = contents(lam)
    h = [Fraction(0)] * (kmax + 1)
    h[0] = Fraction(1)
    for x in cr:
        for k in range(1, kmax + 1):
            h[k] += x * h[k - 1]
    e = [Fraction(0)] * (kmax + 1)
    e[0] = Fraction(1)
    for x in cr:
        for k in range(min(kmax, len(cr)), 0, -1):
            e[k] += x * e[k - 1]
    return tuple(h), tuple(e)


def complete_homogeneous_at_contents(lam, v: int) -> Fraction:
    """h_v evaluated at the contents of lam."""
    if v < 0:
        raise ValueError("need v >= 0")
    lam = tuple(sorted(lam, reverse=True))
    return _sym_at_contents(lam, v)[0][v]


def elementary_at_contents(lam, v: int) -> Fraction:
    """e_v evaluated at the contents of lam; vanishes for v > |lam|."""
    if v < 0:
        raise ValueError("need v >= 0")
    lam = tuple(sorted(lam, reverse=True))
    if v > sum(lam):
        return Fraction(0)
    return _sym_at_contents(lam, v)[1][v]
