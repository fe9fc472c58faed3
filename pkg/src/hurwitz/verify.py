"""Verification suites: each one sweeps a family of identities at desk scale
and reports every compared instance.  A suite passes only if every instance
agrees exactly (rational arithmetic, no tolerances).

Suites: equality (three computation routes agree), degree (chamber-polynomial
degree bound), constant-term (lowest coefficient of the monotone chamber
polynomial against its closed form), wallcross (the recursive product formula
across a wall), tau (hypergeometric series coefficients two ways, plus the
dictionary back to monotone/strict counts), conventions (the two monotonicity
conventions agree on symmetric-group counts).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import factorial

from .algebra import bernoulli
from .charactereval import (
    hurwitz_disconnected,
    tau_coefficient,
    tau_dictionary_value,
    _box_product,
    tau_series_factored,
)
from .oracle import BoundExceeded, FactorizationSpec, count_factorizations
from .partitions import compositions, partitions
from .wallcross import WallCrossingProblem, verify_wallcrossing
from .wedge import (
    DegenerateSignature,
    OnWall,
    Wall,
    chamber_of,
    chamber_polynomial,
    evaluate,
)


def _fmt(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def _guard(dmax: int, bmax: int) -> None:
    if dmax > 6 or bmax > 5:
        raise BoundExceeded(f"suite bounds dmax={dmax}, bmax={bmax} exceed the desk scale (6, 5)")


def _report(suite: str, instances, failures) -> dict:
    return {
        "suite": suite,
        "count": len(instances),
        "instances": instances,
        "failures": failures,
        "ok": not failures,
    }


def _valid_genus(d: int, m: int, n: int, b: int) -> bool:
    return (b - m - n) % 2 == 0 and b >= m + n - 2


def suite_equality(dmax: int = 5, bmax: int = 4) -> dict:
    """Oracle, character sums, and chamber polynomials agree pointwise."""
    _guard(dmax, bmax)
    instances, failures = [], []
    splits = [
        (p, q, r)
        for t in range(bmax + 1)
        for p in range(t + 1)
        for q in range(t - p + 1)
        for r in [t - p - q]
    ]
    for d in range(1, dmax + 1):
        parts = list(partitions(d))
        for mu in parts:
            for nu in parts:
                m, n = len(mu), len(nu)
                for p, q, r in splits:
                    if not _valid_genus(d, m, n, p + q + r):
                        continue
                    a = count_factorizations(FactorizationSpec(mu, nu, p, q, r)).value
                    c = hurwitz_disconnected(mu, nu, p, q, r)
                    line = f"d={d} mu={mu} nu={nu} pqr=({p},{q},{r}): oracle={a} character={c}"
                    instances.append(line)
                    if a != c:
                        failures.append(line)
        # chamber-polynomial route, on composition pairs off every wall
        for mu in compositions(d):
            for nu in compositions(d):
                m, n = len(mu), len(nu)
                try:
                    ch = chamber_of(mu, nu)
                except OnWall:
                    continue
                for p, q, r in splits:
                    b = p + q + r
                    if not _valid_genus(d, m, n, b):
                        continue
                    if b == 0 and m + n == 2:
                        continue  # no polynomial for this signature
                    c = hurwitz_disconnected(mu, nu, p, q, r)
                    v = evaluate(chamber_polynomial("mixed", (p, q, r), ch), mu, nu)
                    line = f"d={d} mu={mu} nu={nu} pqr=({p},{q},{r}): character={c} chamber={v}"
                    instances.append(line)
                    if c != v:
                        failures.append(line)
    return _report("equality", instances, failures)


def _chambers(m: int, n: int, dmax: int = 8):
    """One representative Chamber per realizable sign vector, by sampling."""
    seen = {}
    for d in range(max(m, n), dmax + 1):
        for mu in compositions(d):
            if len(mu) != m:
                continue
            for nu in compositions(d):
                if len(nu) != n:
                    continue
                try:
                    ch = chamber_of(mu, nu)
                except OnWall:
                    continue
                seen.setdefault(ch.key(), ch)
    return [seen[k] for k in sorted(seen)]


def suite_degree() -> dict:
    """Total degree of every chamber polynomial is at most 4g - 3 + m + n."""
    cases = [(0, 1, 2), (0, 1, 3), (0, 2, 2), (1, 1, 1), (1, 1, 2), (1, 2, 1)]
    instances, failures = [], []
    for g, m, n in cases:
        b = 2 * g - 2 + m + n
        bound = 4 * g - 3 + m + n
        sigs = [("simple", g), ("monotone", g), ("strict", g)]
        sigs += [
            ("mixed", (p, q, b - p - q)) for p in range(b + 1) for q in range(b - p + 1)
        ]
        for ch in _chambers(m, n):
            for kind, sig in sigs:
                poly = chamber_polynomial(kind, sig, ch)
                deg = poly.total_degree()
                line = f"(g,m,n)=({g},{m},{n}) {kind} {sig} chamber={ch.sample}: degree {deg} <= {bound}"
                instances.append(line)
                if deg > bound:
                    failures.append(line)
    return _report("degree", instances, failures)


def _stated_constant(g: int, n: int, m: int) -> Fraction:
    if g == 0:
        return Fraction(0)
    return (
        -Fraction(n)
        * factorial(2 * g - 3 + m + n)
        * (2 * g - 3)
        * bernoulli(2 * g - 2)
        / factorial(2 * g - 2)
    )


def suite_constant_term(g=None) -> dict:
    """Constant term of the monotone chamber polynomial vs its closed form.

    The suite compares the computed constant against the stated closed form
    -n (2g-3+m+n)! (2g-3) B_{2g-2} / (2g-2)!  (and 0 at genus zero) and
    reports each instance; mismatches fail the suite.
    """
    genera = [g] if g is not None else [0, 1, 2]
    instances, failures = [], []
    for gg in genera:
        for m, n in [(1, 1), (1, 2), (2, 1)]:
            stated = _stated_constant(gg, n, m)
            for ch in _chambers(m, n):
                try:
                    poly = chamber_polynomial("monotone", gg, ch)
                except DegenerateSignature:
                    line = (
                        f"g={gg} (m,n)=({m},{n}): no chamber polynomial exists for this "
                        f"signature (burden 0 with m+n=2); stated constant {_fmt(stated)}"
                    )
                    instances.append(line)
                    failures.append(line)
                    continue
                got = poly.constant_term()
                line = f"g={gg} (m,n)=({m},{n}) chamber={ch.sample}: constant {_fmt(got)}, stated {_fmt(stated)}"
                instances.append(line)
                if got != stated:
                    failures.append(line)
    return _report("constant-term", instances, failures)


_WC_SAMPLES = [
    ((3, 1), (2, 2)),
    ((4, 1), (3, 2)),
    ((4, 2), (3, 3)),
    ((5, 2), (4, 3)),
    ((5, 3), (4, 4)),
    ((5, 1), (3, 3)),
]


def suite_wallcross() -> dict:
    """The recursive product formula across the wall mu1 = nu1 at m = n = 2."""
    wall = Wall(I=(1,), J=(1,), m=2, n=2)
    c2 = chamber_of((3, 1), (2, 2))
    c1 = chamber_of((2, 2), (3, 1))
    runs = [
        ("monotone", 0),
        ("monotone", 1),
        ("strict", 0),
        ("strict", 1),
        ("mixed", (1, 1, 0)),
    ]
    instances, failures = [], []
    for kind, sig in runs:
        problem = WallCrossingProblem(wall, c1, c2, kind, sig)
        rep = verify_wallcrossing(problem, _WC_SAMPLES)
        for s in rep["samples"]:
            line = (
                f"{kind} sig={sig} wall[{wall}] sample mu={tuple(s['mu'])} nu={tuple(s['nu'])} "
                f"delta={s['delta']} order={rep['order']}: {'equal' if s['equal'] else 'MISMATCH ' + str(s['first_mismatch'])}"
            )
            instances.append(line)
            if not s["equal"]:
                failures.append(line)
    return _report("wallcross", instances, failures)


def suite_tau(nmax: int = 4, emax: int = 3) -> dict:
    """Hypergeometric coefficients two ways, and the Hurwitz dictionary."""
    _guard(nmax, emax)
    instances, failures = [], []
    for nn in range(1, nmax + 1):
        for lam in partitions(nn):
            a = _box_product(lam, (emax,), (emax,))
            bseries = tau_series_factored(lam, (emax,), (emax,))
            ok = a == bseries
            line = f"lambda={lam}: per-box product == factored-moment series ({'ok' if ok else 'MISMATCH'})"
            instances.append(line)
            if not ok:
                failures.append(line)
        for mu in partitions(nn):
            for nu in partitions(nn):
                m, n = len(mu), len(nu)
                for qq in range(emax + 1):
                    for rr in range(emax + 1 - qq):
                        if not _valid_genus(nn, m, n, qq + rr):
                            continue
                        lhs = tau_dictionary_value(mu, nu, qq, rr)
                        rhs = hurwitz_disconnected(mu, nu, 0, qq, rr)
                        line = f"n={nn} mu={mu} nu={nu} (q,r)=({qq},{rr}): dictionary={lhs} direct={rhs}"
                        instances.append(line)
                        if lhs != rhs:
                            failures.append(line)
    return _report("tau", instances, failures)


def suite_conventions(dmax: int = 5, bmax: int = 4) -> dict:
    """Counts with the weak chains keyed on the smaller element of each
    transposition equal the counts keyed on the larger element."""
    _guard(dmax, bmax)
    instances, failures = [], []
    for d in range(1, dmax + 1):
        parts = list(partitions(d))
        for mu in parts:
            for nu in parts:
                m, n = len(mu), len(nu)
                for q in range(1, bmax + 1):
                    if not _valid_genus(d, m, n, q):
                        continue
                    spec = FactorizationSpec(mu, nu, 0, q, 0)
                    a = count_factorizations(spec, convention="smaller").value
                    b = count_factorizations(spec, convention="larger").value
                    line = f"d={d} mu={mu} nu={nu} q={q}: smaller={a} larger={b}"
                    instances.append(line)
                    if a != b:
                        failures.append(line)
    return _report("conventions", instances, failures)


SUITES = {
    "equality": suite_equality,
    "degree": suite_degree,
    "constant-term": suite_constant_term,
    "wallcross": suite_wallcross,
    "tau": suite_tau,
    "conventions": suite_conventions,
}


def run_suite(name: str, **kwargs) -> dict:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**kwargs)
