"""Wall-crossing: chamber-polynomial differences and the recursive product
formula for the refined generating series.

The refined series for a numeric profile pair (mu, nu) keeps one marker
variable per part of nu grading how many of the constrained transpositions
touch that part, times the operator correlator in the z-variables.  Crossing
the wall mu_I = nu_J, the jump of the series factors — up to an explicit
prefactor, pole-free after rewriting every sigma as (linear form) * S — into
the product of the refined series of the two split profiles, with delta =
mu_I - nu_J joining one profile on each side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Optional, Union

from .algebra import TruncSeries, falling_factorial, rising_factorial, s_of, s_power_series
from .partitions import check_composition
from .wedge import (
    Chamber,
    OnWall,
    Wall,
    chamber_of,
    chamber_polynomial,
    walls,
    _materialize,
    _patterns,
)


class InvalidSplit(ValueError):
    """delta = mu_I - nu_J is not positive where it has to be."""


@dataclass
class WallCrossingProblem:
    wall: Wall
    c1: Chamber
    c2: Chamber
    kind: str  # monotone | strict | mixed
    signature: Union[int, tuple]  # genus, or (p, q, r) for mixed

    def __post_init__(self):
        if self.kind not in ("monotone", "strict", "mixed"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if (self.c1.m, self.c1.n) != (self.c2.m, self.c2.n):
            raise ValueError("chambers live in different arrangements")
        if (self.wall.m, self.wall.n) != (self.c1.m, self.c1.n):
            raise ValueError("wall belongs to a different arrangement")
        for w in walls(self.c1.m, self.c1.n):
            if w != self.wall and self.c1.sign(w) != self.c2.sign(w):
                raise ValueError("chambers are not adjacent across the wall")
        if self.c1.key() != self.c2.key():
            if self.c2.sign(self.wall) != 1 or self.c1.sign(self.wall) != -1:
                raise InvalidSplit("need delta < 0 on c1 and delta > 0 on c2")

    @property
    def b(self) -> int:
        if self.kind == "mixed":
            return sum(self.signature)
        return 2 * self.signature - 2 + self.c1.m + self.c1.n

    def pqr(self) -> tuple:
        if self.kind == "mixed":
            return tuple(self.signature)
        b = self.b
        return {"monotone": (0, b, 0), "strict": (0, 0, b)}[self.kind]


def wallcrossing_polynomial(problem: WallCrossingProblem):
    """P_{c2} - P_{c1} for the problem's kind and signature."""
    p2 = chamber_polynomial(problem.kind, problem.signature, problem.c2)
    p1 = chamber_polynomial(problem.kind, problem.signature, problem.c1)
    return p2 - p1


# -- refined generating series ----------------------------------------------------


def _space(kind: str, n: int, order: int):
    if kind == "monotone" or kind == "strict":
        names = tuple([f"u{j}" for j in range(1, n + 1)] + [f"z{j}" for j in range(1, n + 1)])
    elif kind == "mixed":
        names = tuple(
            [f"t{j}" for j in range(1, n + 1)]
            + [f"u{j}" for j in range(1, n + 1)]
            + ["X"]
            + [f"y{j}" for j in range(1, n + 1)]
            + [f"z{j}" for j in range(1, n + 1)]
        )
    else:
        raise ValueError(f"unknown kind {kind!r}")
    caps = (order,) * len(names)
    blocks = ((tuple(range(len(names))), order),)
    return names, caps, blocks


@dataclass(frozen=True)
class _Slot:
    """One nu-part of a split profile inside the ambient variable space.

    `index` is the parent index j (vars uj/zj/tj/yj); None marks the delta
    part, which carries no markers and no expansion variables of its own.
    """

    value: Fraction
    index: Optional[int]


def _h_series(kind, mu_parts, slots, space, order, delta=None, chamber=None):
    """The refined series of one (possibly split) profile, in ambient vars.

    mu_parts: the mu-side parts (Fractions; may include the delta part).
    slots: nu-side _Slot list, in profile order.
    For kind "mixed" a delta slot contributes the operator argument X*delta.
    """
    names, caps, blocks = space
    nu_vals = tuple(int(s.value) for s in slots)
    mu_vals = tuple(int(x) for x in mu_parts)
    ch = chamber if chamber is not None else chamber_of(mu_vals, nu_vals)

    energies = {("mu", i + 1): Fraction(v) for i, v in enumerate(mu_vals)}
    energies.update({("nu", j + 1): Fraction(s.value) for j, s in enumerate(slots)})
    args = {}
    for jj, s in enumerate(slots, start=1):
        if s.index is None:
            args[("nu", jj)] = {"X": Fraction(delta)} if kind == "mixed" else {}
        elif kind == "mixed":
            args[("nu", jj)] = {"X": Fraction(s.value), f"y{s.index}": 1, f"z{s.index}": 1}
        else:
            args[("nu", jj)] = {f"z{s.index}": 1}

    _, _, vec = ch.key()
    corr = _materialize(_patterns(ch.m, ch.n, vec), space, None, energies, args)

    out = corr
    for s in slots:
        if s.index is None:
            continue  # extraction at marker power 0 with zero argument
        v = Fraction(s.value)
        if kind == "monotone":
            marker = {(0,) * len(names): Fraction(1)}
            uix = names.index(f"u{s.index}")
            for k in range(1, order + 1):
                e = [0] * len(names)
                e[uix] = k
                marker[tuple(e)] = rising_factorial(v, k)
            out = out * TruncSeries(names, caps, None, marker, blocks)
            out = out * _lift_single(s_power_series(v - 1, f"z{s.index}", order), space)
        elif kind == "strict":
            marker = {(0,) * len(names): Fraction(1)}
            uix = names.index(f"u{s.index}")
            for k in range(1, order + 1):
                e = [0] * len(names)
                e[uix] = k
                marker[tuple(e)] = falling_factorial(v, k)
            out = out * TruncSeries(names, caps, None, marker, blocks)
            out = out * _lift_single(s_power_series(-v - 1, f"z{s.index}", order), space)
        else:
            marker = {(0,) * len(names): Fraction(1)}
            tix, uix = names.index(f"t{s.index}"), names.index(f"u{s.index}")
            for k in range(1, order + 1):
                e = [0] * len(names)
                e[tix] = k
                marker[tuple(e)] = rising_factorial(v, k)
            out = out * TruncSeries(names, caps, None, marker, blocks)
            marker = {(0,) * len(names): Fraction(1)}
            for k in range(1, order + 1):
                e = [0] * len(names)
                e[uix] = k
                marker[tuple(e)] = falling_factorial(v, k)
            out = out * TruncSeries(names, caps, None, marker, blocks)
            out = out * _lift_single(s_power_series(v - 1, f"y{s.index}", order), space)
            out = out * _lift_single(s_power_series(-v - 1, f"z{s.index}", order), space)
    norm = prod(mu_vals) * prod(int(s.value) for s in slots)
    return out.scalar_mul(Fraction(1, norm))


def _lift_single(single: TruncSeries, space) -> TruncSeries:
    names, caps, blocks = space
    i = names.index(single.vars[0])
    data = {}
    for e, c in single.data.items():
        key = [0] * len(names)
        key[i] = e[0]
        data[tuple(key)] = c
    return TruncSeries(names, caps, None, data, blocks)


def refined_series(kind: str, mu, nu, order: int, chamber: Optional[Chamber] = None) -> TruncSeries:
    """The refined generating series of (mu, nu), truncated at total order.

    Variables: u1..un (markers) and z1..zn for the pure kinds; t, u, X, y, z
    for the mixed kind.  `chamber` overrides the sample's own chamber, which
    is how the series is continued across a wall.
    """
    mu = check_composition(mu)
    nu = check_composition(nu)
    space = _space(kind, len(nu), order)
    slots = [_Slot(Fraction(v), j + 1) for j, v in enumerate(nu)]
    return _h_series(kind, [Fraction(v) for v in mu], slots, space, order, chamber=chamber)


# -- the recursive product formula -------------------------------------------------


def _s_of_map(space, argmap) -> TruncSeries:
    names, caps, blocks = space
    return s_of(TruncSeries.from_linear(names, caps, argmap, None, blocks))


def _crossing_prefactor(kind, problem, mu, nu, delta, space) -> TruncSeries:
    """delta^2 * sigma-ratio, as the pole-free S-series times the scalar delta.

    Every sigma(L) is L * S(L); the linear forms of numerator and denominator
    cancel exactly up to one factor of delta, which combines with delta^2.
    """
    n = len(nu)
    J = set(problem.wall.J)
    Jc = [j for j in range(1, n + 1) if j not in J]

    def argmap(ixs, scale=1, xshift=0):
        out = {}
        for j in ixs:
            if kind == "mixed":
                out["X"] = out.get("X", Fraction(0)) + Fraction(nu[j - 1]) * scale
                out[f"y{j}"] = Fraction(scale)
                out[f"z{j}"] = Fraction(scale)
            else:
                out[f"z{j}"] = Fraction(scale)
        if xshift:
            out["X"] = out.get("X", Fraction(0)) + Fraction(xshift) * scale
        return out

    num = (
        _s_of_map(space, argmap(sorted(J), 1, delta if kind == "mixed" else 0))
        * _s_of_map(space, argmap(Jc, 1))
        * _s_of_map(space, argmap(range(1, n + 1), delta))
    )
    den = (
        _s_of_map(space, argmap(sorted(J), delta, delta if kind == "mixed" else 0))
        * _s_of_map(space, argmap(Jc, delta))
        * _s_of_map(space, argmap(range(1, n + 1), 1))
    )
    return (num * den.inverse()).scalar_mul(delta)


def verify_wallcrossing(problem: WallCrossingProblem, samples, order: Optional[int] = None) -> dict:
    """Check the product formula at each sample, coefficient by coefficient.

    The left side is the jump of the refined series across the wall — the
    c2-chamber series minus the c1-chamber continuation at the same profile.
    The right side multiplies the two split refined series (with the delta
    slot's markers extracted at power zero and its arguments set to zero)
    by the pole-free prefactor.
    """
    if order is None:
        order = problem.b
    kind = problem.kind
    wall = problem.wall
    report = {"wall": str(wall), "kind": kind, "order": order, "samples": [], "ok": True}
    for mu, nu in samples:
        mu = check_composition(mu)
        nu = check_composition(nu)
        ch = chamber_of(mu, nu)  # raises OnWall on a wall
        if ch.key() != problem.c2.key():
            raise InvalidSplit(f"sample {(mu, nu)} is not in the delta > 0 chamber")
        delta = wall.value(mu, nu)
        if delta <= 0:
            raise InvalidSplit(f"delta = {delta} at {(mu, nu)}")
        space = _space(kind, len(nu), order)

        lhs = refined_series(kind, mu, nu, order, chamber=problem.c2) - refined_series(
            kind, mu, nu, order, chamber=problem.c1
        )

        I, J = set(wall.I), set(wall.J)
        mu_I = [Fraction(mu[i - 1]) for i in sorted(I)]
        mu_Ic = [Fraction(mu[i - 1]) for i in range(1, len(mu) + 1) if i not in I]
        slots_J = [_Slot(Fraction(nu[j - 1]), j) for j in sorted(J)] + [_Slot(Fraction(delta), None)]
        slots_Jc = [_Slot(Fraction(nu[j - 1]), j) for j in range(1, len(nu) + 1) if j not in J]
        f1 = _h_series(kind, mu_I, slots_J, space, order, delta=delta)
        f2 = _h_series(kind, mu_Ic + [Fraction(delta)], slots_Jc, space, order, delta=delta)
        rhs = _crossing_prefactor(kind, problem, mu, nu, delta, space) * f1 * f2

        entry = {
            "mu": list(mu),
            "nu": list(nu),
            "delta": str(delta),
            "equal": lhs == rhs,
            "first_mismatch": None,
        }
        if not entry["equal"]:
            keys = sorted(set(lhs.data) | set(rhs.data), key=lambda e: (sum(e), e))
            for e in keys:
                a = lhs.data.get(e, Fraction(0))
                b = rhs.data.get(e, Fraction(0))
                if a != b:
                    entry["first_mismatch"] = {
                        "monomial": dict(zip(space[0], e)),
                        "left": str(a),
                        "right": str(b),
                    }
                    break
            report["ok"] = False
        report["samples"].append(entry)
    return report
