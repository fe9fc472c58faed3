"""Exact arithmetic for double Hurwitz numbers of four flavours (simple,
monotone, strictly monotone, triply mixed), computed three independent ways:
direct enumeration over the symmetric group, character/content sums, and
commutation-pattern expansion of operator correlators.  Plus the piecewise
polynomial structure: chambers, walls, chamber polynomials, wall crossing.
"""

from .algebra import (
    LinearForm,
    MultiPoly,
    NotDivisible,
    PolyRing,
    Rational,
    TruncSeries,
    bernoulli,
    gen_bernoulli,
    s_power_series,
    sigma_series,
)
from .charactereval import (
    hurwitz_connected_simple,
    hurwitz_disconnected,
    tau_coefficient,
    tau_dictionary_value,
)
from .oracle import (
    BoundExceeded,
    FactorizationCount,
    FactorizationSpec,
    MAX_DEGREE,
    count_factorizations,
    sweep,
)
from .partitions import SizeMismatch, partitions, compositions
from .wallcross import (
    InvalidSplit,
    WallCrossingProblem,
    refined_series,
    verify_wallcrossing,
    wallcrossing_polynomial,
)
from .wedge import (
    ArityMismatch,
    Chamber,
    DegenerateSignature,
    EOp,
    OnWall,
    SigmaProduct,
    SumMismatch,
    Wall,
    ZeroEnergyIntermediate,
    chamber_of,
    chamber_polynomial,
    commutation_patterns,
    evaluate,
    johnson_expand,
    standard_word,
    walls,
)

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "BoundExceeded",
    "Chamber",
    "DegenerateSignature",
    "EOp",
    "FactorizationCount",
    "FactorizationSpec",
    "InvalidSplit",
    "LinearForm",
    "MAX_DEGREE",
    "MultiPoly",
    "NotDivisible",
    "OnWall",
    "PolyRing",
    "Rational",
    "SigmaProduct",
    "SizeMismatch",
    "SumMismatch",
    "TruncSeries",
    "Wall",
    "WallCrossingProblem",
    "ZeroEnergyIntermediate",
    "bernoulli",
    "chamber_of",
    "chamber_polynomial",
    "commutation_patterns",
    "compositions",
    "count_factorizations",
    "evaluate",
    "gen_bernoulli",
    "hurwitz_connected_simple",
    "hurwitz_disconnected",
    "johnson_expand",
    "partitions",
    "refined_series",
    "s_power_series",
    "sigma_series",
    "standard_word",
    "sweep",
    "tau_coefficient",
    "tau_dictionary_value",
    "verify_wallcrossing",
    "wallcrossing_polynomial",
    "walls",
]
