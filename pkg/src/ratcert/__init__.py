"""Exact rational certificates for linear alternatives, programs, pricing, and games.

Everything here computes over ``fractions.Fraction`` and ships its answers
with replayable certificates: a separating functional, a nonnegative
combination, a dual optimal vector, a pricing measure, or a pair of optimal
strategies.  ``verify_certificate`` rechecks any of the dichotomy
certificates with plain arithmetic and no reference to how they were found.
"""
from .alternatives import (
    Accept,
    Combination,
    InteriorMeasure,
    NegCol,
    NonNegRow,
    Orthogonal,
    Reject,
    SemiPositiveRow,
    Separation,
    Solution,
    alternatives_lemma,
    farkas,
    fredholm,
    stiemke,
    verify_certificate,
)
from .cone import (
    COLUMN_LIMIT,
    ConeProjection,
    Dependent,
    HullProjection,
    Independent,
    IndependentFamily,
    caratheodory_reduce,
    cone_distance,
    hull_distance,
    independence_witness,
    independent_family,
    separating_functional,
)
from .errors import (
    ArbitrageError,
    ColumnLimitError,
    DualNotOptimalError,
    PreconditionError,
)
from .finance import (
    Arbitrage,
    Claim,
    HedgeResult,
    MarketModel,
    NoArbitrage,
    detect_arbitrage,
    price_bounds,
    superhedge_price,
)
from .games import (
    GameSolution,
    MultipleSolutions,
    UniqueSolution,
    minimax_gap,
    solution_unique,
    solve_game,
    verify_saddle,
)
from .lp import (
    LPProblem,
    Optimal,
    PrimalInfeasible,
    PrimalUnbounded,
    check_optimal_pair,
    primal_from_dual,
    solve_lp,
)
from .ratlin import (
    Rat,
    RatMat,
    RatVec,
    format_rat,
    mat,
    parse_rat,
    vec,
)
from .serialize import (
    FormatError,
    Instance,
    decode_certificate,
    encode_certificate,
    instance_digest,
    load_certificate,
    load_instance,
    parse_instance,
)

__version__ = "0.1.0"

__all__ = [
    "Accept",
    "Arbitrage",
    "ArbitrageError",
    "COLUMN_LIMIT",
    "Claim",
    "ColumnLimitError",
    "Combination",
    "ConeProjection",
    "Dependent",
    "DualNotOptimalError",
    "FormatError",
    "GameSolution",
    "HedgeResult",
    "HullProjection",
    "Independent",
    "IndependentFamily",
    "Instance",
    "InteriorMeasure",
    "LPProblem",
    "MarketModel",
    "MultipleSolutions",
    "NegCol",
    "NoArbitrage",
    "NonNegRow",
    "Optimal",
    "Orthogonal",
    "PreconditionError",
    "PrimalInfeasible",
    "PrimalUnbounded",
    "Rat",
    "RatMat",
    "RatVec",
    "Reject",
    "SemiPositiveRow",
    "Separation",
    "Solution",
    "UniqueSolution",
    "alternatives_lemma",
    "caratheodory_reduce",
    "check_optimal_pair",
    "cone_distance",
    "decode_certificate",
    "detect_arbitrage",
    "encode_certificate",
    "farkas",
    "format_rat",
    "fredholm",
    "hull_distance",
    "independence_witness",
    "independent_family",
    "instance_digest",
    "load_certificate",
    "load_instance",
    "mat",
    "minimax_gap",
    "parse_instance",
    "parse_rat",
    "price_bounds",
    "primal_from_dual",
    "separating_functional",
    "solution_unique",
    "solve_game",
    "solve_lp",
    "stiemke",
    "superhedge_price",
    "vec",
    "verify_certificate",
    "verify_saddle",
]
