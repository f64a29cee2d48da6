"""One-period market models: arbitrage detection and exact claim pricing.

A market is an m x n rational matrix of discounted price changes, one row per
asset and one column per state.  A trading strategy is a row vector over the
assets; its gain in state k is the k-th entry of ``strategy . A``.  A pricing
measure is a probability vector over states annihilated by A.

Arbitrage detection is the row/measure dichotomy applied to A, and both
pricing operations are exact linear programs whose dual variables are
pricing measures, so every returned price comes with a measure attaining it
and a hedge certifying it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .alternatives import InteriorMeasure, SemiPositiveRow, stiemke
from .errors import ArbitrageError
from .lp import LPProblem, Optimal, solve_lp
from .ratlin import Rat, RatMat, RatVec, cols, dot, matvec, rows, vecmat


@dataclass(frozen=True, slots=True)
class MarketModel:
    """Price-change matrix with one row per asset and one column per state."""

    A: RatMat
    asset_labels: tuple[str, ...] | None = None
    state_labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.asset_labels is not None and len(self.asset_labels) != rows(self.A):
            raise ValueError("asset label count must match the asset count")
        if self.state_labels is not None and len(self.state_labels) != cols(self.A):
            raise ValueError("state label count must match the state count")

    @property
    def assets(self) -> int:
        return rows(self.A)

    @property
    def states(self) -> int:
        return cols(self.A)


@dataclass(frozen=True, slots=True)
class Claim:
    """Nonnegative payoff, one entry per state."""

    payoff: RatVec

    def __post_init__(self) -> None:
        if any(e < 0 for e in self.payoff):
            raise ValueError("claim payoffs must be nonnegative")


@dataclass(frozen=True, slots=True)
class Arbitrage:
    """Strategy whose gain vector is nonnegative and somewhere positive."""

    strategy: RatVec


@dataclass(frozen=True, slots=True)
class NoArbitrage:
    """Strictly positive pricing measure, certifying absence of arbitrage."""

    measure: RatVec


ArbitrageResult = Arbitrage | NoArbitrage


@dataclass(frozen=True, slots=True)
class HedgeResult:
    """Superhedging price with the strategy and the measure attaining it.

    Invariants: ``price + strategy-gain >= payoff`` in every state, the
    measure is a pricing measure, and the measure prices the payoff at
    exactly ``price``.
    """

    price: Rat
    strategy: RatVec
    measure: RatVec


def detect_arbitrage(market: MarketModel) -> ArbitrageResult:
    """Either an arbitrage strategy or a strictly positive pricing measure;
    exactly one of the two exists."""
    outcome = stiemke(market.A)
    if isinstance(outcome, SemiPositiveRow):
        return Arbitrage(outcome.functional)
    assert isinstance(outcome, InteriorMeasure)
    return NoArbitrage(outcome.measure)


def _hedge_lp(A: RatMat, payoff: RatVec) -> tuple[Rat, RatVec, RatVec]:
    """Cheapest superhedge of an arbitrary payoff vector.

    Minimizes the initial cash x over ``x + (strategy . A)_k - slack_k =
    payoff_k`` with nonnegative slack, cash and strategy split into signed
    parts.  The dual constraints force the dual vector to be a pricing
    measure, so the optimal dual is returned as the attaining measure.
    Requires the market to be arbitrage-free (otherwise the program fails
    its internal checks), which callers enforce beforehand.
    """
    m, n = rows(A), cols(A)
    zero, one = Fraction(0), Fraction(1)
    matrix = []
    for k in range(n):
        row = [one, -one]
        for j in range(m):
            row.append(A[j][k])
        for j in range(m):
            row.append(-A[j][k])
        for t in range(n):
            row.append(-one if t == k else zero)
        matrix.append(tuple(row))
    width = 2 + 2 * m + n
    cost = tuple([one, -one] + [zero] * (width - 2))
    outcome = solve_lp(LPProblem(A=tuple(matrix), b=tuple(payoff), c=cost))
    if not isinstance(outcome, Optimal):
        raise AssertionError("hedging program must be feasible and bounded")
    y = outcome.x
    strategy = tuple(y[2 + j] - y[2 + m + j] for j in range(m))
    measure = outcome.u
    price = outcome.value
    if sum(measure) != 1 or any(e < 0 for e in measure):
        raise AssertionError("hedging dual is not a probability vector")
    if any(e != 0 for e in matvec(A, measure)):
        raise AssertionError("hedging dual is not a pricing measure")
    if dot(payoff, measure) != price:
        raise AssertionError("hedging dual does not attain the price")
    gains = vecmat(strategy, A)
    if any(price + gains[k] < payoff[k] for k in range(n)):
        raise AssertionError("hedge does not dominate the payoff")
    return price, strategy, measure


def superhedge_price(market: MarketModel, claim: Claim) -> HedgeResult:
    """Least initial cash that, with some strategy, dominates the claim in
    every state.  Requires an arbitrage-free market."""
    arbitrage = detect_arbitrage(market)
    if isinstance(arbitrage, Arbitrage):
        raise ArbitrageError(
            "market admits an arbitrage strategy; prices are not defined",
            arbitrage,
        )
    price, strategy, measure = _hedge_lp(market.A, claim.payoff)
    return HedgeResult(price=price, strategy=strategy, measure=measure)


def price_bounds(market: MarketModel, claim: Claim) -> tuple[Rat, Rat]:
    """The attained interval of arbitrage-consistent prices for the claim.

    The upper bound is the superhedging price; the lower bound is the
    subhedging price, computed as the negated superhedging price of the
    negated payoff.  Requires an arbitrage-free market.
    """
    arbitrage = detect_arbitrage(market)
    if isinstance(arbitrage, Arbitrage):
        raise ArbitrageError(
            "market admits an arbitrage strategy; prices are not defined",
            arbitrage,
        )
    upper, _, _ = _hedge_lp(market.A, claim.payoff)
    negated, _, _ = _hedge_lp(market.A, tuple(-e for e in claim.payoff))
    lower = -negated
    if lower > upper:
        raise AssertionError("price bounds came out inverted")
    return lower, upper
