"""
One-period markets: arbitrage or a pricing measure
==================================================

A market is a matrix of discounted price changes, one row per asset and
one column per state of the world.  Exactly one of two things is true:
some portfolio has semipositive gains (arbitrage), or a strictly positive
probability measure makes every asset a fair bet.  With the measure in
hand, claims get priced by exact linear programming.
"""
from fractions import Fraction

from ratcert import (
    Claim,
    MarketModel,
    NoArbitrage,
    detect_arbitrage,
    mat,
    price_bounds,
    superhedge_price,
    vec,
)

# One asset that gains 1 in the up state and loses 1 in the down state.
market = MarketModel(
    A=mat([[1, -1]]), asset_labels=("stock",), state_labels=("up", "down")
)
verdict = detect_arbitrage(market)
assert isinstance(verdict, NoArbitrage)
print("martingale measure:", verdict.measure)

# Price a digital claim paying 1 in the up state.
claim = Claim(vec([1, 0]))
hedge = superhedge_price(market, claim)
print("superhedge price:", hedge.price)
print("hedging strategy:", hedge.strategy)
print("maximizing measure:", hedge.measure)

# The hedge dominates the payoff in every state; check it by hand:
cash = hedge.price
for k, state in enumerate(market.state_labels):
    portfolio = cash + hedge.strategy[0] * market.A[0][k]
    print(f"  {state}: hedge pays {portfolio}, claim pays {claim.payoff[k]}")

# With a single asset the measure is pinned down, so bounds coincide.
print("price interval:", price_bounds(market, claim))

# Remove the asset's risk and the measure set fattens to the whole simplex:
dull = MarketModel(A=mat([[0, 0]]))
print("no-trading interval:", price_bounds(dull, claim))

# A market where one asset gains in every state cannot be priced at all.
try:
    superhedge_price(MarketModel(A=mat([[1, Fraction(1, 2)]])), claim)
except ValueError as exc:
    print("refused:", exc)
