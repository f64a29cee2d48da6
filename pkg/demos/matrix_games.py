"""
Zero-sum games solved to the exact value
========================================

The row player maximizes, the column player minimizes, and both guarantee
levels are computed by independent exact LPs -- so the minimax equality is
an observable fact here, not an assumption.
"""
from ratcert import (
    MultipleSolutions,
    mat,
    minimax_gap,
    solution_unique,
    solve_game,
    verify_saddle,
)

pennies = mat([[1, -1], [-1, 1]])
out = solve_game(pennies)
print("matching pennies value:", out.value)
print("row strategy:", out.row_strategy, " column strategy:", out.col_strategy)
print("saddle check:", verify_saddle(pennies, out))

# Both players' guarantee levels, solved separately, always meet.
print("guarantees:", minimax_gap(pennies))

# A game with a unique interior solution:
skewed = mat([[2, 1], [0, 3]])
print("skewed game:", solve_game(skewed))
print("uniqueness:", solution_unique(skewed))

# ...and one with many optima, exhibited as two distinct solutions.
flat = mat([[0, 0], [0, 0]])
witness = solution_unique(flat)
assert isinstance(witness, MultipleSolutions)
print("two optima of the zero game:")
print("  ", witness.first)
print("  ", witness.second)

# Shifting every payoff moves the value by the shift and nothing else.
shifted = mat([[e + 5 for e in row] for row in pennies])
print("shifted pennies value:", solve_game(shifted).value)
