"""
Linear programs with a zero duality gap, literally
==================================================

solve_lp works on the standard form: minimise c.x subject to A.x = b and
x >= 0.  Whatever comes back is certified -- an optimal pair with equal
objectives, a functional proving infeasibility, or a recession ray proving
unboundedness.
"""
from ratcert import (
    LPProblem,
    Optimal,
    check_optimal_pair,
    mat,
    primal_from_dual,
    solve_lp,
    vec,
)

# min x1 + x2  s.t.  x1 + 2 x2 = 4, x >= 0
problem = LPProblem(A=mat([[1, 2]]), b=vec([4]), c=vec([1, 1]))
out = solve_lp(problem)
assert isinstance(out, Optimal)
print("x* =", out.x)
print("u* =", out.u)
print("value =", out.value, "(c.x and b.u agree exactly)")

# Knowing only the dual vector, the primal optimum can be reconstructed
# through the tight columns -- this is the certificate-driven direction.
x = primal_from_dual(problem, out.u)
print("recovered primal:", x, "->", check_optimal_pair(problem, x, out.u))

# Infeasible: x = -1 has no nonnegative solution, and the proof is xi = (1).
print(solve_lp(LPProblem(A=mat([[1]]), b=vec([-1]), c=vec([0]))))

# Unbounded: the objective falls along the diagonal of the kernel.
print(solve_lp(LPProblem(A=mat([[1, -1]]), b=vec([0]), c=vec([-1, 0]))))
