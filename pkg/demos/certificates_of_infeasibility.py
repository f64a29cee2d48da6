"""
Certificates instead of verdicts
================================

Every decider in ratcert answers with evidence.  Ask whether b is a
nonnegative combination of the columns of A and you get back either the
combination itself or a functional that cleanly separates b from the cone
-- and a verifier that rechecks either answer with nothing but
multiplication and comparison.
"""
from fractions import Fraction

from ratcert import (
    Combination,
    Separation,
    farkas,
    fredholm,
    mat,
    stiemke,
    vec,
    verify_certificate,
)

# A system with a nonnegative solution: b sits inside the cone.
A = mat([[2, 1], [0, 1]])
b = vec([3, 1])
cert = farkas(A, b)
print("farkas on a solvable system:", cert)
print("  verifier says:", verify_certificate("far", A, b, cert))

# Push b outside the cone and the answer flips to a separating functional.
b_out = vec([-1, 2])
cert = farkas(A, b_out)
print("farkas on an unsolvable system:", cert)
print("  verifier says:", verify_certificate("far", A, b_out, cert))

# The verifier is independent: corrupt the certificate and it notices.
if isinstance(cert, Separation):
    forged = Separation(tuple(-e for e in cert.functional))
    print("  forged functional:", verify_certificate("far", A, b_out, forged))

# Equality systems (sign-free x) go through the same machinery.  Here the
# rows are proportional but the right-hand side is not:
A2 = mat([[1, 2], [2, 4]])
print("fredholm:", fredholm(A2, vec([1, 1])))
print("fredholm:", fredholm(A2, vec([1, 2])))

# And the strict-positivity question behind arbitrage detection: either
# some row combination has semipositive image, or an interior measure
# annihilates the matrix.
print("stiemke:", stiemke(mat([[1, -1]])))
print("stiemke:", stiemke(mat([[1, Fraction(1, 2)]])))
