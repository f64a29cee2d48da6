"""
Exact distances to cones and hulls
==================================

The geometric core: the squared distance from a point to a finitely
generated cone is a rational number, computed exactly by enumerating the
independent faces.  No floating point, no tolerance -- the returned
projection carries its own optimality conditions.
"""
from ratcert import (
    caratheodory_reduce,
    cone_distance,
    hull_distance,
    independent_family,
    mat,
    separating_functional,
    vec,
)

# Generators (1,0) and (1,1), written as matrix columns.
A = mat([[1, 1], [0, 1]])

print("independent faces of the cone:", list(independent_family(A)))

# b = (0,1) is outside; the nearest point lies on the second ray.
projection = cone_distance(A, vec([0, 1]))
print("nearest point:", projection.nearest)
print("squared distance:", projection.dist_sq)
print("active face:", projection.face, "with coefficients", projection.coefficients)

# A witness of that distance is the separating functional nearest - b:
xi = separating_functional(A, vec([0, 1]))
print("separating functional:", xi)

# Convex hulls work the same way, with weights summing to one.
hull = hull_distance(A, vec([0, 0]))
print("hull projection:", hull.nearest, "weights", hull.weights, "d^2 =", hull.dist_sq)

# Caratheodory reduction: any conic combination can be rewritten on an
# independent subset of generators without moving the point.
B = mat([[1, 0, 1], [0, 1, 1]])
q = vec([1, 1, 1])
J, slim = caratheodory_reduce(B, q)
print("support after reduction:", J, "coefficients:", slim)
