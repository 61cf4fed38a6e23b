"""Smith normal form over the integers and the abelian group a relation matrix presents."""

import random

from autcentral import IntMatrix, from_relations, smith_normal_form

A = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
U, D, V = smith_normal_form(A)
print("A =", A.to_rows())
print("D =", D.to_rows(), " U*A*V == D:", U @ A @ V == D)
print("cokernel:", from_relations(3, A))

rng = random.Random(1)
B = IntMatrix.random(4, 5, 50, rng)
print("\nrandom 4x5:", B.to_rows())
print("diagonal:", smith_normal_form(B)[1].diagonal(), " cokernel:", from_relations(5, B))
