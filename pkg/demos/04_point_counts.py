"""Counting points over F_p.

Over a prime that keeps every small subset of normals at its rational rank,
the complement has exactly chi(p) points.  A prime that merges hyperplanes
breaks this, which is why the count is only trusted after certification.
"""

from f1arrange import certify, characteristic_polynomial, count_points, good_prime, normalize
from f1arrange.arrangement import delete, restrict

a = normalize([[1, 0], [0, 1], [1, 2]], 2)
chi = characteristic_polynomial(a)
print("A = {x, y, x + 2y}, chi(t) =", chi.pretty())
for p in (2, 3, 5, 7):
    print(f"  p={p}: certified={certify(a, p)!s:<5} points={count_points(a, p):>3}  chi(p)={chi(p)}")
print("smallest certified prime:", good_prime(a).p)

# the complement of A minus H splits into the complement of A and that of the restriction to H
p = 5
for h in range(a.n):
    whole, deleted, restricted = count_points(a, p), count_points(delete(a, h), p), count_points(restrict(a, h), p)
    print(f"  H{h}: {deleted} = {whole} + {restricted}")

# a larger one: the braid arrangement x_i = x_j in 4-space
braid = normalize([[int(k == i) - int(k == j) for k in range(4)] for i in range(4) for j in range(i + 1, 4)], 4)
chi = characteristic_polynomial(braid)
print("\nbraid arrangement, chi(t) =", chi.pretty())
for p in (5, 7, 11):
    print(f"  p={p}: points={count_points(braid, p)}  chi(p)={chi(p)}")
