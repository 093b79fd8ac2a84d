"""x1 x2 x3 (x1 + x2 + x3) = 0 in 4-space.

Nonnegative Taylor data at t = 1 is not enough on its own: this arrangement
passes the test and is still not Boolean, because its normals miss the last
coordinate.
"""

from f1arrange import (
    build_lattice,
    charpoly_delres,
    charpoly_mobius,
    grothendieck_class,
    is_essential,
    mobius,
    normalize,
    torification_verdict,
)

a = normalize([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, 0]], 4)

lat = mobius(build_lattice(a))
print("flats by dimension:", dict(sorted(lat.counts_by_dim().items())))
for f in lat.flats:
    print(f"  dim {f.dim}  contains {sorted(f.contains)}  mu = {f.mobius}")

chi = charpoly_mobius(lat)
assert chi == charpoly_delres(a)
print("chi(t) =", chi.pretty())
print("[M]    =", grothendieck_class(chi).pretty())

tr = torification_verdict(a)
print("Taylor coefficients at 1:", tr.taylor.coeffs)
print("essential:", is_essential(a))
print("verdict:", tr.verdict, "| witness:", tr.witness)

# drop the unused coordinate and the same four hyperplanes are essential in 3-space;
# now the Taylor test has to fail
b = normalize([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]], 3)
tb = torification_verdict(b)
print("\nin 3-space: chi(t) =", tb.charpoly.pretty(), "| Taylor", tb.taylor.coeffs, "|", tb.verdict)
