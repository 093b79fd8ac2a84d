"""Boolean arrangements and their torus decompositions.

The complement of n independent hyperplanes in l-space is a product of n
punctured lines and l - n lines, so its class (L - 1)^n L^(l - n) splits into
tori.  We check the split against point counts over small prime fields.
"""

from f1arrange import coordinate_arrangement, count_points, normalize, torification_verdict

for ell in range(1, 5):
    for n in range(ell + 1):
        tr = torification_verdict(coordinate_arrangement(n, ell))
        parts = " + ".join(f"{m}*G_m^{d}" for d, m in tr.torus_decomposition)
        counts = []
        for p in (3, 5, 7):
            tori = sum(m * (p - 1) ** d for d, m in tr.torus_decomposition)
            pts = count_points(coordinate_arrangement(n, ell), p)
            assert tori == pts
            counts.append(pts)
        print(f"n={n} l={ell}: chi = {tr.charpoly.pretty():<28} {parts:<48} points at 3,5,7: {counts}")

# Boolean-ness survives any invertible change of coordinates
a = normalize([[1, 2, 0], [0, 1, -1], [3, 0, 1]], 3)
tr = torification_verdict(a)
print("\nskew frame:", tr.verdict, tr.torus_decomposition, "chi =", tr.charpoly.pretty())
