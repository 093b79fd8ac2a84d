"""Cycle-space arrangements of graphs.

Each edge reads off its coefficient in a cycle; the kernels of the nonzero
readings form an arrangement in the cycle space.  It is Boolean exactly when
the graph is a cactus, i.e. no edge lies on two cycles.
"""

from f1arrange import Graph, characteristic_polynomial, theorem44_report

graphs = {
    "triangle": Graph(3, ((0, 1), (1, 2), (2, 0))),
    "bowtie": Graph(5, ((0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0))),
    "theta": Graph(2, ((0, 1), (0, 1), (0, 1))),
    "K4": Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
    "loop + digon": Graph(2, ((0, 0), (0, 1), (1, 0))),
    "path": Graph(4, ((0, 1), (1, 2), (2, 3))),
}

for name, g in graphs.items():
    rec = theorem44_report(g)
    chi = characteristic_polynomial(rec.arrangement)
    verdict = "torifiable" if rec.verdict else "not torifiable"
    print(f"{name}: b1 = {rec.b1}, |A| = {rec.hyperplane_count}, chi = {chi.pretty()}, {verdict}")
    print("   conditions:", rec.conditions)
    print("   witness:", rec.witness)
    print("   forests checked:", rec.forests_checked, "(all)" if rec.forests_exhaustive else "(sampled)")
