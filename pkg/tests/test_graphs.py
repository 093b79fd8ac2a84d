import random

import pytest

from f1arrange.arrangement import is_essential, normalize
from f1arrange.errors import NonSimpleCycle, ParseError
from f1arrange.f1 import torification_verdict
from f1arrange.graphs import (
    CycleBasis,
    Graph,
    blocks,
    build_cycle_arrangement,
    eta_table,
    format_graph,
    fundamental_basis,
    is_cactus,
    is_separated,
    iter_spanning_forests,
    parse_graph,
    random_spanning_forest,
    spanning_forest,
    spanning_forest_count,
    theorem44_report,
)
from f1arrange.lattice import characteristic_polynomial
from f1arrange.linalg import rank

from oracles import (
    brute_cactus,
    brute_separated_basis_exists,
    brute_spanning_forests,
    random_cactus,
    random_multigraph,
)

TRIANGLE = Graph(3, ((0, 1), (1, 2), (2, 0)))
THETA = Graph(2, ((0, 1), (0, 1), (0, 1)))
BOWTIE = Graph(5, ((0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)))
K4 = Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
PATH = Graph(4, ((0, 1), (1, 2), (2, 3)))


def is_circulation(g, vec):
    balance = [0] * g.vertex_count
    for (u, v), c in zip(g.edges, vec):
        balance[u] -= c
        balance[v] += c
    return not any(balance)


def test_spanning_forest_examples():
    assert spanning_forest(TRIANGLE).edge_indices == {0, 1}
    assert spanning_forest(THETA).edge_indices == {0}
    assert spanning_forest(PATH).edge_indices == {0, 1, 2}
    assert spanning_forest(Graph(2, ((0, 0), (0, 1)))).edge_indices == {1}


def test_fundamental_basis_triangle():
    b = fundamental_basis(TRIANGLE, spanning_forest(TRIANGLE))
    assert b.cycles == ((1, 1, 1),)
    assert b.labels == (2,)


def test_fundamental_basis_theta():
    b = fundamental_basis(THETA, spanning_forest(THETA))
    # C_2 = e_2 - e_1, C_3 = e_3 - e_1 (1-based edge names)
    assert b.cycles == ((-1, 1, 0), (-1, 0, 1))


def test_fundamental_basis_bowtie():
    b = fundamental_basis(BOWTIE, spanning_forest(BOWTIE))
    assert len(spanning_forest(BOWTIE)) == 4
    assert b.supports() == [[0, 1, 2], [3, 4, 5]]


def test_loop_is_unit_cycle():
    g = Graph(2, ((0, 1), (1, 1)))
    b = fundamental_basis(g, spanning_forest(g))
    assert b.cycles == ((0, 1),)


def test_eta_table_theta():
    eta = eta_table(THETA, fundamental_basis(THETA, spanning_forest(THETA)))
    assert eta.rows == ((-1, -1), (1, 0), (0, 1))


def test_eta_bridge_row_is_zero():
    g = Graph(4, ((0, 1), (1, 2), (2, 0), (2, 3)))
    eta = eta_table(g, fundamental_basis(g, spanning_forest(g)))
    assert eta.rows[3] == (0,)
    assert eta.bridges() == [3]


def test_eta_loop_row_is_unit():
    g = Graph(1, ((0, 0),))
    eta = eta_table(g, fundamental_basis(g, spanning_forest(g)))
    assert eta.rows == ((1,),)


def test_cycle_arrangements():
    assert build_cycle_arrangement(THETA) == normalize([[1, 0], [0, 1], [1, 1]], 2)
    assert build_cycle_arrangement(TRIANGLE) == normalize([[1]], 1)
    assert build_cycle_arrangement(BOWTIE) == normalize([[1, 0], [0, 1]], 2)
    assert build_cycle_arrangement(K4).n == 6


def test_is_separated():
    assert is_separated(fundamental_basis(BOWTIE, spanning_forest(BOWTIE)))
    assert not is_separated(fundamental_basis(THETA, spanning_forest(THETA)))
    assert is_separated(fundamental_basis(TRIANGLE, spanning_forest(TRIANGLE)))
    with pytest.raises(NonSimpleCycle):
        is_separated(CycleBasis(((2, 0, 1),)))


def test_cactus_examples():
    assert is_cactus(BOWTIE)
    assert not is_cactus(THETA)
    assert is_cactus(PATH)
    assert not is_cactus(K4)
    assert is_cactus(Graph(2, ((0, 1), (1, 0))))          # digon
    assert is_cactus(Graph(1, ((0, 0), (0, 0))))          # two loops
    assert not is_cactus(Graph(2, ((0, 1), (1, 0), (0, 1))))


def test_blocks_partition_edges():
    rng = random.Random(8)
    for _ in range(100):
        g = random_multigraph(rng)
        bs = blocks(g)
        flat = sorted(e for b in bs for e in b)
        assert flat == list(range(g.edge_count))


def test_theorem44_named():
    r = theorem44_report(BOWTIE)
    assert r.verdict and all(r.conditions.values())
    assert r.witness["kind"] == "separated_basis"
    assert r.witness["cycles"] == [[0, 1, 2], [3, 4, 5]]

    r = theorem44_report(THETA)
    assert not r.verdict and not any(r.conditions.values())
    assert r.witness["kind"] == "shared_edge"
    assert r.witness["edge"] == 0

    r = theorem44_report(K4)
    assert not r.verdict
    assert (r.b1, r.hyperplane_count) == (3, 6)

    r = theorem44_report(TRIANGLE)
    assert r.verdict


def test_forest_enumeration_against_brute_force():
    rng = random.Random(9)
    for _ in range(80):
        g = random_multigraph(rng, max_vertices=6, max_edges=8)
        got = {f.edge_indices for f in iter_spanning_forests(g)}
        want = set(brute_spanning_forests(g))
        assert got == want
        assert spanning_forest_count(g) == len(want)


def test_random_forest_is_spanning():
    rng = random.Random(10)
    for _ in range(50):
        g = random_multigraph(rng)
        f = random_spanning_forest(g, rng)
        assert len(f) == g.vertex_count - g.components()
        assert f.edge_indices in set(brute_spanning_forests(g)) or g.edge_count > 10


def test_basis_properties_on_random_graphs():
    rng = random.Random(12)
    for _ in range(150):
        g = random_multigraph(rng)
        f = spanning_forest(g)
        b = fundamental_basis(g, f)
        assert len(b) == g.betti1()
        if len(b):
            assert rank(list(b.cycles)) == g.betti1()
        for cyc, label in zip(b.cycles, b.labels):
            assert is_circulation(g, cyc)
            assert cyc[label] == 1
            assert set(cyc) <= {-1, 0, 1}
        # every non-forest edge lies in exactly one fundamental cycle
        for e in range(g.edge_count):
            if e not in f:
                assert sum(1 for cyc in b.cycles if cyc[e]) == 1


def test_lemma41_and_forest_independence():
    rng = random.Random(13)
    for _ in range(80):
        g = random_multigraph(rng, max_vertices=8, max_edges=12)
        a = build_cycle_arrangement(g)
        assert is_essential(a)
        assert a.n >= g.betti1()
        chi = characteristic_polynomial(a)
        for f in [random_spanning_forest(g, rng) for _ in range(4)]:
            other = build_cycle_arrangement(g, f)
            assert other.n == a.n
            assert characteristic_polynomial(other) == chi


def test_theorem44_against_brute_force_oracles():
    rng = random.Random(14)
    for _ in range(120):
        g = random_multigraph(rng, max_vertices=6, max_edges=9)
        r = theorem44_report(g)
        assert r.conditions["cactus"] == brute_cactus(g)
        assert r.conditions["vi"] == brute_separated_basis_exists(g, g.betti1())
        assert r.verdict == torification_verdict(r.arrangement).torifiable


def test_glued_cacti_are_torifiable():
    rng = random.Random(15)
    for _ in range(60):
        g = random_cactus(rng, blocks=rng.randint(1, 5))
        r = theorem44_report(g)
        assert r.verdict
        assert all(r.conditions.values())


def test_sampling_path_when_forest_count_exceeds_cap():
    r = theorem44_report(K4, enumeration_cap=5, samples=20, seed=1)
    assert not r.forests_exhaustive
    assert r.forests_checked == 20
    assert not r.verdict


def test_parse_graph():
    g = parse_graph("# bowtie\ngraph vertices=5\nedge 0 1\nedge 1 2\nedge 2 0\nedge 0 3\nedge 3 4\nedge 4 0\n")
    assert g == BOWTIE
    assert parse_graph(format_graph(THETA)) == THETA


@pytest.mark.parametrize("text", [
    "",
    "graph\n",
    "graph vertices=x\n",
    "graph vertices=2\nedge 0\n",
    "graph vertices=2\nedge 0 2\n",
    "graph vertices=2\nvertex 0 1\n",
    "graph vertices=2\nedge a b\n",
])
def test_parse_graph_errors(text):
    with pytest.raises(ParseError):
        parse_graph(text)
