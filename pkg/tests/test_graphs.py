import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from netspect import graphs
from netspect.errors import ParameterError, ParseError

from conftest import path_graph, star_graph


def test_er_density_near_target():
    dens = [graphs.erdos_renyi(100, 0.1133, seed).density() for seed in range(10)]
    assert all(abs(d - 0.1133) < 0.02 for d in dens)


def test_er_zero_probability_empty():
    assert graphs.erdos_renyi(5, 0.0, 1).m == 0


def test_ba_edge_count_n10_m2():
    # path core contributes m-1 edges, each later node m more
    g = graphs.barabasi_albert(10, 2, seed=7)
    assert g.m == 17


def test_ba_edge_count_formula():
    for n, m in ((50, 5), (100, 6), (30, 3)):
        g = graphs.barabasi_albert(n, m, seed=1)
        assert g.m == (m - 1) + (n - m) * m


def test_ws_zero_rewiring_is_ring():
    g = graphs.watts_strogatz(20, 4, 0.0, seed=0)
    assert np.all(graphs.degree_sequence(g) == 4)
    assert (0, 1) in g.edges and (0, 2) in g.edges


def test_generate_dispatch_and_determinism():
    spec = graphs.GraphModelSpec(model="ER", n=40, p=0.2, seed=9)
    assert graphs.generate(spec).edges == graphs.generate(spec).edges
    with pytest.raises(ParameterError):
        graphs.generate(graphs.GraphModelSpec(model="BA", n=5, m=5, seed=0))
    with pytest.raises(ParameterError):
        graphs.generate(graphs.GraphModelSpec(model="XX", n=5, seed=0))


def test_degree_sequence_examples():
    tri = graphs.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert graphs.degree_sequence(tri).tolist() == [2, 2, 2]
    assert graphs.degree_sequence(star_graph(4)).tolist() == [3, 1, 1, 1]


def test_degree_sum_even():
    for seed in range(5):
        g = graphs.erdos_renyi(30, 0.3, seed)
        assert graphs.degree_sequence(g).sum() == 2 * g.m


def test_er_expected_edge_count():
    n, p = 100, 0.1
    target = n * (n - 1) / 2 * p
    mean = np.mean([graphs.erdos_renyi(n, p, s).m for s in range(50)])
    assert abs(mean - target) / target < 0.05


def test_edge_list_parse(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("0 1\n1 2\n")
    g = graphs.load_edge_list(f)
    assert g.n == 3 and g.edges == frozenset({(0, 1), (1, 2)})


def test_edge_list_empty(tmp_path):
    f = tmp_path / "e.txt"
    f.write_text("")
    g = graphs.load_edge_list(f)
    assert g.n == 0 and g.m == 0


def test_edge_list_errors(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n2\n")
    with pytest.raises(ParseError, match="line 2"):
        graphs.load_edge_list(bad)
    bad.write_text("0 x\n")
    with pytest.raises(ParseError):
        graphs.load_edge_list(bad)
    bad.write_text("3 3\n")
    with pytest.raises(ParseError):
        graphs.load_edge_list(bad)


def test_edge_list_label_remap(tmp_path):
    f = tmp_path / "lab.txt"
    f.write_text("10 20\n20 30\n")
    g = graphs.load_edge_list(f)
    assert g.n == 3 and g.labels == (10, 20, 30)
    assert g.edges == frozenset({(0, 1), (1, 2)})


@settings(max_examples=40, deadline=None)
@given(n=st.integers(2, 20), seed=st.integers(0, 2 ** 31),
       p=st.floats(0.0, 1.0))
def test_edge_list_roundtrip(n, seed, p, tmp_path_factory):
    g = graphs.erdos_renyi(n, p, seed)
    path = tmp_path_factory.mktemp("rt") / "g.txt"
    graphs.save_edge_list(g, path)
    g2 = graphs.load_edge_list(path)
    assert g2.n == g.n and g2.edges == g.edges


def test_adjacency_validation():
    with pytest.raises(ParameterError):
        graphs.from_adjacency(np.array([[1, 0], [0, 0]]))
    with pytest.raises(ParameterError):
        graphs.from_adjacency(np.array([[0, 1], [0, 0]]))


def test_graph_invariants_reject_bad_edges():
    with pytest.raises(ParameterError):
        graphs.Graph(3, frozenset({(1, 1)}))
    with pytest.raises(ParameterError):
        graphs.Graph(3, frozenset({(0, 5)}))


def test_path_graph_helper():
    g = path_graph(4)
    assert graphs.degree_sequence(g).tolist() == [1, 2, 2, 1]
