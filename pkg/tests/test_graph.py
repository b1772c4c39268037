import numpy as np
import pytest

from girglab.graph import GirgGraph


def _mk(n, edges, d=2):
    w = np.ones(n)
    pos = np.zeros((n, d))
    eu = [e[0] for e in edges]
    ev = [e[1] for e in edges]
    return GirgGraph.from_edges(n, w, pos, eu, ev)


def test_from_edges_builds_sorted_symmetric_csr():
    g = _mk(4, [(2, 0), (1, 3), (0, 1)])
    assert g.edge_count == 3
    assert list(g.neighbors(0)) == [1, 2]
    assert list(g.neighbors(1)) == [0, 3]
    assert np.array_equal(g.edge_array(), [[0, 1], [0, 2], [1, 3]])
    g.validate()


def test_degrees_sum_to_twice_edges():
    g = _mk(5, [(0, 1), (1, 2), (2, 3)])
    assert g.degrees().sum() == 2 * g.edge_count


def test_rejects_self_loops_and_duplicates():
    with pytest.raises(ValueError, match="self-loop"):
        _mk(3, [(1, 1)])
    with pytest.raises(ValueError, match="duplicate"):
        _mk(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError, match="out of range"):
        _mk(3, [(0, 3)])


def test_same_edges():
    a = _mk(4, [(0, 1), (2, 3)])
    b = _mk(4, [(2, 3), (0, 1)])
    c = _mk(4, [(0, 1), (1, 3)])
    assert a.same_edges(b)
    assert not a.same_edges(c)


def test_empty_graph():
    g = _mk(3, [])
    assert g.edge_count == 0
    assert g.edge_array().shape == (0, 2)
    g.validate()
