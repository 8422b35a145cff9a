import random

import pytest
from hypothesis import given, strategies as st

from greengrade.green_walk import components, green_number
from greengrade.tree import TreeError, random_tree, star_tree

from conftest import data_tree


def test_six_edge_numbering_matches_figure():
    n = green_number(data_tree("example6"), "S1")
    assert n.order == ("S1", "S2", "S3", "S4", "S5", "S6")
    assert n.predecessor == {1: None, 2: None, 3: None, 4: 3, 5: 3, 6: 5}


def test_eleven_edge_numbering_matches_figure():
    n = green_number(data_tree("example11"), "S1")
    assert n.order == tuple(f"S{i}" for i in range(1, 12))
    assert [c.size for c in components(n)] == [8, 3]


def test_components_six_edge():
    comps = components(green_number(data_tree("example6")))
    assert [c.members for c in comps] == [(1,), (2,), (3, 4, 5, 6)]


def test_star_any_start():
    t = star_tree(1, 5)
    n = green_number(t, "S3")
    assert n.order == ("S3", "S4", "S5", "S1", "S2")
    assert all(c.size == 1 for c in components(n))


def test_start_must_touch_exceptional_vertex():
    with pytest.raises(TreeError, match="not adjacent"):
        green_number(data_tree("example6"), "S4")
    with pytest.raises(TreeError, match="unknown"):
        green_number(data_tree("example6"), "nope")


@given(st.integers(0, 10 ** 6), st.integers(1, 10), st.integers(1, 3))
def test_walk_invariants(seed, e, m):
    t = random_tree(random.Random(seed), e, m)
    n = green_number(t)
    assert sorted(n.index.values()) == list(range(1, e + 1))
    assert n.delta[1] == 1
    for i in range(1, e + 1):
        j = n.predecessor[i]
        assert (j is None) == (n.delta[i] == 1)
        if j is not None:
            assert j < i and n.delta[j] == n.delta[i] - 1
    # edges at the exceptional vertex in rotation order from the start
    roots = [n.edge(i) for i in n.roots()]
    assert roots == t.ccw_from(t.exceptional, n.start)


@given(st.integers(0, 10 ** 6), st.integers(1, 10))
def test_other_starts_rotate_the_numbering(seed, e):
    t = random_tree(random.Random(seed), e, 1)
    base = green_number(t)
    for start in t.exceptional_edges():
        other = green_number(t, start)
        l = other.index[base.start] - 1
        assert all(other.index[k] == (base.index[k] - 1 + l) % e + 1 for k in t.edges)
