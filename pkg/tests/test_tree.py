import json
import random

import pytest
from hypothesis import given, strategies as st

from greengrade.tree import (TreeError, distances, line_tree, parse_tree, random_tree,
                             star_tree)

from conftest import data_tree


def doc(vertices, edges, exceptional="a", m=1):
    return {"multiplicity": m, "exceptional": exceptional, "vertices": vertices, "edges": edges}


def test_six_edge_tree_accepted():
    t = data_tree("example6")
    assert t.e == 6 and t.m == 1


def test_single_edge():
    t = parse_tree(doc({"a": ["x"], "b": ["x"]}, {"x": ["a", "b"]}, m=3))
    assert (t.e, t.m) == (1, 3)


@pytest.mark.parametrize("bad, message", [
    ("{not json", "malformed document"),
    (json.dumps({"multiplicity": 1}), "missing key"),
    (doc({"a": ["x"], "b": ["x"], "c": ["y"], "d": ["y"]},
         {"x": ["a", "b"], "y": ["c", "d"]}), "not connected"),
    (doc({"a": ["x", "z"], "b": ["x", "y"], "c": ["y", "z"]},
         {"x": ["a", "b"], "y": ["b", "c"], "z": ["c", "a"]}), "not a tree"),
    (doc({"a": ["x", "w"], "b": ["x"]}, {"x": ["a", "b"]}), "dangling edge"),
    (doc({"a": ["x"], "b": ["x"]}, {"x": ["a", "b"]}, m=0), "multiplicity"),
    (doc({"a": ["x"], "b": ["x"]}, {"x": ["a", "b"]}, exceptional="zz"), "unknown exceptional"),
])
def test_distinct_diagnostics(bad, message):
    text = bad if isinstance(bad, str) else json.dumps(bad)
    with pytest.raises(TreeError, match=message):
        parse_tree(text)


def test_builders():
    s = star_tree(1, 6)
    assert s.e == 6 and len(s.rotation["c"]) == 6
    assert star_tree(2, 1).e == 1 and star_tree(2, 1).m == 2
    t = star_tree(3, 4)
    assert parse_tree(t.to_json()).same_as(t)
    line = line_tree(1, 4)
    assert len(line.rotation[line.exceptional]) == 1


def test_rotation_is_cyclic_up_to_start():
    t = star_tree(1, 3)
    d = t.to_dict()
    d["vertices"]["c"] = ["S2", "S3", "S1"]
    assert parse_tree(d).same_as(t)
    d["vertices"]["c"] = ["S2", "S1", "S3"]
    assert not parse_tree(d).same_as(t)


def test_distances_worked_examples():
    d6 = distances(data_tree("example6"))
    assert [d6[f"S{i}"] for i in range(1, 7)] == [1, 1, 1, 2, 2, 3]
    d11 = distances(data_tree("example11"))
    assert d11["S7"] == 3 and d11["S11"] == 3
    assert set(distances(star_tree(2, 5)).delta.values()) == {1}


@given(st.integers(0, 10 ** 6), st.integers(1, 12), st.integers(1, 4))
def test_random_trees_round_trip(seed, e, m):
    t = random_tree(random.Random(seed), e, m)
    assert t.e == e and len(t.vertices) == e + 1
    assert parse_tree(t.to_json()).same_as(t)
    for k, (a, b) in t.edges.items():
        assert k in t.rotation[a] and k in t.rotation[b]


def test_random_tree_is_seeded():
    a = random_tree(random.Random(5), 9, 2)
    b = random_tree(random.Random(5), 9, 2)
    assert a.to_json() == b.to_json()
