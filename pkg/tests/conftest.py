import random
from pathlib import Path

import pytest

from greengrade.tree import line_tree, load_tree, random_tree, star_tree

DATA = Path(__file__).parent / "data"
CORPUS_SEED = 20240611


def data_tree(name):
    return load_tree(DATA / f"{name}.json")


def worked_trees():
    return [data_tree("example6"), data_tree("example11"), data_tree("example4_gamma")]


def small_family():
    return [f(m, e) for f in (star_tree, line_tree) for m in (1, 2, 3) for e in range(1, 7)]


def random_corpus(count=50, seed=CORPUS_SEED, max_e=9, max_m=3):
    rng = random.Random(seed)
    return [random_tree(rng, rng.randint(1, max_e), rng.randint(1, max_m)) for _ in range(count)]


def corpus():
    return worked_trees() + small_family() + random_corpus()


def tree_id(t):
    return f"e{t.e}m{t.m}-{t.exceptional}"


@pytest.fixture
def ex6():
    return data_tree("example6")


@pytest.fixture
def ex11():
    return data_tree("example11")


@pytest.fixture
def gamma():
    return data_tree("example4_gamma")
