"""Shared fixtures: the builtin presentations and their completed systems."""

import pytest

from koszul_lab.algebra import MonomialOrder, parse_poly
from koszul_lab.config import reset_settings
from koszul_lab.presentations import (
    GR_K3_ORDER, K3_ORDER, free3_fixture, gr_k3_fixture, k3_fixture, k3_generators, nonkoszul3_fixture,
)
from koszul_lab.rewrite import complete
from koszul_lab.utils.paths import set_data_dir


@pytest.fixture(autouse=True)
def clean_runtime():
    reset_settings()
    set_data_dir(None)
    yield
    reset_settings()
    set_data_dir(None)


@pytest.fixture(scope="session")
def gens():
    return k3_generators()


@pytest.fixture(scope="session")
def k3():
    return k3_fixture()


@pytest.fixture(scope="session")
def gr():
    return gr_k3_fixture()


@pytest.fixture(scope="session")
def free3():
    return free3_fixture()


@pytest.fixture(scope="session")
def nonkoszul3():
    return nonkoszul3_fixture()


@pytest.fixture(scope="session")
def k3_order(gens):
    return MonomialOrder.parse(K3_ORDER, gens)


@pytest.fixture(scope="session")
def gr_order(gens):
    return MonomialOrder.parse(GR_K3_ORDER, gens)


@pytest.fixture(scope="session")
def k3_system(k3, k3_order):
    return complete(k3, k3_order, 3)


@pytest.fixture(scope="session")
def gr_system(gr, gr_order):
    return complete(gr, gr_order, 8)


@pytest.fixture
def poly(gens):
    """Parse K_3-alphabet text into a rational polynomial."""
    def parse(text):
        return parse_poly(text, gens)
    return parse


@pytest.fixture
def word_labels():
    """Render words of a system as label strings (lhs words by default)."""
    def render(system, words=None):
        gens = system.generators
        words = system.lhs_words() if words is None else words
        return {"".join(gens[g].label for g in w) for w in words}
    return render
