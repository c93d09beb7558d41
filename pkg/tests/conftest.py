import pytest

from powerdom import Graph, builtin_graph


@pytest.fixture
def zim():
    return builtin_graph("zim")


@pytest.fixture
def mutated_zim():
    return builtin_graph("mutated_zim")


@pytest.fixture
def fig3():
    return builtin_graph("fig3")


@pytest.fixture
def tadpole():
    return builtin_graph("tadpole")


@pytest.fixture
def ieee39():
    return builtin_graph("ieee39")


@pytest.fixture
def path5():
    labels = [f"p{i}" for i in range(5)]
    return Graph(labels, [(labels[i], labels[i + 1]) for i in range(4)])
