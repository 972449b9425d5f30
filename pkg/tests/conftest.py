import pytest

from simpletri.exhaustive import all_graphs, all_partial_orders
from simpletri.recognition import recognize


@pytest.fixture(scope="session")
def small_graphs():
    """Every labeled graph with at most 5 vertices, keyed by vertex count."""
    return {n: list(all_graphs(n)) for n in range(6)}


@pytest.fixture(scope="session")
def small_orders():
    """Every labeled partial order with at most 5 elements."""
    return {n: all_partial_orders(n) for n in range(6)}


@pytest.fixture(scope="session")
def recognition_results(small_graphs):
    """recognize() outcome for every graph in the small corpus."""
    return {
        n: [recognize(g) for g in graphs] for n, graphs in small_graphs.items()
    }
