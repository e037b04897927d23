"""Shared random-instance builders for the test suite."""
from sgs import Graph, Potential


def random_graph(rng, n_min=2, n_max=12, p_low=0.15, p_high=0.9) -> Graph:
    n = int(rng.integers(n_min, n_max + 1))
    p = rng.uniform(p_low, p_high)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def random_tree(rng, n) -> Graph:
    edges = [(int(rng.integers(0, i)), i) for i in range(1, n)]
    return Graph(n, edges)


def uniform_potential(rng, n, low, high) -> Potential:
    return Potential(rng.uniform(low, high, n))
