import numpy as np

from sgs.maxflow import Dinic


def test_textbook_instance():
    # classic 6-node network with max flow 5
    net = Dinic(6)
    for u, v, c in [(0, 1, 3), (0, 2, 3), (1, 2, 2), (1, 3, 3),
                    (2, 4, 2), (3, 4, 4), (3, 5, 2), (4, 5, 3)]:
        net.add_edge(u, v, c)
    assert net.max_flow(0, 5) == 5
    side = set(net.min_cut_source_side(0))
    assert 0 in side and 5 not in side
    # cut capacity across the side equals the flow value
    cut = sum(c for u, v, c in [(0, 1, 3), (0, 2, 3), (1, 2, 2), (1, 3, 3),
                                (2, 4, 2), (3, 4, 4), (3, 5, 2), (4, 5, 3)]
              if u in side and v not in side)
    assert cut == 5


def test_bidirected_arcs_and_big_integers():
    big = 10 ** 30
    net = Dinic(4)
    net.add_edge(0, 1, big)
    net.add_edge(1, 2, big // 2, big // 2)
    net.add_edge(2, 3, big)
    assert net.max_flow(0, 3) == big // 2


def test_disconnected_sink():
    net = Dinic(3)
    net.add_edge(0, 1, 7)
    assert net.max_flow(0, 2) == 0
    assert set(net.min_cut_source_side(0)) == {0, 1}


def test_random_against_matrix_oracle():
    rng = np.random.default_rng(9)
    for _ in range(30):
        n = int(rng.integers(2, 8))
        cap = rng.integers(0, 6, size=(n, n))
        np.fill_diagonal(cap, 0)
        net = Dinic(n)
        for i in range(n):
            for j in range(n):
                if cap[i, j]:
                    net.add_edge(i, j, int(cap[i, j]))
        flow = net.max_flow(0, n - 1)
        # oracle: minimum over all cuts separating 0 from n-1
        best = None
        for mask in range(1 << n):
            if mask & 1 and not (mask >> (n - 1)) & 1:
                value = sum(int(cap[i, j]) for i in range(n) for j in range(n)
                            if (mask >> i) & 1 and not (mask >> j) & 1)
                best = value if best is None else min(best, value)
        assert flow == best
