"""Exact maximum flow / minimum cut on integer capacities.

Dinic's blocking-flow algorithm over adjacency lists.  Capacities are
plain Python integers, so arbitrarily large (rescaled rational)
capacities are handled exactly without overflow checks.
"""
from __future__ import annotations

from collections import deque

__all__ = ["Dinic"]


class Dinic:
    """Max-flow network with ``n`` nodes indexed ``0 .. n-1``."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int, rcap: int = 0) -> None:
        """Directed arc u->v with capacity ``cap``; ``rcap`` on the reverse arc."""
        if cap < 0 or rcap < 0:
            raise ValueError("capacities must be non-negative")
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(rcap)

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        to, cap, head = self.to, self.cap, self.head
        while queue:
            u = queue.popleft()
            for a in head[u]:
                v = to[a]
                if cap[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def _blocking_flow(self, s: int, t: int, level: list[int]) -> int:
        to, cap, head = self.to, self.cap, self.head
        it = [0] * self.n
        total = 0
        path: list[int] = []  # arcs of the current partial path
        u = s
        while True:
            if u == t:
                push = min(cap[a] for a in path)
                for a in path:
                    cap[a] -= push
                    cap[a ^ 1] += push
                total += push
                # retreat to the first saturated arc; stale iterator
                # entries skip saturated arcs on their next scan
                for i, a in enumerate(path):
                    if cap[a] == 0:
                        del path[i:]
                        break
                u = s if not path else to[path[-1]]
                continue
            arc = -1
            while it[u] < len(head[u]):
                a = head[u][it[u]]
                if cap[a] > 0 and level[to[a]] == level[u] + 1:
                    arc = a
                    break
                it[u] += 1
            if arc >= 0:
                path.append(arc)
                u = to[arc]
            else:
                if u == s:
                    break
                level[u] = -1  # dead end; parent skips it via the level test
                path.pop()
                u = s if not path else to[path[-1]]
        return total

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return flow
            flow += self._blocking_flow(s, t, level)

    def min_cut_source_side(self, s: int) -> list[int]:
        """Nodes reachable from ``s`` in the residual graph (after max_flow)."""
        seen = [False] * self.n
        seen[s] = True
        queue = deque([s])
        to, cap, head = self.to, self.cap, self.head
        while queue:
            u = queue.popleft()
            for a in head[u]:
                v = to[a]
                if cap[a] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return [v for v in range(self.n) if seen[v]]
