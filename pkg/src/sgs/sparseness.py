"""Sparseness constants, density thresholds, and Cheeger constants.

For a finite graph with potential q and a >= 0, the minimal k making
every vertex subset W satisfy

    2|E_W| <= k|W| + a(|dW| + q_+(W))

is the maximum over nonempty W of (2|E_W| - a(|dW| + q_+(W))) / |W|.
Boundaries are host-aware throughout (cut edges plus deficits), so the
constants computed on a truncation certify the infinite host.

Two routes are provided for every optimization: a brute-force oracle
that enumerates all subsets (guarded to 22 vertices) and a production
path running Dinkelbach's ratio iteration with each linearized
subproblem solved exactly by a minimum s-t cut.  All flow arithmetic is
exact: float inputs are dyadic rationals and are converted losslessly
to fractions, capacities are rescaled to integers, and the iteration
terminates because the achievable ratios form a finite set.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from .graphs import Graph, Potential, SubsetStats, subset_stats
from .maxflow import Dinic

__all__ = [
    "SparsenessCertificate", "CheegerCertificate", "SparsityThreshold",
    "kmin_bruteforce", "kmin_flow", "amin_zero_k",
    "cheeger", "cheeger_lower_bound", "potential_class_kappa",
    "ENUMERATION_LIMIT",
]

ENUMERATION_LIMIT = 22
_MAX_RATIO_ITERATIONS = 64


@dataclass(frozen=True)
class SparsenessCertificate:
    """Witness subset for a sparseness query at a fixed ``a``.

    ``ratio`` is the achieved value of (2|E_W| - a(|dW|+q_+(W)))/|W|;
    ``k`` clamps it at zero (``clamped`` records when that happened).
    """
    a: float
    k: float
    ratio: float
    witness: tuple[int, ...]
    stats: SubsetStats
    clamped: bool


@dataclass(frozen=True)
class CheegerCertificate:
    """Witness subset attaining the isoperimetric minimum over a region."""
    ratio: float
    witness: tuple[int, ...]
    stats: SubsetStats
    region: tuple[int, ...]


@dataclass(frozen=True)
class SparsityThreshold:
    """Least ``a`` such that the pair is (a, 0)-sparse; may be infinite."""
    value: float
    witness: tuple[int, ...]
    stats: SubsetStats


# -- exact-arithmetic helpers ---------------------------------------------

def _as_fraction(x, name: str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    xf = float(x)
    if not math.isfinite(xf):
        raise ValueError(f"{name} must be finite")
    return Fraction(xf)  # exact: IEEE floats are dyadic rationals


def _fraction_values(values: np.ndarray) -> list[Fraction]:
    out = []
    for v in values:
        v = float(v)
        if not math.isfinite(v):
            raise ValueError("potential values must be finite")
        out.append(Fraction(v))
    return out


def _scaled_ints(values: Sequence[Fraction]) -> tuple[list[int], int]:
    den = 1
    for v in values:
        den = lcm(den, v.denominator)
    return [int(v * den) for v in values], den


def _float(x: Fraction) -> float:
    return x.numerator / x.denominator


# -- subset enumeration tables ---------------------------------------------

def _popcount(arr: np.ndarray) -> np.ndarray:
    return np.bitwise_count(arr).astype(np.int64)


def _subset_tables(local_masks: Sequence[int],
                   weights: dict[str, np.ndarray]) -> dict[str, np.ndarray]:
    """Induced-edge counts and linear sums for all subsets of n <= 22 vertices.

    ``local_masks[i]`` is the adjacency bitmask of vertex i restricted
    to the enumerated vertex set.  Entry S of each returned array is the
    value for the subset with bitmask S.
    """
    n = len(local_masks)
    total = 1 << n
    masks = np.asarray(local_masks, dtype=np.uint64)
    out = {"edges": np.zeros(total, dtype=np.int64)}
    for key, w in weights.items():
        out[key] = np.zeros(total, dtype=w.dtype)
    # subsets with lowest bit b reduce to subsets whose lowest bit is
    # higher, so fill from the top bit down
    for b in reversed(range(n)):
        step = 1 << (b + 1)
        rest = np.arange(0, total, step, dtype=np.uint64)
        sub = (rest | np.uint64(1 << b)).astype(np.int64)
        rest_i = rest.astype(np.int64)
        out["edges"][sub] = out["edges"][rest_i] + _popcount(masks[b] & rest)
        for key, w in weights.items():
            out[key][sub] = out[key][rest_i] + w[b]
    return out


def _mask_vertices(mask: int, vertex_map: Sequence[int]) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(vertex_map[i])
        mask >>= 1
        i += 1
    return tuple(out)


def _lexicographic_best(masks: Iterable[int], vertex_map: Sequence[int]) -> int:
    return min(masks, key=lambda m: _mask_vertices(m, vertex_map))


def _check_potential(graph: Graph, potential: Potential | None) -> Potential:
    if potential is None:
        return Potential.zero(graph)
    if len(potential) != graph.vertex_count:
        raise ValueError("potential length does not match graph")
    return potential


# -- k_min ------------------------------------------------------------------

def kmin_bruteforce(graph: Graph, potential: Potential | None,
                    a) -> SparsenessCertificate:
    """Exact k_min(a) by enumerating every nonempty subset (|V| <= 22).

    Ties are broken by smallest witness size, then lexicographically
    smallest vertex list.
    """
    n = graph.vertex_count
    if n > ENUMERATION_LIMIT:
        raise ValueError(
            f"graph too large for enumeration ({n} > {ENUMERATION_LIMIT})")
    potential = _check_potential(graph, potential)
    a_fr = _as_fraction(a, "a")
    if a_fr < 0:
        raise ValueError("a must be non-negative")
    af = _float(a_fr)
    tables = _subset_tables(graph.neighbor_masks(), {
        "deg": graph.host_degree.astype(np.float64),
        "qplus": potential.plus,
    })
    size = _popcount(np.arange(1 << n, dtype=np.uint64))
    boundary = tables["deg"] - 2.0 * tables["edges"]
    num = 2.0 * tables["edges"] - af * (boundary + tables["qplus"])
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = num / size
    ratios[0] = -np.inf
    best = float(np.max(ratios))
    cand = np.flatnonzero(ratios == best)
    sizes = size[cand]
    cand = cand[sizes == sizes.min()]
    mask = _lexicographic_best((int(c) for c in cand), range(n))
    witness = _mask_vertices(mask, range(n))
    return _kmin_certificate(graph, potential, af, witness)


def _kmin_certificate(graph: Graph, potential: Potential, a: float,
                      witness: tuple[int, ...]) -> SparsenessCertificate:
    stats = subset_stats(graph, potential, witness)
    ratio = (2.0 * stats.induced_edges
             - a * (stats.boundary + stats.q_plus_sum)) / stats.size
    return SparsenessCertificate(a=a, k=max(0.0, ratio), ratio=ratio,
                                 witness=witness, stats=stats,
                                 clamped=ratio < 0.0)


def _kmin_exact_ratio(graph: Graph, qplus: Sequence[Fraction], a: Fraction,
                      witness: Sequence[int]) -> Fraction:
    members = set(witness)
    induced = sum(1 for (u, v) in graph.edges if u in members and v in members)
    degsum = int(sum(int(graph.host_degree[x]) for x in members))
    boundary = degsum - 2 * induced
    qp = sum((qplus[x] for x in members), Fraction(0))
    return (2 * induced - a * (boundary + qp)) / len(members)


def _vertex_cut_argbest(graph: Graph, vertex_weight: Sequence[Fraction],
                        edge_cost: Fraction,
                        deficit_cost: Fraction) -> tuple[Fraction, list[int]]:
    """Maximize sum_{x in W} w(x) - edge_cost * cross(W) - deficit_cost * def(W).

    Returns the optimum (0 for the empty set is always feasible) and an
    attaining subset, via a single minimum s-t cut on integer-rescaled
    capacities.
    """
    n = graph.vertex_count
    scaled, den = _scaled_ints(list(vertex_weight) + [edge_cost, deficit_cost])
    weights, ecost, dcost = scaled[:n], scaled[n], scaled[n + 1]
    net = Dinic(n + 2)
    s, t = n, n + 1
    total_positive = 0
    for x in range(n):
        src = max(weights[x], 0)
        snk = max(-weights[x], 0) + dcost * int(graph.deficit[x])
        if src:
            net.add_edge(s, x, src)
            total_positive += src
        if snk:
            net.add_edge(x, t, snk)
    for (u, v) in graph.edges:
        net.add_edge(u, v, ecost, ecost)
    flow = net.max_flow(s, t)
    best = Fraction(total_positive - flow, den)
    side = [v for v in net.min_cut_source_side(s) if v < n]
    return best, side


def kmin_flow(graph: Graph, potential: Potential | None,
              a) -> SparsenessCertificate:
    """Exact k_min(a) by ratio iteration with min-cut subproblems.

    Matches :func:`kmin_bruteforce` exactly on the optimal value; the
    witness may differ when several subsets attain it.  For parameter k,
    the subproblem max_W [sum_{x in W}(deg(x) - a q_+(x) - k) -
    (1+a)|dW|] is a minimum cut (source arcs for positive vertex
    weights, sink arcs for negative ones, bidirected internal arcs of
    capacity (1+a), and sink-side capacity (1+a) deficit(x) for host
    deficits); k increases to the attained ratio until no strictly
    improving subset remains.
    """
    potential = _check_potential(graph, potential)
    a_fr = _as_fraction(a, "a")
    if a_fr < 0:
        raise ValueError("a must be non-negative")
    qplus = _fraction_values(potential.plus)
    n = graph.vertex_count
    witness = tuple(range(n))
    k = _kmin_exact_ratio(graph, qplus, a_fr, witness)
    edge_cost = 1 + a_fr
    for _ in range(_MAX_RATIO_ITERATIONS):
        weights = [Fraction(int(graph.host_degree[x])) - a_fr * qplus[x] - k
                   for x in range(n)]
        gain, side = _vertex_cut_argbest(graph, weights, edge_cost, edge_cost)
        if gain <= 0:
            return _kmin_certificate(graph, potential, _float(a_fr), witness)
        witness = tuple(sorted(side))
        new_k = _kmin_exact_ratio(graph, qplus, a_fr, witness)
        assert new_k > k
        k = new_k
    raise RuntimeError("ratio iteration exceeded 64 steps")


# -- (a, 0) threshold ---------------------------------------------------------

def _amin_parts(graph: Graph, qplus: Sequence[Fraction],
                witness: Sequence[int]) -> tuple[int, Fraction]:
    members = set(witness)
    induced = sum(1 for (u, v) in graph.edges if u in members and v in members)
    degsum = int(sum(int(graph.host_degree[x]) for x in members))
    boundary = degsum - 2 * induced
    qp = sum((qplus[x] for x in members), Fraction(0))
    return 2 * induced, boundary + qp


def amin_zero_k(graph: Graph, potential: Potential | None) -> SparsityThreshold:
    """Least a for which the pair is (a, 0)-sparse.

    Equals max over nonempty W of 2|E_W| / (|dW| + q_+(W)); infinite
    when some W has induced edges but empty (host-aware) boundary and no
    positive potential mass.
    """
    potential = _check_potential(graph, potential)
    qplus = _fraction_values(potential.plus)
    n = graph.vertex_count
    if graph.edge_count == 0:
        return SparsityThreshold(0.0, (0,), subset_stats(graph, potential, (0,)))
    witness = tuple(range(n))
    num, den = _amin_parts(graph, qplus, witness)
    if den == 0:
        return SparsityThreshold(math.inf, witness,
                                 subset_stats(graph, potential, witness))
    a = Fraction(num, 1) / den
    for _ in range(_MAX_RATIO_ITERATIONS):
        weights = [Fraction(int(graph.host_degree[x])) - a * qplus[x]
                   for x in range(n)]
        gain, side = _vertex_cut_argbest(graph, weights, 1 + a, 1 + a)
        if gain <= 0:
            return SparsityThreshold(_float(a), witness,
                                     subset_stats(graph, potential, witness))
        witness = tuple(sorted(side))
        num, den = _amin_parts(graph, qplus, witness)
        if den == 0:
            return SparsityThreshold(math.inf, witness,
                                     subset_stats(graph, potential, witness))
        new_a = Fraction(num, 1) / den
        assert new_a > a
        a = new_a
    raise RuntimeError("ratio iteration exceeded 64 steps")


# -- Cheeger constants --------------------------------------------------------

def _region_indices(graph: Graph, region) -> tuple[int, ...]:
    if region is None:
        return tuple(range(graph.vertex_count))
    seen = set()
    for x in region:
        x = int(x)
        if not (0 <= x < graph.vertex_count):
            raise ValueError(f"region vertex {x} out of range")
        seen.add(x)
    if not seen:
        raise ValueError("region must be nonempty")
    return tuple(sorted(seen))


def _cheeger_certificate(graph: Graph, potential: Potential,
                         witness: tuple[int, ...],
                         region: tuple[int, ...]) -> CheegerCertificate:
    stats = subset_stats(graph, potential, witness)
    den = stats.degree_sum + stats.q_sum
    num = stats.boundary + stats.q_sum
    ratio = 0.0 if den == 0 else num / den
    return CheegerCertificate(ratio=ratio, witness=witness, stats=stats,
                              region=region)


def _cheeger_bruteforce(graph: Graph, potential: Potential,
                        region: tuple[int, ...]) -> CheegerCertificate:
    m = len(region)
    if m > ENUMERATION_LIMIT:
        raise ValueError(
            f"region too large for enumeration ({m} > {ENUMERATION_LIMIT})")
    pos = {x: i for i, x in enumerate(region)}
    local_masks = []
    for x in region:
        mask = 0
        for y in graph.neighbors(x):
            if y in pos:
                mask |= 1 << pos[y]
        local_masks.append(mask)
    tables = _subset_tables(local_masks, {
        "deg": graph.host_degree[np.asarray(region)].astype(np.float64),
        "q": potential.values[np.asarray(region)],
    })
    boundary = tables["deg"] - 2.0 * tables["edges"]
    num = boundary + tables["q"]
    den = tables["deg"] + tables["q"]
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = np.where(den == 0.0, 0.0, num / den)
    ratios[0] = np.inf
    best = float(np.min(ratios))
    cand = np.flatnonzero(ratios == best)
    size = _popcount(cand.astype(np.uint64))
    cand = cand[size == size.min()]
    mask = _lexicographic_best((int(c) for c in cand), region)
    witness = _mask_vertices(mask, region)
    return _cheeger_certificate(graph, potential, witness, region)


def _cheeger_ratio_exact(graph: Graph, q: Sequence[Fraction],
                         witness: Sequence[int]) -> tuple[Fraction, Fraction]:
    members = set(witness)
    induced = sum(1 for (u, v) in graph.edges if u in members and v in members)
    degsum = int(sum(int(graph.host_degree[x]) for x in members))
    qsum = sum((q[x] for x in members), Fraction(0))
    return Fraction(degsum - 2 * induced) + qsum, Fraction(degsum) + qsum


def _cheeger_cut(graph: Graph, q: Sequence[Fraction], region: tuple[int, ...],
                 t: Fraction) -> tuple[bool, tuple[int, ...]]:
    """Strictly improving subset for the Cheeger descent, if one exists.

    Minimizes |dW| + (1-t) q(W) - t deg(W) over W inside the region via
    one min-cut; a negative optimum certifies a subset of ratio < t.
    """
    pos = {x: i for i, x in enumerate(region)}
    inside = set(region)
    costs = []
    for x in region:
        ext = int(graph.deficit[x]) + sum(1 for y in graph.neighbors(x)
                                          if y not in inside)
        costs.append(Fraction(ext) + (1 - t) * q[x]
                     - t * int(graph.host_degree[x]))
    scaled, _den = _scaled_ints(costs + [Fraction(1)])
    cint, unit = scaled[:-1], scaled[-1]
    m = len(region)
    net = Dinic(m + 2)
    s, snk = m, m + 1
    baseline = 0
    for i, c in enumerate(cint):
        if c > 0:
            net.add_edge(i, snk, c)
        elif c < 0:
            net.add_edge(s, i, -c)
            baseline += -c
    for (u, v) in graph.edges:
        if u in pos and v in pos:
            net.add_edge(pos[u], pos[v], unit, unit)
    flow = net.max_flow(s, snk)
    if flow - baseline >= 0:
        return False, ()
    side = [region[i] for i in net.min_cut_source_side(s) if i < m]
    return True, tuple(sorted(side))


def _cheeger_flow(graph: Graph, potential: Potential,
                  region: tuple[int, ...]) -> CheegerCertificate:
    if np.any(potential.values[np.asarray(region)] < 0):
        raise ValueError(
            "flow Cheeger method requires a non-negative potential on the region")
    q = _fraction_values(potential.values)
    # zero-denominator convention: an isolated massless vertex gives ratio 0
    for x in region:
        if int(graph.host_degree[x]) == 0 and q[x] == 0:
            return _cheeger_certificate(graph, potential, (x,), region)
    witness = (region[0],)  # every singleton has ratio exactly 1
    t = Fraction(1)
    for _ in range(_MAX_RATIO_ITERATIONS):
        improved, side = _cheeger_cut(graph, q, region, t)
        if not improved:
            return _cheeger_certificate(graph, potential, witness, region)
        num, den = _cheeger_ratio_exact(graph, q, side)
        new_t = num / den
        assert new_t < t
        witness, t = side, new_t
    raise RuntimeError("ratio iteration exceeded 64 steps")


def cheeger(graph: Graph, potential: Potential | None, region=None,
            method: str = "flow") -> CheegerCertificate:
    """Isoperimetric constant of a region: min over nonempty W inside it
    of (|dW| + q(W)) / (deg(W) + q(W)), boundary taken in the full host.

    The quotient is 0 by convention when its denominator vanishes.
    ``method`` is ``flow`` (ratio descent via min-cuts, exact),
    ``bruteforce`` (enumeration, region up to 22 vertices), or ``both``
    (run both, check agreement to 1e-9, return the enumerated one).
    """
    potential = _check_potential(graph, potential)
    idx = _region_indices(graph, region)
    if method == "bruteforce":
        return _cheeger_bruteforce(graph, potential, idx)
    if method == "flow":
        return _cheeger_flow(graph, potential, idx)
    if method == "both":
        brute = _cheeger_bruteforce(graph, potential, idx)
        flow = _cheeger_flow(graph, potential, idx)
        if abs(brute.ratio - flow.ratio) > 1e-9:
            raise RuntimeError(
                f"cheeger methods disagree: {brute.ratio} vs {flow.ratio}")
        return brute
    raise ValueError(f"unknown method {method!r}")


# -- closed-form helpers ------------------------------------------------------

def cheeger_lower_bound(d: float, k: float, a: float) -> float:
    """(d - k) / (d (1 + a)), clamped at 0; d is the degree-potential floor."""
    if d <= 0:
        raise ValueError("d must be positive")
    return max(0.0, (d - k) / (d * (1.0 + a)))


def potential_class_kappa(graph: Graph, potential: Potential,
                          alpha: float) -> float:
    """Minimal kappa with q_- <= alpha (deg + q_+) + kappa pointwise.

    This is the concrete membership surrogate for the small-negative-
    part potential classes; the pointwise form is equivalent to the
    operator inequality on sparse graphs only.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must lie in (0, 1)")
    potential = _check_potential(graph, potential)
    margin = potential.minus - alpha * (graph.host_degree + potential.plus)
    return max(0.0, float(margin.max()))
