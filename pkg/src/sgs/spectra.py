"""Eigenvalues, optimal form constants, constant conversions, and the
eigenvalue-sandwich machinery.

The central objects are two-sided comparisons

    (1 - at) (deg + q) - kt  <=  Delta + q  <=  (1 + at) (deg + q) + kt

as quadratic forms, with slope parameter ``a_tilde`` in (0, 1) and
offset ``k_tilde >= 0``.  Because eigenvalues are monotone under the
form order, any such comparison pins every eigenvalue of the operator
between affine images of the degree-potential values; the functions
here compute the smallest offsets on a concrete graph, convert between
the combinatorial and the form-bound parameter pairs, and verify the
resulting sandwiches index by index.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .graphs import Graph, PhaseField, Potential
from .operators import HermitianOperator, assemble

__all__ = [
    "FormConstants", "SpectralReport", "DENSE_EIGEN_LIMIT",
    "eigenvalues", "extremal_eigenvalue", "optimal_ktilde",
    "form_to_sparse", "sparse_to_form", "perturb_constants",
    "cheeger_form_slopes", "spectral_edge_bound", "convert_constants",
    "verify_sandwich", "ratio_report", "DEFAULT_ATILDE_GRID",
]

DENSE_EIGEN_LIMIT = 4000
DEFAULT_ATILDE_GRID = tuple(round(0.1 * i, 1) for i in range(1, 10))


@dataclass(frozen=True)
class FormConstants:
    """Slope/offset pair for the degree-control inequality.

    ``side`` records which inequality the offset certifies: ``lower``
    for (1-at)(deg+q) - kt <= Delta+q, ``upper`` for the reverse
    comparison, ``both`` for the two-sided sandwich.
    """
    a_tilde: float
    k_tilde: float
    side: str = "both"

    def __post_init__(self):
        if not 0.0 < self.a_tilde < 1.0:
            raise ValueError("a_tilde must lie in (0, 1)")
        if self.k_tilde < 0.0:
            raise ValueError("k_tilde must be non-negative")
        if self.side not in ("lower", "upper", "both"):
            raise ValueError(f"unknown side {self.side!r}")


@dataclass(frozen=True)
class SpectralReport:
    """Sorted spectra, top-index eigenvalue ratios, and verified bounds."""
    eigenvalues: np.ndarray = field(repr=False)
    diag_eigenvalues: np.ndarray = field(repr=False)
    indices: tuple[int, ...]
    ratios: tuple[float, ...]
    skipped: tuple[int, ...]
    grid: tuple[tuple[float, float, float], ...]  # (a_tilde, k_lower, k_upper)
    bracket: tuple[float, float] | None
    bracket_a_tilde: float | None
    verified: tuple[tuple[str, float], ...]


def _threads() -> int:
    cap = os.environ.get("SGS_THREADS")
    workers = min(4, os.cpu_count() or 1)
    if cap:
        workers = max(1, min(workers, int(cap)))
    return workers


def _thread_map(fn, items):
    items = list(items)
    workers = _threads()
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def eigenvalues(op: HermitianOperator) -> np.ndarray:
    """All eigenvalues, ascending, with multiplicity (dense path)."""
    if op.dimension > DENSE_EIGEN_LIMIT:
        raise ValueError(
            f"dimension {op.dimension} exceeds the dense limit "
            f"{DENSE_EIGEN_LIMIT}; use extremal_eigenvalue for the edges")
    return np.linalg.eigvalsh(op.toarray())


def _lambda_extreme(matrix: sp.spmatrix, which: str) -> float:
    n = matrix.shape[0]
    if n <= DENSE_EIGEN_LIMIT:
        vals = np.linalg.eigvalsh(matrix.toarray())
        return float(vals[-1] if which == "max" else vals[0])
    mode = "LA" if which == "max" else "SA"
    vals = spla.eigsh(matrix.tocsc().astype(np.complex128), k=1, which=mode,
                      return_eigenvectors=False, maxiter=50 * n)
    return float(np.real(vals[0]))


def extremal_eigenvalue(op: HermitianOperator, which: str = "min") -> float:
    """Smallest or largest eigenvalue; iterative beyond the dense limit."""
    if which not in ("min", "max"):
        raise ValueError("which must be 'min' or 'max'")
    return _lambda_extreme(op.matrix, which)


def _operator_pair(graph: Graph, potential: Potential | None,
                   phase: PhaseField | None):
    kind = "magnetic" if phase is not None else "schrodinger"
    op = assemble(graph, potential, phase, kind=kind)
    deg = assemble(graph, potential, kind="degree")
    return op, deg


def optimal_ktilde(graph: Graph, potential: Potential | None, a_tilde: float,
                   side: str = "both",
                   phase: PhaseField | None = None) -> FormConstants:
    """Smallest offsets making the degree comparison hold on this graph.

    The lower offset is max(0, lambda_max((1-at)(deg+q) - (Delta+q))),
    the upper one max(0, lambda_max((Delta+q) - (1+at)(deg+q))); the
    extremes are taken of the explicitly formed difference matrices,
    never of differences of eigenvalue lists.
    """
    if not 0.0 < a_tilde < 1.0:
        raise ValueError("a_tilde must lie in (0, 1)")
    if side not in ("lower", "upper", "both"):
        raise ValueError(f"unknown side {side!r}")
    op, deg = _operator_pair(graph, potential, phase)
    k_lower = k_upper = 0.0
    if side in ("lower", "both"):
        diff = (1.0 - a_tilde) * deg.matrix - op.matrix
        k_lower = max(0.0, _lambda_extreme(diff.tocsr(), "max"))
    if side in ("upper", "both"):
        diff = op.matrix - (1.0 + a_tilde) * deg.matrix
        k_upper = max(0.0, _lambda_extreme(diff.tocsr(), "max"))
    k = {"lower": k_lower, "upper": k_upper,
         "both": max(k_lower, k_upper)}[side]
    return FormConstants(a_tilde=a_tilde, k_tilde=k, side=side)


# -- conversions between constant pairs ---------------------------------------

def form_to_sparse(a_tilde: float, k_tilde: float) -> tuple[float, float]:
    """Sparseness pair implied by a lower form bound:
    a = at / (1 - at) and k = kt / (1 - at)."""
    if not 0.0 < a_tilde < 1.0:
        raise ValueError("a_tilde must lie in (0, 1)")
    if k_tilde < 0.0:
        raise ValueError("k_tilde must be non-negative")
    return a_tilde / (1.0 - a_tilde), k_tilde / (1.0 - a_tilde)


def sparse_to_form(a: float, k: float,
                   a_tilde: float | None = None) -> FormConstants:
    """Form constants certified by an (a, k)-sparse pair (q >= 0).

    For a = 0 the slope is free: pass ``a_tilde`` and receive
    kt = (k/2)(1/at - at).  For a > 0 the slope is dictated:
    at = sqrt(min(1/4, a^2) + 2a + a^2) / (1+a) and
    kt = max(max(3/2, 1/a - a) k / (2(1+a)), 2k(1-at)).
    """
    if a < 0 or k < 0:
        raise ValueError("a and k must be non-negative")
    if a == 0:
        if a_tilde is None:
            raise ValueError("a_tilde must be chosen when a = 0")
        if not 0.0 < a_tilde < 1.0:
            raise ValueError("a_tilde must lie in (0, 1)")
        k_tilde = 0.5 * k * (1.0 / a_tilde - a_tilde)
        return FormConstants(a_tilde=a_tilde, k_tilde=k_tilde, side="both")
    if a_tilde is not None:
        raise ValueError("a_tilde is determined by the formula when a > 0")
    at = math.sqrt(min(0.25, a * a) + 2.0 * a + a * a) / (1.0 + a)
    kt = max(max(1.5, 1.0 / a - a) * k / (2.0 * (1.0 + a)),
             2.0 * k * (1.0 - at))
    return FormConstants(a_tilde=at, k_tilde=kt, side="both")


def perturb_constants(a: float, k: float, alpha: float,
                      c_alpha: float) -> tuple[float, float]:
    """Transport a lower bound (1-a) Q2 - k <= Q1 through a form-small
    perturbation q <= alpha Q1 + C: returns the new (slope, offset) with
    slope (Q2 - q) - offset <= Q1 - q."""
    if not 0.0 < a < 1.0:
        raise ValueError("a must lie in (0, 1)")
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must lie in (0, 1)")
    if k < 0 or c_alpha < 0:
        raise ValueError("k and c_alpha must be non-negative")
    denom = 1.0 - alpha * (1.0 - a)
    slope = (1.0 - alpha) * (1.0 - a) / denom
    offset = ((1.0 - alpha) * k + a * c_alpha) / denom
    return slope, offset


def cheeger_form_slopes(alpha_u: float) -> tuple[float, float]:
    """Two-sided slopes 1 -/+ sqrt(1 - alpha^2) certified by an
    isoperimetric constant (no offsets needed)."""
    if not 0.0 <= alpha_u <= 1.0:
        raise ValueError("alpha_u must lie in [0, 1]")
    root = math.sqrt(max(0.0, 1.0 - alpha_u * alpha_u))
    return 1.0 - root, 1.0 + root


def spectral_edge_bound(d: float, k: float) -> float:
    """d - 2 sqrt((k/2)(d - k/2)), the spectral-edge bound a k-sparse
    graph with degree-potential floor (or ceiling) d satisfies.

    Requires k <= 2d so the square root is real; the value is clamped
    at zero.  Sharp for regular trees.
    """
    if d <= 0:
        raise ValueError("d must be positive")
    if k < 0 or k > 2.0 * d:
        raise ValueError("k must lie in [0, 2d]")
    return max(0.0, d - 2.0 * math.sqrt((k / 2.0) * (d - k / 2.0)))


_CONVERSIONS = {
    "form_to_sparse": form_to_sparse,
    "sparse_to_form": sparse_to_form,
    "perturb": perturb_constants,
    "cheeger_to_form": cheeger_form_slopes,
    "spectral_edge": spectral_edge_bound,
}


def convert_constants(direction: str, **inputs):
    """Dispatch to one of the closed-form constant conversions."""
    try:
        fn = _CONVERSIONS[direction]
    except KeyError:
        raise ValueError(f"unknown conversion {direction!r}") from None
    return fn(**inputs)


# -- sandwich verification ----------------------------------------------------

def verify_sandwich(graph: Graph, potential: Potential | None,
                    constants: FormConstants) -> tuple[np.ndarray, np.ndarray]:
    """Per-index margins of the eigenvalue sandwich implied by ``constants``.

    Index n gets the pair (lam_n(Delta+q) - [(1-at) lam_n(deg+q) - kt],
    [(1+at) lam_n(deg+q) + kt] - lam_n(Delta+q)).  Both arrays are
    non-negative up to eigensolver noise whenever the constants certify
    the corresponding form bound on this graph.
    """
    op, deg = _operator_pair(graph, potential, None)
    lam = eigenvalues(op)
    mu = np.sort(np.real(deg.matrix.diagonal()))
    at, kt = constants.a_tilde, constants.k_tilde
    lower = lam - ((1.0 - at) * mu - kt)
    upper = ((1.0 + at) * mu + kt) - lam
    return lower, upper


def ratio_report(graph: Graph, potential: Potential | None,
                 phase: PhaseField | None = None, top_m: int = 10,
                 atilde_grid=None) -> SpectralReport:
    """Eigenvalue ratios at the top of the spectrum with a rigorous bracket.

    The ratios lam_n(Delta+q) / lam_n(deg+q) are reported for the
    ``top_m`` largest indices (indices with vanishing denominator are
    skipped, not reported as infinities).  For every slope on the grid
    the optimal offsets are computed; the bracket attached to the
    report is [(1-at) - kt_low/m, (1+at) + kt_up/m] with m the smallest
    reported denominator, for the grid slope minimizing its width.
    """
    if top_m < 1:
        raise ValueError("top_m must be positive")
    n = graph.vertex_count
    if top_m > n:
        raise ValueError("top_m exceeds the dimension")
    op, deg = _operator_pair(graph, potential, phase)
    lam = eigenvalues(op)
    mu = np.sort(np.real(deg.matrix.diagonal()))
    window = range(n - top_m, n)
    indices = tuple(i for i in window if mu[i] > 0.0)
    skipped = tuple(i for i in window if mu[i] <= 0.0)
    ratios = tuple(float(lam[i] / mu[i]) for i in indices)
    grid = tuple(atilde_grid) if atilde_grid is not None else DEFAULT_ATILDE_GRID

    def constants_at(at: float) -> tuple[float, float, float]:
        lowc = optimal_ktilde(graph, potential, at, side="lower", phase=phase)
        upc = optimal_ktilde(graph, potential, at, side="upper", phase=phase)
        return at, lowc.k_tilde, upc.k_tilde

    rows = tuple(_thread_map(constants_at, grid))
    bracket = None
    bracket_at = None
    verified: list[tuple[str, float]] = []
    if indices:
        m_min = min(mu[i] for i in indices)
        best_width = math.inf
        for at, klow, kup in rows:
            lo = (1.0 - at) - klow / m_min
            hi = (1.0 + at) + kup / m_min
            if hi - lo < best_width:
                best_width = hi - lo
                bracket = (lo, hi)
                bracket_at = at
        margin = min(min(r - bracket[0] for r in ratios),
                     min(bracket[1] - r for r in ratios))
        verified.append(("ratios_within_bracket", float(margin)))
    for at, klow, kup in rows:
        lower = lam - ((1.0 - at) * mu - klow)
        upper = ((1.0 + at) * mu + kup) - lam
        verified.append((f"sandwich_lower@a_tilde={at:g}", float(lower.min())))
        verified.append((f"sandwich_upper@a_tilde={at:g}", float(upper.min())))
    return SpectralReport(
        eigenvalues=lam, diag_eigenvalues=mu, indices=indices, ratios=ratios,
        skipped=skipped, grid=rows, bracket=bracket,
        bracket_a_tilde=bracket_at, verified=tuple(verified))
