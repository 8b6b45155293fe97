"""Signless-Laplacian spectral radius q(G) and its principal eigenvector.

Q(G) = D(G) + A(G) is entrywise nonnegative and positive semidefinite, so the
largest eigenvalue is reachable by power iteration from the all-ones vector
(which has positive overlap with the Perron vector on every component).  The
radius of a disconnected graph is the max over components; the reported
eigenvector is supported on one extremal component and zero elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, components

# ---------------------------------------------------------------------------
# Pinned numeric policy.  RESIDUAL_TOL is the certified bound on ||Qx - qx||_2
# for every returned pair; CONVERGENCE_TOL is the Rayleigh-quotient stall test.
# The Rayleigh value converges quadratically in the eigenvector error, so the
# stall test alone would certify nothing about the residual -- the loop exits
# only once BOTH hold.  Q_MARGIN is the band for comparing radii of different
# graphs downstream.
# ---------------------------------------------------------------------------
RESIDUAL_TOL = 1e-10
CONVERGENCE_TOL = 1e-13
MAX_ITERATIONS = 10**6
Q_MARGIN = 1e-9
_COMPONENT_TIE_EPS = 1e-12


@dataclass(frozen=True)
class SpectralData:
    """One certified eigenpair: radius, unit eigenvector, residual, and the
    index (within the component decomposition) of the supporting component.
    A graph with no edges gets q = 0, the zero vector, and support -1."""

    q: float
    x: np.ndarray
    residual: float
    support_component: int


def q_matrix(g: Graph) -> np.ndarray:
    """Dense signless Laplacian D + A."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    d = a.sum(axis=1)
    return a + np.diag(d)


def _power_iteration(g: Graph, residual_tol: float) -> tuple[float, np.ndarray, float]:
    q_mat = q_matrix(g)
    n = g.n
    x = np.full(n, 1.0 / np.sqrt(n))
    prev_q: float | None = None
    for _ in range(MAX_ITERATIONS):
        y = q_mat @ x
        q = float(x @ y)
        residual = float(np.linalg.norm(y - q * x))
        if (
            residual <= 0.5 * residual_tol
            and prev_q is not None
            and abs(q - prev_q) <= CONVERGENCE_TOL
        ):
            return q, x, residual
        prev_q = q
        norm = float(np.linalg.norm(y))
        x = y / norm
    raise ArithmeticError(
        f"power iteration failed to converge within {MAX_ITERATIONS} iterations"
    )


def q_radius(g: Graph, residual_tol: float = RESIDUAL_TOL) -> SpectralData:
    """Largest eigenvalue of Q(G) with a unit nonnegative eigenvector.

    Disconnected input: the per-component radii are compared and the largest
    wins; a later component must beat the incumbent by more than 1e-12, so
    exact ties go to the smallest component index.  The eigenvector is padded
    with zeros outside the winning component (still an eigenvector of the
    whole graph, since the zero rows see only zero neighbors).
    """
    if g.m == 0:
        return SpectralData(0.0, np.zeros(g.n), 0.0, -1)
    decomp = components(g)
    best: tuple[float, np.ndarray, float, int, tuple[int, ...]] | None = None
    for idx, (part, verts) in enumerate(decomp):
        if part.m == 0:
            continue
        q, x, residual = _power_iteration(part, residual_tol)
        if best is None or q > best[0] + _COMPONENT_TIE_EPS:
            best = (q, x, residual, idx, verts)
    assert best is not None
    q, x_part, residual, idx, verts = best
    x = np.zeros(g.n)
    x[list(verts)] = x_part
    return SpectralData(q, x, residual, idx)


def rayleigh_sum(g: Graph, x: np.ndarray) -> float:
    """Sum of (x_u + x_v)^2 over the edges of g.

    For a unit vector this equals x^T Q x; in particular it reproduces q(G)
    when x is the principal eigenvector.  Requires a unit-norm vector of the
    right dimension.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise ValueError(f"dimension mismatch: vector has shape {x.shape}, graph has n={g.n}")
    norm = float(np.linalg.norm(x))
    if abs(norm - 1.0) > 1e-8:
        raise ValueError(f"vector is not unit norm (|x| = {norm!r})")
    return float(sum((x[u] + x[v]) ** 2 for u, v in g.edges()))


def eigen_equation_check(g: Graph, s: SpectralData) -> float:
    """Max over vertices of |q*x_v - d(v)*x_v - sum of x over N(v)|.

    Zero (to numerical precision) exactly when (q, x) solves the vertex-local
    eigenvalue equations of Q(G).
    """
    if g.n == 0:
        return 0.0
    y = q_matrix(g) @ s.x
    return float(np.max(np.abs(s.q * s.x - y)))
