"""Spectral-radius-increasing rewirings.

Three moves, each returning the rewired graph together with the measured
radii.  `rotate` (remove one edge, add another sharing the larger eigenvector
sum) carries an unconditional strict-increase guarantee and enforces its
preconditions; `kelmans_swap` exchanges the partners of two independent edges
and carries a *conditional* lower bound 2(x_vj - x_ui)(x_vi - x_uj) on the
gain, recorded rather than asserted; `pendant_collapse` deletes a set of
edges and reattaches the same count as fresh pendants at a chosen vertex,
preserving the edge count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .graphs import Graph
from .spectral import q_matrix, q_radius

# A rotation must raise q; the solver certifies radii to ~1e-10, so the
# no-decrease assertion uses that margin.  Supplied eigenvectors are accepted
# when they reproduce the radius and the vertex equations to EIGEN_CHECK_TOL,
# loose enough for vectors recomputed elsewhere, tight enough to reject
# vectors belonging to a different graph.
ROTATION_MARGIN = 1e-10
EIGEN_CHECK_TOL = 1e-6
_SUM_TIE_TOL = 1e-12


@dataclass(frozen=True)
class RewireResult:
    graph: Graph
    q_before: float
    q_after: float
    move: str
    detail: str = ""
    predicted_gain: Optional[float] = None
    condition_held: Optional[bool] = None

    @property
    def delta(self) -> float:
        return self.q_after - self.q_before


def _norm_edge(e: tuple[int, int]) -> tuple[int, int]:
    u, v = e
    return (u, v) if u < v else (v, u)


def _check_principal(g: Graph, x: np.ndarray, q_ref: float) -> np.ndarray:
    """Reject x unless it is numerically a nonnegative unit eigenvector of g
    achieving the spectral radius."""
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise ValueError(
            f"eigenvector mismatch: shape {x.shape} for a graph on {g.n} vertices"
        )
    if abs(float(np.linalg.norm(x)) - 1.0) > 1e-8:
        raise ValueError("eigenvector mismatch: not unit norm")
    if float(x.min()) < -1e-9:
        raise ValueError("eigenvector mismatch: negative entries")
    y = q_matrix(g) @ x
    q_est = float(x @ y)
    if float(np.max(np.abs(y - q_est * x))) > EIGEN_CHECK_TOL:
        raise ValueError("eigenvector mismatch: vertex eigenvalue equations fail")
    if abs(q_est - q_ref) > EIGEN_CHECK_TOL:
        raise ValueError(
            f"eigenvector mismatch: Rayleigh value {q_est!r} is not the radius {q_ref!r}"
        )
    return x


def rotate(g: Graph, x: np.ndarray, e: tuple[int, int], f: tuple[int, int]) -> RewireResult:
    """Remove edge e = u1 u2, add non-edge f = v1 v2.

    Preconditions (checked): x is the principal eigenvector of g, and
    x_v1 + x_v2 >= x_u1 + x_u2 > 0 up to a 1e-12 band.  Under them the
    spectral radius strictly increases, and this is asserted against the
    measured radii within ROTATION_MARGIN.
    """
    if g.m == 0:
        raise ValueError("empty graph: nothing to rotate")
    e = _norm_edge(e)
    f = _norm_edge(f)
    if f[0] == f[1]:
        raise ValueError(f"loop edge {f!r}")
    if not g.has_edge(*e):
        raise ValueError(f"edge not in graph: {e!r}")
    if not (0 <= f[0] < g.n and 0 <= f[1] < g.n):
        raise ValueError(f"vertex out of range in edge {f!r}")
    if g.has_edge(*f):
        raise ValueError(f"edge already present: {f!r}")

    before = q_radius(g)
    x = _check_principal(g, x, before.q)

    removed_sum = float(x[e[0]] + x[e[1]])
    added_sum = float(x[f[0]] + x[f[1]])
    if removed_sum <= _SUM_TIE_TOL:
        raise ValueError(
            f"sum condition failed: removed-edge sum {removed_sum!r} is not positive"
        )
    if added_sum < removed_sum - _SUM_TIE_TOL:
        raise ValueError(
            f"sum condition failed: added sum {added_sum!r} < removed sum {removed_sum!r}"
        )

    g2 = g.remove_edge(e).add_edge(f)
    after = q_radius(g2)
    if not after.q > before.q - ROTATION_MARGIN:
        raise ArithmeticError(
            f"rotation failed to increase the radius: {before.q!r} -> {after.q!r}"
        )
    return RewireResult(
        graph=g2,
        q_before=before.q,
        q_after=after.q,
        move="rotate",
        detail=f"-{e} +{f}",
    )


def kelmans_swap(
    g: Graph,
    ei: tuple[int, int],
    ej: tuple[int, int],
    x: Optional[np.ndarray] = None,
) -> RewireResult:
    """Replace edges u_i v_i and u_j v_j by u_i u_j and v_i v_j.

    The pairs are taken as given (orientation decides which endpoints pair
    up).  With x the principal eigenvector of g, the Rayleigh calculation
    predicts q_after - q_before >= 2 (x_vj - x_ui)(x_vi - x_uj); the bound is
    guaranteed when both factors are positive, which is recorded in
    condition_held rather than asserted.
    """
    ui, vi = ei
    uj, vj = ej
    if len({ui, vi, uj, vj}) < 4:
        raise ValueError(f"edges share a vertex: {ei!r}, {ej!r}")
    for pair in (ei, ej):
        if not g.has_edge(*pair):
            raise ValueError(f"edge not in graph: {pair!r}")
    for pair in ((ui, uj), (vi, vj)):
        if g.has_edge(*pair):
            raise ValueError(f"edge already present: {pair!r}")

    before = q_radius(g)
    if x is None:
        x = before.x
    else:
        x = _check_principal(g, x, before.q)

    factor_u = float(x[vj] - x[ui])
    factor_v = float(x[vi] - x[uj])
    predicted = 2.0 * factor_u * factor_v
    held = factor_u > 0.0 and factor_v > 0.0

    g2 = (
        g.remove_edge(_norm_edge(ei))
        .remove_edge(_norm_edge(ej))
        .add_edge(_norm_edge((ui, uj)))
        .add_edge(_norm_edge((vi, vj)))
    )
    after = q_radius(g2)
    return RewireResult(
        graph=g2,
        q_before=before.q,
        q_after=after.q,
        move="kelmans_swap",
        detail=f"-{_norm_edge(ei)} -{_norm_edge(ej)} +{_norm_edge((ui, uj))} +{_norm_edge((vi, vj))}",
        predicted_gain=predicted,
        condition_held=held,
    )


def pendant_collapse(
    g: Graph, v1: int, e2: Iterable[tuple[int, int]]
) -> RewireResult:
    """Delete the edges in e2 and attach |e2| fresh pendant vertices at v1.

    Edge count is preserved by construction.  No monotonicity claim is made;
    callers compare the returned radii.
    """
    if not 0 <= v1 < g.n:
        raise ValueError(f"vertex {v1} out of range")
    edges = sorted({_norm_edge(e) for e in e2})
    for e in edges:
        if not g.has_edge(*e):
            raise ValueError(f"edge not in graph: {e!r}")
    before = q_radius(g)
    g2 = g
    for e in edges:
        g2 = g2.remove_edge(e)
    base = g2.n
    g2 = g2.add_vertices(len(edges))
    for i in range(len(edges)):
        g2 = g2.add_edge((v1, base + i))
    assert g2.m == g.m
    after = q_radius(g2)
    return RewireResult(
        graph=g2,
        q_before=before.q,
        q_after=after.q,
        move="pendant_collapse",
        detail=f"-{edges} +{len(edges)} pendants at {v1}",
    )
