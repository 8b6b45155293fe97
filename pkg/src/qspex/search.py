"""Isomorph-free enumeration by edge count and matching number, exhaustive
q-maximization, and a rewiring hill climber.

Graphs are generated without isolated vertices as multisets of connected
pieces drawn from a catalog of connected graphs by edge count (grown by
edge/leaf augmentation: every connected graph with k+1 edges arises from a
connected graph with k edges by adding an edge between existing vertices or
hanging a new leaf, since one can always delete a cycle edge or a leaf edge
without disconnecting).  Matching number adds over pieces and the radius is
the max over pieces, so class constraints transfer to the composition.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .family import extremal_beta1, predicted_extremal
from .graphs import (
    Graph,
    canonical_form,
    canonical_graph,
    components,
    from_graph6,
    induced_subgraph,
    is_isomorphic,
    strip_isolated,
    to_graph6,
    union_all,
)
from .matching import matching_number
from .spectral import Q_MARGIN, q_radius
from .transform import ROTATION_MARGIN, kelmans_swap, rotate

DEFAULT_GUARD = 10  # enumeration refuses edge counts beyond this unless raised
ARGMAX_BAND = 1e-8  # graphs within this of the max radius are co-extremal


@dataclass(frozen=True)
class EnumerationQuery:
    """Graph class selector:  edge count m with matching number == beta
    ("exact") or >= beta ("at_least")."""

    m: int
    beta: int
    mode: str = "exact"

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"edge count must be >= 1, got {self.m}")
        if self.beta < 1:
            raise ValueError(f"matching number must be >= 1, got {self.beta}")
        if self.mode not in ("exact", "at_least"):
            raise ValueError(f"mode must be 'exact' or 'at_least', got {self.mode!r}")

    def admits(self, beta: int) -> bool:
        return beta == self.beta if self.mode == "exact" else beta >= self.beta


# ---------------------------------------------------------------------------
# Connected catalog
# ---------------------------------------------------------------------------

_catalog: dict[int, list[tuple[Graph, int]]] = {}


def connected_catalog(k: int) -> list[tuple[Graph, int]]:
    """All connected graphs with exactly k edges (canonical labels, no
    isolated vertices), each with its matching number; sorted by canonical
    form.  Cached and grown level by level."""
    if k < 1:
        raise ValueError(f"edge count must be >= 1, got {k}")
    if 1 not in _catalog:
        k2 = canonical_graph(Graph.from_edges(2, [(0, 1)]))
        _catalog[1] = [(k2, 1)]
    level = max(_catalog)
    while level < k:
        seen: dict[str, Graph] = {}
        for g, _ in _catalog[level]:
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    if not g.has_edge(u, v):
                        h = canonical_graph(g.add_edge((u, v)))
                        seen.setdefault(to_graph6(h), h)
                h = canonical_graph(g.add_vertices(1).add_edge((u, g.n)))
                seen.setdefault(to_graph6(h), h)
        _catalog[level + 1] = [
            (seen[form], matching_number(seen[form])) for form in sorted(seen)
        ]
        level += 1
    return _catalog[k]


def _part_sort_key(p: Graph) -> tuple[int, int, int]:
    # parts are canonically labeled, so raw adjacency bits are comparable
    acc = 0
    for j in range(1, p.n):
        col = p.neighbors_mask(j)
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
    return (p.n, p.m, acc)


def enumerate_graphs(query: EnumerationQuery, guard: int = DEFAULT_GUARD) -> list[Graph]:
    """All graphs (no isolated vertices, canonical labels) with m edges in the
    query class, sorted by canonical form.

    Components are chosen as a non-decreasing sequence of catalog indices, so
    each multiset of connected pieces appears exactly once; distinct multisets
    give non-isomorphic unions because component decomposition is an
    isomorphism invariant.
    """
    if query.m > guard:
        raise ValueError(
            f"edge count {query.m} exceeds the enumeration guard {guard};"
            " raise the guard explicitly to go bigger"
        )
    flat: list[tuple[int, Graph, int]] = []
    for k in range(1, query.m + 1):
        for g, beta in connected_catalog(k):
            flat.append((k, g, beta))

    out: list[Graph] = []
    chosen: list[Graph] = []

    def rec(budget: int, beta_sum: int, start: int) -> None:
        if budget == 0:
            if query.admits(beta_sum):
                # parts are canonical and get the same ordering canonical_graph
                # uses, so the union is already canonically labeled
                parts = sorted(chosen, key=_part_sort_key)
                out.append(union_all(parts))
            return
        if query.mode == "exact" and beta_sum + budget < query.beta:
            return  # even all-K2 pieces cannot reach the target matching number
        for i in range(start, len(flat)):
            k, g, beta = flat[i]
            if k > budget:
                break
            if query.mode == "exact" and beta_sum + beta > query.beta:
                continue
            chosen.append(g)
            rec(budget - k, beta_sum + beta, i)
            chosen.pop()

    rec(query.m, 0, 0)
    out.sort(key=to_graph6)
    return out


# ---------------------------------------------------------------------------
# Exhaustive maximization
# ---------------------------------------------------------------------------


def _q_of_graph6(s: str) -> float:
    return q_radius(from_graph6(s)).q


def max_radius_over(graphs: list[Graph], workers: int = 1) -> tuple[float, list[Graph]]:
    """Max q over a fixed graph list, keeping every graph within ARGMAX_BAND
    of the best.  Order-preserving and deterministic for any worker count
    (workers only parallelize the per-graph eigensolves)."""
    if not graphs:
        raise ValueError("empty graph list")
    if workers > 1:
        with multiprocessing.Pool(workers) as pool:
            radii = pool.map(_q_of_graph6, [to_graph6(g) for g in graphs], chunksize=16)
    else:
        radii = [q_radius(g).q for g in graphs]
    best = max(radii)
    argmax = [g for g, q in zip(graphs, radii) if q >= best - ARGMAX_BAND]
    return best, argmax


def brute_force_max(
    query: EnumerationQuery,
    guard: int = DEFAULT_GUARD,
    workers: int = 1,
) -> tuple[float, list[Graph]]:
    """Max spectral radius over the query class, with every attaining graph."""
    if query.m < query.beta:
        raise ValueError(
            f"empty class: no graph has {query.m} edges and matching number {query.beta}"
        )
    graphs = enumerate_graphs(query, guard=guard)
    if not graphs:
        raise ValueError(f"empty class for {query!r}")
    return max_radius_over(graphs, workers=workers)


# ---------------------------------------------------------------------------
# Hill climbing by rewirings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClimbStep:
    move: str
    detail: str
    q_before: float
    q_after: float
    graph6: str


@dataclass(frozen=True)
class ClimbTrace:
    start: Graph
    end: Graph
    steps: tuple[ClimbStep, ...]
    converged_to_prediction: bool


def _class_beta_ok(g: Graph, query: EnumerationQuery) -> bool:
    return query.admits(matching_number(g))


def hill_climb(
    start: Graph, query: EnumerationQuery, max_steps: int = 64
) -> ClimbTrace:
    """Steepest-ascent climb inside the query class using precondition-valid
    rotations and gain-predicting swaps.

    Each step scans every rotation whose eigenvector sums justify it and every
    swap whose predicted gain is positive, keeps those that stay in the class
    and raise q by more than the solver margin, and applies the best (largest
    q_after, ties broken by the move's detail string).  Stops at a local
    maximum or after max_steps; the trace records whether the endpoint is
    isomorphic to the predicted extremal graph for the class.
    """
    if start.m != query.m:
        raise ValueError(
            f"start graph has {start.m} edges but the class requires {query.m}"
        )
    if not _class_beta_ok(start, query):
        raise ValueError("start graph is outside the query class")

    current = start
    steps: list[ClimbStep] = []
    for _ in range(max_steps):
        spectrum = q_radius(current)
        x = spectrum.x
        best_move: Optional[tuple[float, str, str, tuple]] = None

        def consider(q_after: float, move: str, detail: str, apply_args: tuple) -> None:
            nonlocal best_move
            if q_after <= spectrum.q + ROTATION_MARGIN:
                return
            cand = (-q_after, move, detail)
            if best_move is None or cand < (-best_move[0], best_move[1], best_move[2]):
                best_move = (q_after, move, detail, apply_args)

        edges = current.edges()
        non_edges = [
            (u, v)
            for u in range(current.n)
            for v in range(u + 1, current.n)
            if not current.has_edge(u, v)
        ]
        for e in edges:
            removed_sum = x[e[0]] + x[e[1]]
            if removed_sum <= 1e-12:
                continue
            for f in non_edges:
                if x[f[0]] + x[f[1]] < removed_sum - 1e-12:
                    continue
                h = current.remove_edge(e).add_edge(f)
                if not _class_beta_ok(h, query):
                    continue
                consider(q_radius(h).q, "rotate", f"-{e} +{f}", ("rotate", e, f))
        for a in range(len(edges)):
            for b in range(a + 1, len(edges)):
                e1, e2 = edges[a], edges[b]
                if set(e1) & set(e2):
                    continue
                # both pairings, both role assignments: the gain bound needs
                # positive factors in *some* orientation of a pairing
                for ei, ej in (
                    (e1, e2),
                    ((e1[1], e1[0]), (e2[1], e2[0])),
                    ((e1[1], e1[0]), e2),
                    (e1, (e2[1], e2[0])),
                ):
                    ui, vi = ei
                    uj, vj = ej
                    if current.has_edge(ui, uj) or current.has_edge(vi, vj):
                        continue
                    if not (x[vj] - x[ui] > 0.0 and x[vi] - x[uj] > 0.0):
                        continue
                    h = (
                        current.remove_edge(e1)
                        .remove_edge(e2)
                        .add_edge((min(ui, uj), max(ui, uj)))
                        .add_edge((min(vi, vj), max(vi, vj)))
                    )
                    if not _class_beta_ok(h, query):
                        continue
                    detail = f"-{e1} -{e2} +{(min(ui, uj), max(ui, uj))} +{(min(vi, vj), max(vi, vj))}"
                    consider(q_radius(h).q, "kelmans_swap", detail, ("swap", ei, ej))

        if best_move is None:
            break
        _, move, detail, apply_args = best_move
        if apply_args[0] == "rotate":
            result = rotate(current, x, apply_args[1], apply_args[2])
        else:
            result = kelmans_swap(current, apply_args[1], apply_args[2])
        current = result.graph
        steps.append(
            ClimbStep(
                move=result.move,
                detail=result.detail,
                q_before=result.q_before,
                q_after=result.q_after,
                graph6=to_graph6(current),
            )
        )

    trimmed = strip_isolated(current)
    if query.beta >= 2:
        target = predicted_extremal(query.m, query.beta)
        converged = is_isomorphic(trimmed, target)
    else:
        _, targets = extremal_beta1(query.m)
        converged = any(is_isomorphic(trimmed, t) for t in targets)
    return ClimbTrace(
        start=start, end=current, steps=tuple(steps), converged_to_prediction=converged
    )
