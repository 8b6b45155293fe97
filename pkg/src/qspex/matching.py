"""Maximum matchings: size, exhaustive enumeration, and eigenvector-weighted
selection.

matching_number runs Edmonds' blossom algorithm (base-array contraction), so
it is exact on arbitrary graphs, odd cycles included.  all_maximum_matchings
enumerates every maximum matching by a decision search on the lowest live
vertex, pruned by exact feasibility checks.  extremal_matching picks, among
maximum matchings, one maximizing sum (x_u + x_v)^2; proper_ordering and
edge_partition then fix the vertex orientation and the E1/E2 edge split that
the rewiring lemmas consume.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graphs import Graph

# Matchings within this weight of the best are treated as tied, and vertex
# orientations with |x_u - x_v| inside it fall back to index order; keeps the
# selection stable under eigensolver noise and symmetric eigenvectors.
WEIGHT_TIE_TOL = 1e-12

ENUMERATION_GUARD = 20  # all_maximum_matchings refuses larger vertex counts


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges, stored sorted as (u, v), u < v."""

    edges: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, g: Graph, edges: Iterable[tuple[int, int]]) -> "Matching":
        norm = sorted((u, v) if u < v else (v, u) for u, v in edges)
        seen: set[int] = set()
        for u, v in norm:
            if not g.has_edge(u, v):
                raise ValueError(f"not an edge of the graph: {(u, v)!r}")
            if u in seen or v in seen:
                raise ValueError(f"matching edges share vertex in {(u, v)!r}")
            seen.update((u, v))
        return cls(tuple(norm))

    @property
    def size(self) -> int:
        return len(self.edges)

    def vertices(self) -> set[int]:
        return {w for e in self.edges for w in e}


@dataclass(frozen=True)
class OrderedMatching:
    """Matching edges oriented as (u_i, v_i) with x_{u_i} <= x_{v_i}, sorted by
    descending x_{v_i} (ties broken toward smaller vertex index).  v_1 is the
    anchor vertex pairs[0][1]."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def v1(self) -> int:
        return self.pairs[0][1]


# ---------------------------------------------------------------------------
# Blossom maximum matching
# ---------------------------------------------------------------------------


def _find_augmenting(n: int, adj: list[list[int]], match: list[int], root: int) -> bool:
    parent = [-1] * n
    base = list(range(n))
    in_tree = [False] * n
    in_tree[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        on_path = [False] * n
        v = a
        while True:
            v = base[v]
            on_path[v] = True
            if match[v] == -1:
                break
            v = parent[match[v]]
        v = b
        while True:
            v = base[v]
            if on_path[v]:
                return v
            v = parent[match[v]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # odd cycle: contract the blossom around the common base
                cur_base = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur_base, to, blossom)
                mark_path(to, cur_base, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur_base
                        if not in_tree[i]:
                            in_tree[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    # augment: flip matched edges along the alternating path
                    u = to
                    while u != -1:
                        pv = parent[u]
                        nxt = match[pv]
                        match[u] = pv
                        match[pv] = u
                        u = nxt
                    return True
                if not in_tree[match[to]]:
                    in_tree[match[to]] = True
                    queue.append(match[to])
    return False


def maximum_matching(g: Graph) -> Matching:
    """One maximum matching (exact, via blossom contraction)."""
    n = g.n
    adj = [list(g.neighbors(v)) for v in range(n)]
    match = [-1] * n
    for v in range(n):  # greedy warm start
        if match[v] == -1:
            for to in adj[v]:
                if match[to] == -1:
                    match[v] = to
                    match[to] = v
                    break
    for v in range(n):
        if match[v] == -1:
            _find_augmenting(n, adj, match, v)
    return Matching(tuple(sorted((v, match[v]) for v in range(n) if match[v] > v)))


def matching_number(g: Graph) -> int:
    return maximum_matching(g).size


# ---------------------------------------------------------------------------
# Exhaustive enumeration of maximum matchings
# ---------------------------------------------------------------------------


def all_maximum_matchings(g: Graph, guard: int = ENUMERATION_GUARD) -> list[Matching]:
    """Every maximum matching, sorted by edge tuples.

    Decision search on the lowest still-live vertex: match it to each live
    neighbor, or leave it unmatched.  A branch survives only if the matching
    number of the residual graph keeps the maximum reachable, so the tree
    never walks dead ends; each maximum matching appears exactly once.
    """
    if g.n > guard:
        raise ValueError(f"vertex count {g.n} exceeds enumeration guard {guard}")
    beta = matching_number(g)
    full = (1 << g.n) - 1
    residual_cache: dict[int, int] = {full: beta}

    def residual_beta(mask: int) -> int:
        cached = residual_cache.get(mask)
        if cached is None:
            verts = []
            m = mask
            while m:
                low = m & -m
                verts.append(low.bit_length() - 1)
                m ^= low
            from .graphs import induced_subgraph

            cached = matching_number(induced_subgraph(g, verts))
            residual_cache[mask] = cached
        return cached

    out: list[tuple[tuple[int, int], ...]] = []
    chosen: list[tuple[int, int]] = []

    def rec(mask: int) -> None:
        if len(chosen) + residual_beta(mask) < beta:
            return
        if len(chosen) == beta:
            out.append(tuple(chosen))
            return
        v = (mask & -mask).bit_length() - 1
        live_neighbors = g.neighbors_mask(v) & mask
        m = live_neighbors
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            chosen.append((v, u))
            rec(mask & ~(1 << v) & ~(1 << u))
            chosen.pop()
        rec(mask & ~(1 << v))  # v stays unmatched

    if g.n:
        rec(full)
    else:
        out.append(())
    matchings = [Matching(tuple(sorted(edges))) for edges in out]
    matchings.sort(key=lambda mm: mm.edges)
    return matchings


# ---------------------------------------------------------------------------
# Eigenvector-weighted selection and ordering
# ---------------------------------------------------------------------------


def matching_weight(m: Matching, x: np.ndarray) -> float:
    return float(sum((x[u] + x[v]) ** 2 for u, v in m.edges))


def extremal_matching(g: Graph, x: np.ndarray) -> Matching:
    """A maximum matching maximizing sum (x_u + x_v)^2.

    Ties within WEIGHT_TIE_TOL of the best weight are broken by taking the
    lexicographically least edge tuple, so the result is deterministic and
    stable under eigensolver noise.
    """
    if g.m == 0:
        raise ValueError("graph has no edges; no matching to select")
    candidates = all_maximum_matchings(g)
    weights = [matching_weight(mm, x) for mm in candidates]
    best = max(weights)
    tied = [mm for mm, w in zip(candidates, weights) if w >= best - WEIGHT_TIE_TOL]
    return min(tied, key=lambda mm: mm.edges)


def proper_ordering(m: Matching, x: np.ndarray) -> OrderedMatching:
    """Orient each edge so x_u <= x_v, then sort by descending x_v, then
    descending x_u.  Comparisons within WEIGHT_TIE_TOL are ties and fall back
    to vertex-index order (smaller index takes the v slot on an orientation
    tie), keeping the ordering reproducible for symmetric eigenvectors.
    """
    if not m.edges:
        raise ValueError("empty matching has no ordering")
    oriented = []
    for a, b in m.edges:
        if x[a] > x[b] + WEIGHT_TIE_TOL:
            u, v = b, a
        elif x[b] > x[a] + WEIGHT_TIE_TOL:
            u, v = a, b
        else:
            v, u = (a, b) if a < b else (b, a)
        oriented.append((u, v))

    import functools

    def cmp(p: tuple[int, int], q: tuple[int, int]) -> int:
        dv = x[p[1]] - x[q[1]]
        if abs(dv) > WEIGHT_TIE_TOL:
            return -1 if dv > 0 else 1
        du = x[p[0]] - x[q[0]]
        if abs(du) > WEIGHT_TIE_TOL:
            return -1 if du > 0 else 1
        return -1 if p < q else (0 if p == q else 1)

    oriented.sort(key=functools.cmp_to_key(cmp))
    return OrderedMatching(tuple(oriented))


def edge_partition(
    g: Graph, om: OrderedMatching
) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
    """Split E(G) into E1 = matching edges plus all edges at the anchor v_1,
    and E2 = the rest.  Both halves come back sorted."""
    v1 = om.v1
    e1 = {(u, v) if u < v else (v, u) for u, v in om.pairs}
    e1.update((min(v1, w), max(v1, w)) for w in g.neighbors(v1))
    all_edges = g.edges()
    e2 = [e for e in all_edges if e not in e1]
    missing = e1.difference(all_edges)
    if missing:
        raise ValueError(f"ordered matching uses non-edges: {sorted(missing)!r}")
    return tuple(sorted(e1)), tuple(e2)
