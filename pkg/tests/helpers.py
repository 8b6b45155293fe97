"""Shared test fixtures: independent oracles and random-graph generators.

Each oracle takes a code path disjoint from the library's: graph6 encoding by
naive bit-list packing, matching number by exhaustive memoized edge-branching,
spectral radius by a dense symmetric eigensolve, and class enumeration by
labeled edge-set recursion.  Agreement between routes is what the tests buy.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

import numpy as np
from hypothesis import strategies as st

from qspex.graphs import Graph, induced_subgraph


def ref_graph6_encode(n: int, edges: set[tuple[int, int]]) -> str:
    """Independent graph6 encoder: explicit bit list, then 6-bit chunks."""
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if ((u, v) in edges or (v, u) in edges) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        out.append(chr(sum(b << (5 - j) for j, b in enumerate(chunk)) + 63))
    return "".join(out)


def oracle_matching_number(g: Graph) -> int:
    """Exhaustive search over matchings: branch on the lowest live vertex
    (pair it with each live neighbor or drop it), memoized on the live set.
    Explores every maximal matching implicitly; exact for all graphs."""
    adj = [g.neighbors_mask(v) for v in range(g.n)]

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        out = best(rest)
        nb = adj[v] & rest
        while nb:
            lowb = nb & -nb
            u = lowb.bit_length() - 1
            nb ^= lowb
            out = max(out, 1 + best(rest ^ (1 << u)))
        return out

    return best((1 << g.n) - 1)


def oracle_q_radius(g: Graph) -> float:
    """Dense full eigensolve of D + A."""
    if g.m == 0:
        return 0.0
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return float(np.linalg.eigvalsh(a + np.diag(a.sum(axis=1))).max())


def oracle_all_matchings_of_size(g: Graph, k: int) -> set[tuple[tuple[int, int], ...]]:
    """All size-k matchings by literal edge-subset scan (small graphs only)."""
    out = set()
    for subset in combinations(g.edges(), k):
        verts = [w for e in subset for w in e]
        if len(set(verts)) == 2 * k:
            out.add(tuple(sorted(subset)))
    return out


def oracle_class_forms(m: int) -> dict[int, set[bytes]]:
    """Canonical forms of every isolated-vertex-free graph with m edges,
    bucketed by matching number.

    Generation: choose the m edges in increasing lexicographic order over a
    vertex pool of size 2m, requiring each new vertex label to extend the
    used prefix (an edge may introduce label k only if 0..k-1 are in use, or
    it introduces k and k+1 together).  Every isomorphism class has such a
    labeling, vertices are covered by construction, and the edge ordering
    makes each labeled graph appear once.  Dedup is by canonical form.
    """
    from qspex.graphs import canonical_form

    pool = 2 * m
    buckets: dict[int, set[bytes]] = {}
    edges: list[tuple[int, int]] = []

    def emit() -> None:
        used = sorted({w for e in edges for w in e})
        g = induced_subgraph(Graph.from_edges(pool, edges), used)
        buckets.setdefault(oracle_matching_number(g), set()).add(canonical_form(g))

    def rec(last: tuple[int, int], max_used: int) -> None:
        if len(edges) == m:
            emit()
            return
        hi = min(max_used + 2, pool - 1)
        for u in range(0, hi):
            for v in range(u + 1, hi + 1):
                e = (u, v)
                if e <= last:
                    continue
                if u > max_used and not (u == max_used + 1 and v == max_used + 2):
                    continue  # two fresh labels must be consecutive
                if v > max_used and u <= max_used and v != max_used + 1:
                    continue  # one fresh label must extend the prefix
                edges.append(e)
                rec(e, max(max_used, v))
                edges.pop()

    rec((-1, -1), -1)
    return buckets


def random_graph(rng: random.Random, max_n: int = 10, p: float | None = None) -> Graph:
    n = rng.randint(1, max_n)
    density = p if p is not None else rng.choice([0.15, 0.3, 0.5, 0.8])
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density
    ]
    return Graph.from_edges(n, edges)


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bitmap = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    return Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if bitmap >> i & 1])


@st.composite
def permutations_of(draw, n: int) -> list[int]:
    return draw(st.permutations(list(range(n))))
