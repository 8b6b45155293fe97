"""Labeled simple graphs on small vertex sets.

Vertices are integers ``0..n-1``.  Adjacency lives in per-vertex bitmasks,
which keeps edge tests, neighborhood scans and induced subgraphs cheap at the
sizes this package targets (n <= 62, the single-byte graph6 range).  Graphs
are immutable; edits return new objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

GRAPH6_MAX_N = 62


class Graph6Error(ValueError):
    """Malformed graph6 text (bad header, truncated body, trailing garbage)."""


class Graph:
    """Immutable simple graph: vertex count plus one adjacency bitmask per vertex."""

    __slots__ = ("n", "m", "_adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        # Trusted constructor -- use from_edges() unless the masks are known good.
        self.n = n
        self._adj = adj
        self.m = sum(a.bit_count() for a in adj) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        if not 0 <= n <= GRAPH6_MAX_N:
            raise ValueError(f"vertex count {n} outside supported range 0..{GRAPH6_MAX_N}")
        adj = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex out of range in edge {e!r}")
            if u == v:
                raise ValueError(f"loop edge {e!r}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def neighbors_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1) << (u + 1)
            out.extend((u, v) for v in _bits(rest))
        return out

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((a.bit_count() for a in self._adj), reverse=True))

    def add_edge(self, e: tuple[int, int]) -> "Graph":
        u, v = e
        if u == v:
            raise ValueError(f"loop edge {e!r}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex out of range in edge {e!r}")
        if self.has_edge(u, v):
            raise ValueError(f"edge already present: {e!r}")
        adj = list(self._adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def remove_edge(self, e: tuple[int, int]) -> "Graph":
        u, v = e
        if not (0 <= u < self.n and 0 <= v < self.n) or not self.has_edge(u, v):
            raise ValueError(f"edge not in graph: {e!r}")
        adj = list(self._adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def add_vertices(self, k: int) -> "Graph":
        if k < 0:
            raise ValueError("cannot add a negative number of vertices")
        if self.n + k > GRAPH6_MAX_N:
            raise ValueError(f"vertex count {self.n + k} outside supported range")
        return Graph(self.n + k, self._adj + (0,) * k)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# graph6 codec (n <= 62 form: header byte n+63, upper-triangle bits in column
# order (0,1),(0,2),(1,2),(0,3),..., packed big-endian into 6-bit sextets).
# ---------------------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 single-byte form requires n <= {GRAPH6_MAX_N}")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    adj = g._adj
    for v in range(1, g.n):
        col = adj[v]
        for u in range(v):
            acc = acc << 1 | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error(f"malformed header: not ASCII ({exc})") from None
    text = text.rstrip("\n")
    if not text:
        raise Graph6Error("malformed header: empty input")
    head = ord(text[0])
    if head == 126:
        raise Graph6Error("malformed header: multi-byte vertex counts (n > 62) unsupported")
    if not 63 <= head <= 125:
        raise Graph6Error(f"malformed header: byte {head} outside printable graph6 range")
    n = head - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = text[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bit body: expected {nbytes} bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error(f"trailing garbage: {len(body) - nbytes} byte(s) past the bit body")
    bits = 0
    for ch in body:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise Graph6Error(f"invalid body byte {o}: outside graph6 range 63..126")
        bits = bits << 6 | (o - 63)
    pad = 6 * nbytes - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("trailing garbage: nonzero padding bits")
    bits >>= pad
    adj = [0] * n
    pos = nbits
    for v in range(1, n):
        for u in range(v):
            pos -= 1
            if bits >> pos & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# Components and vertex-set surgery
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComponentDecomposition:
    """Connected components as (induced subgraph, original-vertex tuple) pairs.

    Parts appear in order of their smallest original vertex, and each part's
    vertex tuple is ascending, so the decomposition is deterministic.
    """

    parts: tuple[tuple[Graph, tuple[int, ...]], ...]

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def components(g: Graph) -> ComponentDecomposition:
    seen = 0
    parts = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g._adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        verts = tuple(_bits(comp))
        parts.append((induced_subgraph(g, verts), verts))
    return ComponentDecomposition(tuple(parts))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on `vertices`; result vertex i is `vertices[i]`.

    With `vertices` a permutation of range(n) this is a relabeling.
    """
    index = {v: i for i, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise ValueError("duplicate vertex in induced_subgraph")
    k = len(vertices)
    adj = [0] * k
    for i, v in enumerate(vertices):
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        mask = g._adj[v]
        for w in _bits(mask):
            j = index.get(w)
            if j is not None:
                adj[i] |= 1 << j
    return Graph(k, tuple(adj))


def strip_isolated(g: Graph) -> Graph:
    """Drop degree-0 vertices, keeping the relative order of the rest."""
    keep = [v for v in range(g.n) if g._adj[v]]
    return induced_subgraph(g, keep)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    adj = list(g._adj) + [mask << g.n for mask in h._adj]
    if len(adj) > GRAPH6_MAX_N:
        raise ValueError("disjoint union exceeds supported vertex range")
    return Graph(len(adj), tuple(adj))


def union_all(parts: Iterable[Graph]) -> Graph:
    out = Graph(0, ())
    for p in parts:
        out = disjoint_union(out, p)
    return out


# ---------------------------------------------------------------------------
# Canonical labeling.
#
# Connected graphs go through iterated neighborhood color refinement plus
# individualization-refinement search: among the labelings the search visits,
# keep the one whose graph6 bit sequence is least.  The visited set is itself
# relabeling-invariant (refinement and cell numbering depend only on structure),
# so the winner is a true canonical representative even though it need not be
# the global lexicographic minimum over all n! orderings.  Automorphisms
# discovered at key-equal leaves prune sibling branches.  A disconnected graph
# is canonicalized per component and reassembled with components sorted by
# (n, m, bits), which is label-invariant, so equal canonical forms still mean
# isomorphic.
# ---------------------------------------------------------------------------

_AUT_CAP = 3000  # stop recording automorphisms past this many (pruning only weakens)


def _refine(adj: Sequence[int], colors: tuple[int, ...]) -> tuple[int, ...]:
    """Stable neighborhood refinement, renumbered canonically (by signature)."""
    n = len(colors)
    while True:
        sigs = []
        for v in range(n):
            neigh = sorted(colors[u] for u in _bits(adj[v]))
            sigs.append((colors[v], tuple(neigh)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = tuple(rank[s] for s in sigs)
        if new == colors:
            return colors
        colors = new


def _individualize(colors: tuple[int, ...], v: int) -> tuple[int, ...]:
    cv = colors[v]
    return tuple(
        c + 1 if (c > cv or (c == cv and u != v)) else c for u, c in enumerate(colors)
    )


def _g6_bits_key(adj: Sequence[int], perm: Sequence[int]) -> int:
    """Upper-triangle bits of the relabeled graph in graph6 column order."""
    acc = 0
    for j in range(1, len(perm)):
        col = adj[perm[j]]
        for i in range(j):
            acc = acc << 1 | (col >> perm[i] & 1)
    return acc


def _connected_canonical_order(g: Graph) -> list[int]:
    n = g.n
    adj = g._adj
    if n <= 1:
        return list(range(n))
    best_key: int | None = None
    best_perm: list[int] | None = None
    auts: list[list[int]] = []

    def search(colors: tuple[int, ...], fixed: tuple[int, ...]) -> None:
        nonlocal best_key, best_perm
        counts = [0] * n
        for c in colors:
            counts[c] += 1
        target = -1
        for c, k in enumerate(counts):
            if k > 1:
                target = c
                break
        if target < 0:
            perm = [0] * n
            for v, c in enumerate(colors):
                perm[c] = v
            key = _g6_bits_key(adj, perm)
            if best_key is None or key < best_key:
                best_key = key
                best_perm = perm
            elif key == best_key and len(auts) < _AUT_CAP:
                sigma = [0] * n
                for i in range(n):
                    sigma[best_perm[i]] = perm[i]
                inv = [0] * n
                for i, s in enumerate(sigma):
                    inv[s] = i
                auts.append(sigma)
                auts.append(inv)
            return
        cand = [v for v in range(n) if colors[v] == target]
        tried: set[int] = set()
        for v in cand:
            if any(
                sigma[v] in tried and all(sigma[u] == u for u in fixed)
                for sigma in auts
            ):
                continue
            tried.add(v)
            search(_refine(adj, _individualize(colors, v)), fixed + (v,))

    search(_refine(adj, (0,) * n), ())
    assert best_perm is not None
    return best_perm


def _connected_canonical(g: Graph) -> Graph:
    return induced_subgraph(g, _connected_canonical_order(g))


def canonical_graph(g: Graph) -> Graph:
    """A canonically labeled copy: equal outputs exactly for isomorphic inputs."""
    decomp = components(g)
    if len(decomp) == 1:
        return _connected_canonical(decomp.parts[0][0])
    parts = [_connected_canonical(part) for part, _ in decomp]
    parts.sort(key=lambda p: (p.n, p.m, _g6_bits_key(p._adj, range(p.n))))
    return union_all(parts)


def canonical_form(g: Graph) -> bytes:
    """Relabeling-invariant fingerprint: graph6 of the canonical labeling."""
    return to_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)
