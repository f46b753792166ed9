"""Immutable simple graphs: construction, text formats, connectivity, canonical forms.

Vertices are the integers ``0..n-1``.  Edges are unordered pairs of distinct
vertices, stored normalized as ``(u, v)`` with ``u < v``.  Graphs are frozen
and hashable; equality is labeled equality (same order, same edge set).
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    InvalidVertex,
    NotConnected,
    ParseError,
    SelfLoop,
    TooLarge,
    TooSmall,
)

#: Brute-force canonical labeling (minimum bitstring over all vertex
#: permutations) stays affordable up to this order.
CANONICAL_CEILING = 10

#: Short-form graph6 covers orders up to 62.
GRAPH6_MAX_ORDER = 62

_PERM_CHUNK = 40320  # permutations canonicalized per numpy batch


def _normalize_edge(u: int, v: int, n: int) -> tuple[int, int]:
    if u == v:
        raise SelfLoop(f"self-loop at vertex {u}")
    if not (0 <= u < n and 0 <= v < n):
        raise InvalidVertex(f"edge ({u}, {v}) out of range for order {n}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1`` with a frozen edge set."""

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise InvalidVertex("vertex count must be nonnegative")
        normalized = frozenset(
            _normalize_edge(int(u), int(v), self.n) for u, v in self.edges
        )
        object.__setattr__(self, "edges", normalized)

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        """Neighbor sets indexed by vertex."""
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def neighbors(self, v: int) -> frozenset:
        if not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v} out of range for order {self.n}")
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(s) for s in self.adjacency), reverse=True))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self) -> str:  # deterministic, unlike frozenset's default
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph of order ``n`` from unordered vertex pairs.

    Duplicate pairs (in either orientation) collapse to a single edge.

    Raises:
        SelfLoop: if any pair joins a vertex to itself.
        InvalidVertex: if any endpoint is outside ``0..n-1``.
    """
    return Graph(n, frozenset(tuple(e) for e in edges))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply a vertex permutation: vertex ``v`` of ``g`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise InvalidVertex("relabeling must be a permutation of the vertex set")
    return Graph(g.n, frozenset((perm[u], perm[v]) for u, v in g.edges))


# ---------------------------------------------------------------------------
# connectivity and distances
# ---------------------------------------------------------------------------


def is_connected(g: Graph) -> bool:
    """True when the graph has a single connected component (vacuously for n <= 1)."""
    if g.n <= 1:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    adj = g.adjacency
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                queue.append(w)
    return count == g.n


def is_tree(g: Graph) -> bool:
    """True for connected graphs with exactly ``n - 1`` edges."""
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def _bfs_eccentricity(g: Graph, source: int) -> int:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    far = 0
    adj = g.adjacency
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                far = max(far, dist[w])
                queue.append(w)
    if any(d < 0 for d in dist):
        raise NotConnected("graph is not connected")
    return far


def diameter(g: Graph) -> int:
    """Largest shortest-path distance; 0 for a single vertex.

    Raises:
        TooSmall: for the empty graph.
        NotConnected: when some pair of vertices has no connecting path.
    """
    if g.n < 1:
        raise TooSmall("diameter requires at least one vertex")
    return max(_bfs_eccentricity(g, v) for v in range(g.n))


# ---------------------------------------------------------------------------
# graph6 (short form)
# ---------------------------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    """Encode in short-form graph6 (orders up to 62)."""
    if g.n > GRAPH6_MAX_ORDER:
        raise TooLarge(f"short-form graph6 only covers orders up to {GRAPH6_MAX_ORDER}")
    edges = g.edges
    bits: list[int] = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in edges else 0)
    chars = [chr(g.n + 63)]
    for start in range(0, len(bits), 6):
        group = bits[start : start + 6]
        group += [0] * (6 - len(group))
        value = 0
        for b in group:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 string (leading/trailing whitespace ignored).

    Raises:
        ParseError: on empty input, illegal bytes, a long-form marker, or a
            length that does not match the declared order.
    """
    s = text.strip()
    if not s:
        raise ParseError("empty graph6 string")
    values = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise ParseError(f"illegal graph6 byte {ord(ch)!r}")
        values.append(v)
    n = values[0]
    if n == 63:
        raise ParseError("long-form graph6 is not supported")
    pair_count = n * (n - 1) // 2
    expected = 1 + (pair_count + 5) // 6
    if len(values) != expected:
        raise ParseError(
            f"graph6 string of length {len(values)} does not match order {n}"
        )
    bits: list[int] = []
    for v in values[1:]:
        for shift in range(5, -1, -1):
            bits.append((v >> shift) & 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, frozenset(edges))


# ---------------------------------------------------------------------------
# edge-list text format: first line "n m", then m lines "u v"
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: a header ``n m`` then ``m`` lines ``u v``."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ParseError(f"header declares {m} edges but {len(lines) - 1} lines follow")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"expected edge line 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"non-integer edge line {ln!r}") from exc
    return Graph(n, frozenset(edges))


def format_edge_list(g: Graph) -> str:
    """Serialize to the edge-list text format with edges in sorted order."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class InvariantSummary:
    """One-stop numeric profile of a graph.

    ``alpha`` is present only for ``n >= 2``; ``gamma`` only when no vertex
    is isolated; ``diameter`` only when the graph is connected.  For a
    connected graph with ``n >= 2`` the Gallai identity ``beta + gamma = n``
    holds by construction.
    """

    n: int
    m: int
    connected: bool
    alpha: float | None
    beta: int
    gamma: int | None
    diameter: int | None

    def as_dict(self) -> dict:
        """Field dict with the absent (``None``) entries dropped."""
        out: dict = {"n": self.n, "m": self.m, "connected": self.connected}
        if self.alpha is not None:
            out["alpha"] = self.alpha
        out["beta"] = self.beta
        if self.gamma is not None:
            out["gamma"] = self.gamma
        if self.diameter is not None:
            out["diameter"] = self.diameter
        return out


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Complete isomorphism invariant for graphs up to the canonical ceiling.

    ``bits`` holds the lexicographically minimal upper-triangle adjacency
    bitstring over all vertex permutations; for trees it holds the centered
    rooted-subtree code instead (cheaper, same equality semantics).  The two
    alphabets are disjoint, so the routes can never collide.
    """

    n: int
    bits: str


def _pair_index(i: int, j: int) -> int:
    # column-major position of pair (i, j), i < j: (0,1), (0,2), (1,2), (0,3), ...
    return j * (j - 1) // 2 + i


def _bit_position_table(n: int) -> np.ndarray:
    """(n, n) table of packed-integer bit positions; entry [i, j] is the bit
    weight exponent of edge {i, j} so that integer order == bitstring order."""
    pair_count = n * (n - 1) // 2
    table = np.zeros((n, n), dtype=np.int8)
    for j in range(1, n):
        for i in range(j):
            pos = pair_count - 1 - _pair_index(i, j)
            table[i, j] = pos
            table[j, i] = pos
    return table


def _pack_edges(n: int, edges: Iterable[tuple[int, int]]) -> int:
    pair_count = n * (n - 1) // 2
    code = 0
    for u, v in edges:
        i, j = (u, v) if u < v else (v, u)
        code |= 1 << (pair_count - 1 - _pair_index(i, j))
    return code


def _unpack_code(n: int, code: int) -> Graph:
    pair_count = n * (n - 1) // 2
    edges = []
    for j in range(1, n):
        for i in range(j):
            if (code >> (pair_count - 1 - _pair_index(i, j))) & 1:
                edges.append((i, j))
    return Graph(n, frozenset(edges))


def _min_adjacency_code(g: Graph) -> int:
    """Minimum packed upper-triangle code over every vertex permutation."""
    n = g.n
    if n <= 1 or not g.edges:
        return 0
    table = _bit_position_table(n)
    edge_arr = np.array(g.sorted_edges(), dtype=np.int8)
    eu, ev = edge_arr[:, 0], edge_arr[:, 1]
    best: int | None = None
    perm_iter = itertools.permutations(range(n))
    while True:
        block = list(itertools.islice(perm_iter, _PERM_CHUNK))
        if not block:
            break
        perms = np.array(block, dtype=np.int8)
        lo = np.minimum(perms[:, eu], perms[:, ev])
        hi = np.maximum(perms[:, eu], perms[:, ev])
        pos = table[lo, hi].astype(np.uint64)
        codes = np.bitwise_or.reduce(
            np.left_shift(np.uint64(1), pos), axis=1
        )
        chunk_min = int(codes.min())
        if best is None or chunk_min < best:
            best = chunk_min
    assert best is not None
    return best


def _tree_centers(g: Graph) -> list[int]:
    if g.n == 1:
        return [0]
    deg = [g.degree(v) for v in range(g.n)]
    layer = [v for v in range(g.n) if deg[v] <= 1]
    remaining = g.n
    adj = g.adjacency
    removed = bytearray(g.n)
    while remaining > 2:
        nxt = []
        for leaf in layer:
            removed[leaf] = 1
            remaining -= 1
            for w in adj[leaf]:
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(g: Graph, root: int, blocked: int) -> str:
    """Sorted-subtree code of the tree rooted at ``root``, never crossing ``blocked``."""
    adj = g.adjacency

    def code(v: int, parent: int) -> str:
        parts = sorted(
            code(w, v) for w in adj[v] if w != parent and w != blocked
        )
        return "(" + "".join(parts) + ")"

    return code(root, -1)


def _tree_code(g: Graph) -> str:
    """Canonical code for a free tree: root at the center (or central edge)."""
    centers = _tree_centers(g)
    if len(centers) == 1:
        return "1" + _rooted_code(g, centers[0], -1)
    a, b = centers
    ca = _rooted_code(g, a, b)
    cb = _rooted_code(g, b, a)
    lo, hi = sorted((ca, cb))
    return "2" + lo + hi


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical form such that two graphs are isomorphic iff the forms are equal.

    Trees take the linear-time centered-code route; everything else falls back
    to the minimum adjacency bitstring over all vertex permutations, which is
    why orders above :data:`CANONICAL_CEILING` are rejected.

    Raises:
        TooLarge: above the brute-force ceiling.
    """
    if g.n > CANONICAL_CEILING:
        raise TooLarge(
            f"canonical forms are limited to order {CANONICAL_CEILING}"
        )
    if is_tree(g):
        return CanonicalForm(g.n, _tree_code(g))
    pair_count = g.n * (g.n - 1) // 2
    if pair_count == 0:
        return CanonicalForm(g.n, "")
    bits = format(_min_adjacency_code(g), f"0{pair_count}b")
    return CanonicalForm(g.n, bits)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Isomorphism test via canonical forms (same order ceiling applies)."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    return canonical_form(g1) == canonical_form(g2)
