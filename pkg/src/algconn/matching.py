"""Matching number, edge cover number, and matching-preserving spanning subgraphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import IsolatedVertex, NoCycle, NotConnected, TooLarge
from .graph import Graph, is_connected, is_tree

#: Subset-DP matching works on any graph up to this order (2^n table).
MATCHING_DP_CEILING = 24


@dataclass(frozen=True)
class Matching:
    """A set of pairwise non-adjacent edges, normalized like graph edges."""

    edges: frozenset

    @property
    def size(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def _bitmask_matching(g: Graph) -> tuple[int, list[tuple[int, int]]]:
    """Maximum matching by DP over vertex subsets; witness is the
    lexicographically smallest maximum matching (edges compared as sorted
    pairs, sets compared in sorted order)."""
    n = g.n
    if n > MATCHING_DP_CEILING:
        raise TooLarge(
            f"subset DP matching is limited to order {MATCHING_DP_CEILING}"
        )
    nbr_mask = [0] * n
    for u, v in g.edges:
        nbr_mask[u] |= 1 << v
        nbr_mask[v] |= 1 << u
    size = 1 << n
    dp = bytearray(size)
    for mask in range(1, size):
        vbit = mask & -mask
        v = vbit.bit_length() - 1
        rest = mask ^ vbit
        best = dp[rest]
        avail = nbr_mask[v] & rest
        while avail:
            ubit = avail & -avail
            cand = dp[rest ^ ubit] + 1
            if cand > best:
                best = cand
            avail ^= ubit
        dp[mask] = best

    edges: list[tuple[int, int]] = []
    mask = size - 1
    while mask:
        vbit = mask & -mask
        v = vbit.bit_length() - 1
        rest = mask ^ vbit
        if dp[mask] == dp[rest]:
            # leaving v unmatched never loses a matched lower vertex
            target = dp[mask]
            avail = nbr_mask[v] & rest
            matched = False
            while avail:
                ubit = avail & -avail
                if dp[rest ^ ubit] + 1 == target:
                    u = ubit.bit_length() - 1
                    edges.append((v, u))
                    mask = rest ^ ubit
                    matched = True
                    break
                avail ^= ubit
            if not matched:
                mask = rest
        else:
            avail = nbr_mask[v] & rest
            while avail:
                ubit = avail & -avail
                if dp[rest ^ ubit] + 1 == dp[mask]:
                    u = ubit.bit_length() - 1
                    edges.append((v, u))
                    mask = rest ^ ubit
                    break
                avail ^= ubit
    return dp[size - 1], edges


def _tree_matching(g: Graph) -> tuple[int, list[tuple[int, int]]]:
    """Maximum matching of a tree by the leaf-upward greedy rule."""
    n = g.n
    if n == 0:
        return 0, []
    adj = g.adjacency
    parent = [-1] * n
    order: list[int] = []
    stack = [0]
    seen = bytearray(n)
    seen[0] = 1
    while stack:
        v = stack.pop()
        order.append(v)
        for w in sorted(adj[v], reverse=True):
            if not seen[w]:
                seen[w] = 1
                parent[w] = v
                stack.append(w)
    matched = bytearray(n)
    edges: list[tuple[int, int]] = []
    for v in reversed(order):
        p = parent[v]
        if p >= 0 and not matched[v] and not matched[p]:
            matched[v] = matched[p] = 1
            edges.append((v, p) if v < p else (p, v))
    return len(edges), edges


def maximum_matching(g: Graph) -> Matching:
    """A maximum matching witness.

    Trees of any order use the linear greedy algorithm (deterministic via the
    rooted traversal order); other graphs use the subset DP, whose witness is
    the lexicographically smallest maximum matching.

    Raises:
        TooLarge: for non-trees above :data:`MATCHING_DP_CEILING`.
    """
    if is_tree(g):
        _, edges = _tree_matching(g)
    else:
        _, edges = _bitmask_matching(g)
    return Matching(frozenset(edges))


def matching_number(g: Graph) -> int:
    """Size of a maximum matching."""
    if is_tree(g):
        return _tree_matching(g)[0]
    return _bitmask_matching(g)[0]


def edge_cover_number(g: Graph) -> int:
    """Minimum number of edges covering every vertex, via the complement
    identity with the matching number.

    Raises:
        IsolatedVertex: when some vertex has no incident edge (no cover exists).
    """
    for v in range(g.n):
        if not g.adjacency[v]:
            raise IsolatedVertex(f"vertex {v} has no incident edge")
    return g.n - matching_number(g)


def _find_cycle_edges(g: Graph) -> list[tuple[int, int]]:
    """Edges of one cycle, or [] when the graph is acyclic.

    Breadth-first search (neighbors in ascending order); the first non-tree
    edge closes a cycle through the two endpoints' meeting ancestor.  A
    non-tree edge can join two branches of the search tree, so both
    endpoints are climbed rather than only one.
    """
    adj = g.adjacency
    parent = [-2] * g.n  # -2 unvisited, -1 root
    depth = [0] * g.n
    for start in range(g.n):
        if parent[start] != -2:
            continue
        parent[start] = -1
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in sorted(adj[v]):
                if parent[w] == -2:
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
                    continue
                if w == parent[v] or v == parent[w]:
                    continue
                cycle = [(v, w) if v < w else (w, v)]
                a, b = v, w
                while depth[a] > depth[b]:
                    cycle.append((a, parent[a]) if a < parent[a] else (parent[a], a))
                    a = parent[a]
                while depth[b] > depth[a]:
                    cycle.append((b, parent[b]) if b < parent[b] else (parent[b], b))
                    b = parent[b]
                while a != b:
                    cycle.append((a, parent[a]) if a < parent[a] else (parent[a], a))
                    cycle.append((b, parent[b]) if b < parent[b] else (parent[b], b))
                    a = parent[a]
                    b = parent[b]
                return cycle
    return []


def spanning_tree_preserving_matching(g: Graph) -> Graph:
    """Spanning tree with the same matching number as the host graph.

    Fixes one maximum matching, then repeatedly finds a cycle and deletes its
    lexicographically smallest non-matching edge (a cycle can never consist
    of matching edges alone), so the fixed matching survives into the tree.

    Raises:
        NotConnected: when the input is disconnected.
    """
    if not is_connected(g):
        raise NotConnected("spanning trees require a connected graph")
    kept = maximum_matching(g).edges
    current = g
    while current.m > current.n - 1:
        cycle = _find_cycle_edges(current)
        candidates = sorted(e for e in cycle if e not in kept)
        current = Graph(current.n, current.edges - {candidates[0]})
    return current


def spanning_unicyclic_preserving_matching(g: Graph) -> Graph:
    """Connected spanning subgraph with exactly one cycle and the host's
    matching number: the matching-preserving spanning tree plus the smallest
    leftover edge.

    Raises:
        NotConnected: when the input is disconnected.
        NoCycle: when the input is itself a tree (no cycle to keep).
    """
    if not is_connected(g):
        raise NotConnected("spanning subgraphs require a connected graph")
    if g.m < g.n:
        raise NoCycle("the graph is a tree; it has no cycle")
    tree = spanning_tree_preserving_matching(g)
    extra = min(g.edges - tree.edges)
    return Graph(g.n, tree.edges | {extra})
