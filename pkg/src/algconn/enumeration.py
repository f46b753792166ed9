"""Isomorph-free enumeration of small trees and connected graphs.

Trees come from sequence-decoding every labeled tree on ``n`` vertices
(``n^(n-2)`` of them); connected graphs come from every edge subset of the
complete graph, filtered by connectivity.  Both dedup to one representative
per isomorphism class by deleting whole relabeling orbits from the sorted
array of labeled codes — each class costs one pass over the ``n!`` vertex
permutations, so the work is bounded by the tiny unlabeled counts rather
than by per-labeled-graph canonicalization.

Streams yield graphs in a deterministic order (sorted by canonical code) and
are cached per ``(kind, n)``, so repeated scans are cheap.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import EmptyClassWarning, TooLarge, TooSmall
from .graph import Graph, _bit_position_table, _unpack_code, canonical_form
from .matching import matching_number

#: Labeled-tree decoding covers 9^7 sequences in a few seconds; above this the
#: labeled class is out of reach.
TREE_CEILING = 9

#: Edge subsets of the complete graph: 2^21 masks at order 7.
CONNECTED_CEILING = 7

KIND_TREES = "trees"
KIND_CONNECTED = "connected"

_CHUNK = 1 << 18


@dataclass(frozen=True)
class GraphStream:
    """A replayable, deterministic stream over one unlabeled graph class.

    ``kind`` selects trees or connected graphs of order ``n``; an optional
    filter restricts to a fixed matching number or edge cover number.
    """

    n: int
    kind: str
    matching_filter: int | None = None
    cover_filter: int | None = None

    def __iter__(self) -> Iterator[Graph]:
        base = _tree_list(self.n) if self.kind == KIND_TREES else _connected_list(self.n)
        want_beta: int | None = self.matching_filter
        if self.cover_filter is not None:
            want_beta = self.n - self.cover_filter
        for g in base:
            if want_beta is not None:
                if self.cover_filter is not None and any(
                    not g.adjacency[v] for v in range(g.n)
                ):
                    continue  # no edge cover exists
                if matching_number(g) != want_beta:
                    continue
            yield g


def all_trees(n: int) -> GraphStream:
    """Stream of all trees of order ``n``, one per isomorphism class.

    Raises:
        TooSmall: for ``n < 1``.
        TooLarge: above :data:`TREE_CEILING`.
    """
    if n < 1:
        raise TooSmall("trees need at least one vertex")
    if n > TREE_CEILING:
        raise TooLarge(f"tree enumeration is limited to order {TREE_CEILING}")
    return GraphStream(n=n, kind=KIND_TREES)


def all_connected_graphs(n: int) -> GraphStream:
    """Stream of all connected graphs of order ``n``, one per isomorphism class.

    Raises:
        TooSmall: for ``n < 1``.
        TooLarge: above :data:`CONNECTED_CEILING`.
    """
    if n < 1:
        raise TooSmall("graphs need at least one vertex")
    if n > CONNECTED_CEILING:
        raise TooLarge(
            f"connected-graph enumeration is limited to order {CONNECTED_CEILING}"
        )
    return GraphStream(n=n, kind=KIND_CONNECTED)


def with_matching(stream: GraphStream, beta: int) -> GraphStream:
    """Restrict a stream to graphs with the given matching number.

    Emits :class:`EmptyClassWarning` (and streams nothing) when no connected
    graph of that order can have the requested value.
    """
    if beta < 1 or beta > stream.n // 2:
        warnings.warn(
            f"no connected graph of order {stream.n} has matching number {beta}",
            EmptyClassWarning,
            stacklevel=2,
        )
    return replace(stream, matching_filter=beta, cover_filter=None)


def with_cover(stream: GraphStream, gamma: int) -> GraphStream:
    """Restrict a stream to graphs with the given edge cover number.

    Emits :class:`EmptyClassWarning` (and streams nothing) when the value is
    infeasible for connected graphs of that order.
    """
    if gamma < (stream.n + 1) // 2 or gamma > stream.n - 1:
        warnings.warn(
            f"no connected graph of order {stream.n} has edge cover number {gamma}",
            EmptyClassWarning,
            stacklevel=2,
        )
    return replace(stream, cover_filter=gamma, matching_filter=None)


# ---------------------------------------------------------------------------
# labeled trees: vectorized sequence decode + orbit dedup
# ---------------------------------------------------------------------------


def _labeled_tree_codes(n: int) -> np.ndarray:
    """Sorted packed edge-set codes of every labeled tree on ``n >= 3`` vertices."""
    table = _bit_position_table(n)
    total = n ** (n - 2)
    out = np.empty(total, dtype=np.uint64)
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        idx = np.arange(start, stop, dtype=np.int64)
        m = stop - start
        rows = np.arange(m)
        seq = np.empty((m, n - 2), dtype=np.int64)
        for i in range(n - 2):
            seq[:, i] = (idx // (n ** (n - 3 - i))) % n
        deg = np.ones((m, n), dtype=np.int8)
        for i in range(n - 2):
            deg[rows, seq[:, i]] += 1
        eu = np.empty((m, n - 1), dtype=np.int64)
        ev = np.empty((m, n - 1), dtype=np.int64)
        for i in range(n - 2):
            leaf = np.argmax(deg == 1, axis=1)
            s = seq[:, i]
            eu[:, i] = leaf
            ev[:, i] = s
            deg[rows, leaf] = 0
            deg[rows, s] -= 1
        a = np.argmax(deg == 1, axis=1)
        deg[rows, a] = 0
        b = np.argmax(deg == 1, axis=1)
        eu[:, n - 2] = a
        ev[:, n - 2] = b
        lo = np.minimum(eu, ev)
        hi = np.maximum(eu, ev)
        pos = table[lo, hi].astype(np.uint64)
        out[start:stop] = np.bitwise_or.reduce(
            np.left_shift(np.uint64(1), pos), axis=1
        )
    out.sort()
    return out


def _all_permutations(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64)


def _orbit_representatives(codes: np.ndarray, n: int) -> list[Graph]:
    """One minimal-code representative per isomorphism class.

    ``codes`` must be the sorted array of every labeled member's packed code.
    Processing order: take the smallest still-alive code, compute its whole
    relabeling orbit in one vectorized pass, delete the orbit, repeat.
    """
    table = _bit_position_table(n)
    perms = _all_permutations(n)
    alive = np.ones(codes.shape[0], dtype=bool)
    reps: list[Graph] = []
    ptr = 0
    total = codes.shape[0]
    while True:
        while ptr < total and not alive[ptr]:
            ptr += 1
        if ptr >= total:
            break
        rep = _unpack_code(n, int(codes[ptr]))
        orbit = np.zeros(perms.shape[0], dtype=np.uint64)
        for u, v in rep.sorted_edges():
            lo = np.minimum(perms[:, u], perms[:, v])
            hi = np.maximum(perms[:, u], perms[:, v])
            orbit |= np.left_shift(np.uint64(1), table[lo, hi].astype(np.uint64))
        members = np.unique(orbit)
        locs = np.searchsorted(codes, members)
        alive[locs] = False
        reps.append(_unpack_code(n, int(members[0])))
    return reps


@lru_cache(maxsize=None)
def _tree_list(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    if n == 2:
        return (Graph(2, frozenset({(0, 1)})),)
    codes = _labeled_tree_codes(n)
    reps = _orbit_representatives(codes, n)
    reps.sort(key=lambda g: canonical_form(g).bits)
    return tuple(reps)


# ---------------------------------------------------------------------------
# connected graphs: all edge subsets + connectivity filter + orbit dedup
# ---------------------------------------------------------------------------


def _connected_codes(n: int) -> np.ndarray:
    """Sorted packed codes of every connected labeled graph on ``n`` vertices."""
    pair_count = n * (n - 1) // 2
    masks = np.arange(1 << pair_count, dtype=np.int64)
    rows_bits = np.zeros((n, masks.shape[0]), dtype=np.uint8)
    for j in range(1, n):
        for i in range(j):
            pos = pair_count - 1 - (j * (j - 1) // 2 + i)
            bit = ((masks >> pos) & 1).astype(np.uint8)
            rows_bits[i] |= bit << j
            rows_bits[j] |= bit << i
    reach = np.ones(masks.shape[0], dtype=np.uint8)
    for _ in range(n - 1):
        for v in range(n):
            has = (reach >> v) & 1
            reach |= rows_bits[v] * has
    connected = reach == (1 << n) - 1
    return masks[connected].astype(np.uint64)


@lru_cache(maxsize=None)
def _connected_list(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    codes = _connected_codes(n)
    reps = _orbit_representatives(codes, n)
    reps.sort(key=lambda g: canonical_form(g).bits)
    return tuple(reps)
