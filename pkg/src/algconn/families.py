"""Parametric graph families: paths, stars, cycles, double brooms, and the
coalescence / branch-relocation constructions.

A double broom ``(k, l, d)`` is a path on ``d`` vertices with ``k`` extra
leaves attached to its first vertex and ``l`` extra leaves attached to its
last vertex.  The fixed vertex layout is: path vertices ``0..d-1`` in order,
left leaves ``d..d+k-1``, right leaves ``d+k..d+k+l-1``.  Degenerate
parameters stay consistent: ``d = 1`` gives a star, ``k + l <= 1`` gives a
path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Infeasible, InvalidVertex, NotConnected, TooSmall, TrivialBranch
from .graph import Graph, is_connected
from .matching import matching_number


def path_graph(n: int) -> Graph:
    """Path on ``n >= 1`` vertices, edges ``(i, i+1)``."""
    if n < 1:
        raise TooSmall("paths need at least one vertex")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    """Star with the given number of leaves attached to center 0."""
    if leaves < 0:
        raise Infeasible("a star cannot have negative leaves")
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def cycle_graph(n: int) -> Graph:
    """Cycle on ``n >= 3`` vertices."""
    if n < 3:
        raise TooSmall("cycles need at least three vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    """Complete graph on ``n >= 1`` vertices."""
    if n < 1:
        raise TooSmall("complete graphs need at least one vertex")
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


@dataclass(frozen=True)
class BroomParams:
    """Double-broom parameters: ``k, l >= 0`` leaves and a path on ``d >= 1``
    vertices, for total order ``k + l + d``."""

    k: int
    l: int
    d: int

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise Infeasible("leaf counts must be nonnegative")
        if self.d < 1:
            raise Infeasible("the central path needs at least one vertex")

    @property
    def order(self) -> int:
        return self.k + self.l + self.d


def double_broom(params: BroomParams) -> Graph:
    """Build the double broom for ``params`` in the fixed vertex layout.

    Raises:
        TooSmall: when the total order is below 2.
    """
    k, l, d = params.k, params.l, params.d
    if params.order < 2:
        raise TooSmall("double brooms need at least two vertices")
    edges = [(i, i + 1) for i in range(d - 1)]
    edges.extend((0, d + i) for i in range(k))
    edges.extend((d - 1, d + k + i) for i in range(l))
    return Graph(params.order, frozenset(edges))


def balanced_broom(n: int, d: int) -> Graph:
    """Double broom of order ``n`` on a ``d``-vertex path whose leaves are
    split as evenly as possible (the left end gets the extra leaf).

    Raises:
        Infeasible: when ``n < d + 1`` or ``d < 1``.
    """
    if d < 1:
        raise Infeasible("the central path needs at least one vertex")
    if n < d + 1:
        raise Infeasible(f"order {n} cannot host a {d}-vertex path plus a leaf")
    spare = n - d
    return double_broom(BroomParams(k=(spare + 1) // 2, l=spare // 2, d=d))


def extremal_tree(n: int, beta: int) -> Graph:
    """The balanced double broom of order ``n`` on a ``(2*beta - 1)``-vertex
    path; its matching number equals ``beta``.

    Raises:
        Infeasible: when ``beta < 1`` or ``n < 2 * beta``.
    """
    if beta < 1:
        raise Infeasible("matching number must be at least 1")
    if n < 2 * beta:
        raise Infeasible(f"no tree of order {n} has matching number {beta}")
    tree = balanced_broom(n, 2 * beta - 1)
    assert matching_number(tree) == beta
    return tree


def branch_vertex_map(host_order: int, branch: Graph, root: int) -> list[int]:
    """Labels the branch's vertices take inside a coalescence: ``root`` maps to
    the host's identification vertex slot (reported here as ``-1``); every
    other branch vertex ``w`` maps to ``host_order + w``, shifted down by one
    past the root."""
    return [
        -1 if w == root else host_order + w - (1 if w > root else 0)
        for w in range(branch.n)
    ]


def coalescence(g1: Graph, v: int, g2: Graph, u: int) -> Graph:
    """Glue ``g2`` onto ``g1`` by identifying ``u`` (of ``g2``) with ``v``
    (of ``g1``).  Vertices of ``g1`` keep their labels; the remaining vertices
    of ``g2`` follow in ascending order starting at ``g1.n``.

    Raises:
        InvalidVertex: when ``v`` or ``u`` is out of range.
    """
    if not 0 <= v < g1.n:
        raise InvalidVertex(f"vertex {v} out of range for order {g1.n}")
    if not 0 <= u < g2.n:
        raise InvalidVertex(f"vertex {u} out of range for order {g2.n}")
    mapping = branch_vertex_map(g1.n, g2, u)
    mapping[u] = v
    edges = set(g1.edges)
    edges.update((mapping[a], mapping[b]) for a, b in g2.edges)
    return Graph(g1.n + g2.n - 1, frozenset(edges))


def relocate_branch(
    g1: Graph, v1: int, v2: int, g2: Graph, u: int
) -> tuple[Graph, Graph]:
    """The pair ``(G, G*)`` where ``G`` glues the branch ``g2`` (at its vertex
    ``u``) onto ``g1`` at ``v2`` and ``G*`` glues it onto ``v1`` instead.

    Both graphs share one labeling — ``g1`` keeps its labels and the branch
    occupies ``g1.n ..`` in the same order — so vertex-indexed quantities
    (Fiedler entries in particular) are directly comparable.

    Raises:
        InvalidVertex: for out-of-range or equal attachment vertices.
        TrivialBranch: when the branch has fewer than two vertices.
        NotConnected: when either part is disconnected.
    """
    if not 0 <= v1 < g1.n:
        raise InvalidVertex(f"vertex {v1} out of range for order {g1.n}")
    if not 0 <= v2 < g1.n:
        raise InvalidVertex(f"vertex {v2} out of range for order {g1.n}")
    if v1 == v2:
        raise InvalidVertex("attachment vertices must be distinct")
    if g2.n < 2:
        raise TrivialBranch("the branch needs at least two vertices")
    if not is_connected(g1) or not is_connected(g2):
        raise NotConnected("both parts of a relocation must be connected")
    g = coalescence(g1, v2, g2, u)
    g_star = coalescence(g1, v1, g2, u)
    return g, g_star
