"""Core graph type, text formats, and canonical forms."""

import itertools
import random

import pytest

from algconn import (
    CanonicalForm,
    Graph,
    InvalidVertex,
    ParseError,
    SelfLoop,
    TooLarge,
    canonical_form,
    complete_graph,
    cycle_graph,
    diameter,
    encode_graph6,
    format_edge_list,
    from_edge_list,
    is_connected,
    is_isomorphic,
    is_tree,
    parse_edge_list,
    parse_graph6,
    path_graph,
    relabel,
    star_graph,
)
from algconn.graph import CANONICAL_CEILING
from conftest import brute_canonical_code, brute_is_isomorphic


def random_graph(n, p, rng):
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return from_edge_list(n, edges)


def test_graph_basics():
    g = from_edge_list(4, [(0, 1), (2, 1), (2, 3)])
    assert g.n == 4
    assert g.m == 3
    assert g.sorted_edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.neighbors(1) == frozenset({0, 2})
    assert g.degree(2) == 2
    assert g.degree_sequence() == (2, 2, 1, 1)
    assert g.adjacency[0] == frozenset({1})


def test_graph_normalizes_edge_order():
    assert from_edge_list(3, [(2, 0)]) == from_edge_list(3, [(0, 2)])


def test_graph_rejects_self_loops_and_bad_vertices():
    with pytest.raises(SelfLoop):
        from_edge_list(3, [(1, 1)])
    with pytest.raises(InvalidVertex):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(InvalidVertex):
        from_edge_list(3, [(-1, 0)])
    with pytest.raises(InvalidVertex):
        Graph(-1, frozenset())
    assert Graph(0, frozenset()).m == 0  # the empty graph is allowed


def test_repr_is_deterministic():
    g = from_edge_list(4, [(2, 3), (0, 1)])
    assert repr(g) == repr(from_edge_list(4, [(0, 1), (3, 2)]))


def test_relabel():
    g = path_graph(3)  # 0-1-2
    h = relabel(g, [2, 0, 1])  # old 0 -> 2, old 1 -> 0, old 2 -> 1
    assert h.sorted_edges() == [(0, 1), (0, 2)]
    with pytest.raises(InvalidVertex):
        relabel(g, [0, 0, 1])


def test_connectivity_predicates(zoo):
    assert is_connected(zoo["k1"])
    assert is_connected(zoo["p5"])
    assert not is_connected(zoo["two_edges"])
    assert not is_connected(zoo["empty3"])
    assert is_tree(zoo["p5"])
    assert is_tree(zoo["star5"])
    assert is_tree(zoo["k1"])
    assert not is_tree(zoo["c5"])
    assert not is_tree(zoo["two_edges"])


def test_diameter(zoo):
    assert diameter(zoo["k1"]) == 0
    assert diameter(zoo["p5"]) == 4
    assert diameter(zoo["k5"]) == 1
    assert diameter(zoo["c6"]) == 3
    assert diameter(zoo["star5"]) == 2
    from algconn import NotConnected

    with pytest.raises(NotConnected):
        diameter(zoo["two_edges"])


def test_graph6_known_strings():
    assert encode_graph6(complete_graph(3)) == "Bw"
    assert encode_graph6(path_graph(2)) == "A_"
    assert encode_graph6(from_edge_list(3, [(0, 1), (1, 2)])) == "Bg"
    assert parse_graph6("Bw") == complete_graph(3)
    assert parse_graph6("A_") == path_graph(2)


def test_graph6_round_trip_random():
    rng = random.Random(7)
    for n in [1, 2, 3, 7, 12, 20, 40, 62]:
        for p in (0.2, 0.7):
            g = random_graph(n, p, rng)
            assert parse_graph6(encode_graph6(g)) == g


def test_graph6_rejects_bad_input():
    with pytest.raises(ParseError):
        parse_graph6("")
    with pytest.raises(ParseError):
        parse_graph6("#")
    with pytest.raises(ParseError):
        parse_graph6("Bwww")  # too many payload bytes
    with pytest.raises(ParseError):
        parse_graph6("B")  # too few
    with pytest.raises(TooLarge):
        encode_graph6(Graph(63, frozenset()))


def test_edge_list_round_trip(zoo):
    for g in zoo.values():
        assert parse_edge_list(format_edge_list(g)) == g
    text = format_edge_list(zoo["p3"])
    assert text == "3 2\n0 1\n1 2\n"


def test_edge_list_rejects_malformed():
    with pytest.raises(ParseError):
        parse_edge_list("")
    with pytest.raises(ParseError):
        parse_edge_list("3\n0 1\n")
    with pytest.raises(ParseError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(ParseError):
        parse_edge_list("3 1\n0 x\n")


def test_canonical_form_invariant_under_relabeling():
    rng = random.Random(11)
    for n in range(2, 8):
        g = random_graph(n, 0.5, rng)
        base = canonical_form(g)
        for _ in range(10):
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_form(relabel(g, perm)) == base


def test_canonical_form_separates_non_isomorphic():
    """On all graphs over 4 vertices, equal form must mean isomorphic."""
    graphs = []
    pairs = list(itertools.combinations(range(4), 2))
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        graphs.append(from_edge_list(4, edges))
    for a, b in itertools.combinations(graphs, 2):
        same = canonical_form(a) == canonical_form(b)
        assert same == brute_is_isomorphic(a, b)


def test_is_isomorphic_matches_brute_force(zoo):
    named = [g for g in zoo.values() if g.n <= 6]
    for a, b in itertools.combinations(named, 2):
        assert is_isomorphic(a, b) == brute_is_isomorphic(a, b)
    star = star_graph(3)
    assert is_isomorphic(star, relabel(star, [3, 1, 0, 2]))


def test_tree_and_generic_codes_agree_on_trees():
    """A tree's code through the tree route must match any relabeling of it,
    and differ from every non-isomorphic tree's."""
    t1 = path_graph(6)
    t2 = star_graph(5)
    t3 = from_edge_list(6, [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5)])
    forms = {canonical_form(t).bits for t in (t1, t2, t3)}
    assert len(forms) == 3
    assert canonical_form(relabel(t3, [5, 3, 0, 1, 2, 4])) == canonical_form(t3)


def test_canonical_form_size_limit():
    with pytest.raises(TooLarge):
        canonical_form(cycle_graph(CANONICAL_CEILING + 1))
    # trees use the linear-time route but share the documented ceiling
    with pytest.raises(TooLarge):
        canonical_form(path_graph(CANONICAL_CEILING + 1))


def test_canonical_form_is_hashable_identity():
    f = canonical_form(path_graph(4))
    assert isinstance(f, CanonicalForm)
    assert hash(f) == hash(canonical_form(relabel(path_graph(4), [3, 2, 1, 0])))


def test_brute_code_consistency():
    """The test oracle itself must be permutation-invariant."""
    g = from_edge_list(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])
    code = brute_canonical_code(g)
    assert brute_canonical_code(relabel(g, [4, 2, 3, 0, 1])) == code
