"""End-to-end acceptance checks: ten criteria, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see every verdict
line; under plain ``pytest`` the lines surface only for failing criteria.
Budgets are wall-clock and include everything a criterion needs when run
in file order within one process (later criteria reuse warm caches, which
is also how a full session runs them).
"""

import time

from algconn import (
    algebraic_connectivity,
    all_connected_graphs,
    all_trees,
    bound_cover,
    bound_matching,
    complete_graph,
    encode_graph6,
    extremal_tree,
    is_isomorphic,
    kirkland_bound,
    matching_number,
    parse_graph6,
    path_alpha,
    path_graph,
    star_graph,
    verify,
)
from conftest import brute_matching_number

TOL = 1e-9


def _verdict(num: int, ok: bool, detail: str, elapsed: float) -> None:
    state = "PASS" if ok else "FAIL"
    print(f"[acceptance {num:2d}] {state} {detail} ({elapsed:.2f}s)")
    assert ok, f"criterion {num}: {detail}"


def test_criterion_01_closed_forms():
    start = time.perf_counter()
    ok = True
    for n in range(2, 51):
        ok &= abs(algebraic_connectivity(path_graph(n)) - path_alpha(n)) <= TOL
    for m in range(2, 51):
        ok &= abs(algebraic_connectivity(star_graph(m)) - 1.0) <= TOL
    for n in range(2, 21):
        ok &= abs(algebraic_connectivity(complete_graph(n)) - n) <= TOL
    elapsed = time.perf_counter() - start
    ok &= elapsed < 5.0
    _verdict(1, ok, "paths/stars/completes match closed forms", elapsed)


def test_criterion_02_tree_minimizers():
    start = time.perf_counter()
    ok = True
    checked = 0
    for n in range(4, 10):
        report = verify("thm31", n=n)
        ok &= report.passed
        checked += report.checked
        if report.min_gap is not None:
            ok &= report.min_gap > TOL
        for wit in report.witnesses:
            g = parse_graph6(wit.graph6)
            ok &= is_isomorphic(g, extremal_tree(n, wit.beta))
    elapsed = time.perf_counter() - start
    ok &= elapsed < 120.0
    _verdict(2, ok, f"unique tree minimizers, {checked} trees scanned", elapsed)


def test_criterion_03_connected_minimizers():
    start = time.perf_counter()
    ok = True
    checked = 0
    for n in range(3, 8):
        report = verify("thm32", n=n)
        twin = verify("cor33", n=n)
        ok &= report.passed and twin.passed
        ok &= report.to_json() != twin.to_json()  # same content, different target
        ok &= report.to_json_dict()["witnesses"] == twin.to_json_dict()["witnesses"]
        checked += report.checked
        if n == 3:
            ok &= abs(report.min_gap - 2.0) <= TOL
    elapsed = time.perf_counter() - start
    ok &= elapsed < 600.0
    _verdict(
        3, ok, f"unique connected minimizers, {checked} graphs scanned", elapsed
    )


def test_criterion_04_bounds():
    start = time.perf_counter()
    ok = True
    for n in range(3, 8):
        ok &= verify("bound35", n=n).passed
        ok &= verify("bound36", n=n).passed
    for n in range(2, 51):
        for beta in range(1, n // 2 + 1):
            ok &= bound_cover(n, n - beta) == bound_matching(n, beta)
    elapsed = time.perf_counter() - start
    _verdict(4, ok, "alpha bounds hold; cover bound identical under n-beta", elapsed)


def test_criterion_05_broom_bound_grid():
    start = time.perf_counter()
    report = verify("lem34")
    ok = report.passed and report.checked == 150
    ok &= kirkland_bound(1, 1, 3) == 8 / 35
    ok &= kirkland_bound(2, 2, 2) == 1 / 4
    elapsed = time.perf_counter() - start
    ok &= elapsed < 10.0
    _verdict(5, ok, "double-broom bound grid and exact spot values", elapsed)


def test_criterion_06_ordering_lemmas():
    start = time.perf_counter()
    main = verify("lem24")
    alt = verify("lem24alt")  # reported, deliberately not asserted
    r25 = verify("lem25")
    r33 = verify("chain33")
    ok = main.passed and r25.passed and r33.passed
    for rep in (main, r25, r33):
        ok &= rep.min_gap is not None and rep.min_gap > TOL
    elapsed = time.perf_counter() - start
    detail = (
        "broom ordering margins hold "
        f"(as-printed reading: passed={alt.passed}, gap={alt.min_gap:.3g})"
    )
    _verdict(6, ok, detail, elapsed)


def test_criterion_07_relocation_sampling():
    start = time.perf_counter()
    report = verify("lem22", seed=0, count=1000)
    ok = report.passed
    ok &= report.checked >= 1000
    ok &= len(report.witnesses) == 0
    first = verify("lem22", seed=11, count=120).to_json()
    second = verify("lem22", seed=11, count=120).to_json()
    ok &= first == second
    elapsed = time.perf_counter() - start
    ok &= elapsed < 60.0
    _verdict(
        7,
        ok,
        f"{report.checked} qualifying relocations, zero violations, "
        f"{report.skipped} skipped draws",
        elapsed,
    )


def test_criterion_08_fiedler_classification():
    start = time.perf_counter()
    ok = True
    total = 0
    for n in range(2, 10):
        report = verify("fiedler21", n=n)
        ok &= report.passed
        total += report.checked
    elapsed = time.perf_counter() - start
    ok &= elapsed < 30.0
    _verdict(8, ok, f"all {total} trees classify as Type I or II", elapsed)


def test_criterion_09_spanning_subgraphs():
    start = time.perf_counter()
    ok = True
    for n in range(3, 8):
        ok &= verify("lem26", n=n).passed
        ok &= verify("cor27", n=n).passed
        ok &= verify("gallai", n=n).passed
    elapsed = time.perf_counter() - start
    _verdict(9, ok, "spanning tree/unicyclic subgraphs preserve beta", elapsed)


def test_criterion_10_oracles():
    start = time.perf_counter()
    ok = True
    for n in range(2, 8):
        for g in all_connected_graphs(n):
            ok &= matching_number(g) == brute_matching_number(g)
    tree_counts = [len(list(all_trees(n))) for n in range(2, 10)]
    ok &= tree_counts == [1, 1, 2, 3, 6, 11, 23, 47]
    conn_counts = [len(list(all_connected_graphs(n))) for n in range(2, 8)]
    ok &= conn_counts == [1, 2, 6, 21, 112, 853]
    round_trips = 0
    for n in range(2, 10):
        for t in all_trees(n):
            ok &= parse_graph6(encode_graph6(t)) == t
            round_trips += 1
    for n in range(2, 8):
        for g in all_connected_graphs(n):
            ok &= parse_graph6(encode_graph6(g)) == g
            round_trips += 1
    elapsed = time.perf_counter() - start
    _verdict(
        10, ok, f"matching DP, counts, {round_trips} graph6 round-trips", elapsed
    )
