"""Acceptance suite: one test per criterion, each printing a PASS/FAIL
line (run with `pytest -s tests/test_acceptance.py` to see them live).

Criteria combine exact finite statements with seeded property corpora;
every tolerance is zero (integer or exact-rational comparisons) and
every runtime budget is asserted.
"""

import json
import math
import time
from fractions import Fraction

import pytest

from djturan import (
    EdgeSubgraph,
    build_graph,
    contains_cycle,
    count_six_cycles,
    enumerate_cycles,
    girth,
    seeded_random_subgraphs,
    six_cycles_through_path,
)
from djturan import auxiliary as aux
from djturan import chi as chi_mod
from djturan.bounds import exponent_crossover
from djturan.cli import main as cli_main
from djturan.search import count_4a_cycles, exact_extremal, heuristic_extremal

from oracles import naive_cycles, neighbor_map

CORPUS_SEED = 20240501
CORPUS_SIZE = 100


def conclude(num, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {num:2d} {status} {name} {detail}".rstrip())
    assert ok, f"criterion {num} ({name}) failed: {detail}"


@pytest.fixture(scope="module")
def odd3():
    return build_graph(5, 2)


@pytest.fixture(scope="module")
def odd4():
    return build_graph(7, 3)


@pytest.fixture(scope="module")
def corpus3(odd3):
    return seeded_random_subgraphs(odd3, CORPUS_SEED, CORPUS_SIZE)


@pytest.fixture(scope="module")
def corpus4(odd4):
    return seeded_random_subgraphs(odd4, CORPUS_SEED + 1, CORPUS_SIZE)


def grid(max_k, n_hi):
    return [(n, k) for k in range(1, max_k + 1) for n in range(2 * k + 1, n_hi + 1)]


def test_criterion_1_edge_count_identities():
    t0 = time.time()
    ok = True
    for n, k in grid(4, 10):
        g = build_graph(n, k)
        if g.num_edges != (n - k) * math.comb(n, k) or g.num_edges != (k + 1) * math.comb(
            n, k + 1
        ):
            ok = False
    elapsed = time.time() - t0
    conclude(1, "edge-count identities", ok and elapsed < 1.0, f"({elapsed:.2f}s)")


def test_criterion_2_girth():
    t0 = time.time()
    ok = all(girth(EdgeSubgraph.full(build_graph(n, k))) == 6 for n, k in grid(4, 10))
    elapsed = time.time() - t0
    conclude(2, "host girth is 6", ok and elapsed < 10.0, f"({elapsed:.2f}s)")


def test_criterion_3_six_cycle_census():
    t0 = time.time()
    ok = True
    details = []
    for n, k in grid(3, 9):
        g = build_graph(n, k)
        formula = count_six_cycles(g)
        enum = enumerate_cycles(EdgeSubgraph.full(g), 6, cap=formula + 1)
        if enum.truncated or len(enum.cycles) != formula:
            ok = False
        details.append(f"J({n};{k},{k + 1})={len(enum.cycles)}")
    g523 = build_graph(5, 2)
    g623 = build_graph(6, 2)
    ok = ok and count_six_cycles(g523) == 20 and count_six_cycles(g623) == 60
    elapsed = time.time() - t0
    conclude(3, "six-cycle census", ok and elapsed < 60.0, f"({elapsed:.2f}s)")


def test_criterion_4_six_cycles_through_paths(odd3, odd4):
    ok = True
    for g in (odd3, odd4):
        n, k = g.n, g.k
        for e in range(g.num_edges):
            u, w = g.edge_endpoints(e)
            if six_cycles_through_path(g, (u, w)) != k * (n - k - 1):
                ok = False
        for m in range(g.num_vertices):
            nbrs = g.neighbors(m)
            want = (n - k - 1) if g.part_of(nbrs[0]) == 1 else k
            for i in range(len(nbrs)):
                for j in range(i + 1, len(nbrs)):
                    if six_cycles_through_path(g, (nbrs[i], m, nbrs[j])) != want:
                        ok = False
        for e in range(g.num_edges):
            m1, m2 = g.edge_endpoints(e)
            for a in g.neighbors(m1):
                if a == m2:
                    continue
                for b in g.neighbors(m2):
                    if b != m1 and b != a and six_cycles_through_path(g, (a, m1, m2, b)) != 1:
                        ok = False
    conclude(4, "6-cycles through paths (exhaustive)", ok)


def test_criterion_5_chi_identities(corpus3, corpus4):
    ok = True
    for corpus in (corpus3, corpus4):
        for s in corpus:
            vec = chi_mod.chi_vector(s)
            if sum(vec.ratios(), Fraction(0)) != 1:
                ok = False
            if not chi_mod.verify_edge_identity(s, vec).ok:
                ok = False
    conclude(5, "chi identities on seeded corpora", ok, f"(2x{CORPUS_SIZE} subgraphs)")


def test_criterion_6_c6_hard_bound(odd3):
    t0 = time.time()
    res = exact_extremal(odd3, 6)
    witness_free = not naive_cycles(neighbor_map(res.witness), 6)
    elapsed = time.time() - t0
    ok = res.exact and 10 <= res.value <= 25 and witness_free and elapsed < 300
    conclude(6, "hexagon-free extremal value", ok, f"(value={res.value}, {elapsed:.2f}s)")


def test_criterion_7_aux_identities(corpus3, corpus4, odd3, odd4):
    ok = True
    for g, corpus in ((odd3, corpus3), (odd4, corpus4)):
        n, k = g.n, g.k
        for s in corpus:
            if not all(r.ok for r in aux.verify_hx_identities(s)):
                ok = False
            if not aux.verify_hgamma_identity(s).ok:
                ok = False
        probe = corpus[0]
        for x in range(g.num_vertices):
            hx = aux.build_Hx(probe, x)
            want = k * (n - k) if g.part_of(x) == 1 else (k + 1) * (n - k - 1)
            if hx.num_vertices != want:
                ok = False
        for gm in aux.all_pivots(g):
            if aux.build_Hgamma(probe, gm).num_vertices != n - k + 1:
                ok = False
    conclude(7, "auxiliary edge-sum identities and vertex counts", ok)


def test_criterion_8_freeness_transfer(odd3):
    witnesses = [exact_extremal(odd3, 8).witness, heuristic_extremal(odd3, 8).witness]
    ok = True
    for s in witnesses:
        if contains_cycle(s, 8):
            ok = False
        for gm in aux.all_pivots(odd3):
            if aux.aux_contains_cycle(aux.build_Hgamma(s, gm), 4):
                ok = False
        for x in range(odd3.num_vertices):
            if aux.aux_contains_cycle(aux.build_Hx(s, x), 4):
                ok = False
    conclude(8, "C8-freeness transfers to auxiliary graphs", ok)


def test_criterion_9_cycle_lifting(corpus3, corpus4, odd3, odd4):
    ok = True
    lifted = 0
    for g, corpus in ((odd3, corpus3), (odd4, corpus4)):
        for s in corpus:
            for gm in aux.all_pivots(g):
                hg = aux.build_Hgamma(s, gm)
                for m in range(3, hg.num_vertices + 1):
                    found, truncated = aux.aux_enumerate_cycles(hg, m)
                    if truncated:
                        ok = False
                    for cyc in found:
                        host_cycle = aux.lift_cycle(hg, cyc)  # raises on collision
                        lifted += 1
                        if host_cycle.length != 2 * m:
                            ok = False
    conclude(9, "auxiliary cycles lift to host cycles", ok, f"({lifted} lifts)")


def test_criterion_10_direction_lemmas(odd3, odd4):
    t0 = time.time()
    ok = True
    checked = 0
    for g in (odd3, odd4):
        full = EdgeSubgraph.full(g)
        for length in (6, 8, 10):
            for c in enumerate_cycles(full, length).cycles:
                checked += 1
                if len(aux.direction_set(g, c)) > length // 2:
                    ok = False
    s14 = heuristic_extremal(odd4, 14).witness
    rep = aux.verify_direction_lemmas(s14, 2, 2)
    ok = ok and rep.ok and rep.overlap_pairs_checked > 0
    elapsed = time.time() - t0
    conclude(
        10,
        "direction bounds and overlaps",
        ok and elapsed < 600,
        f"({checked} cycles, {rep.overlap_pairs_checked} pairs, {elapsed:.1f}s)",
    )


def test_criterion_11_aux_cycle_count_inequality(corpus3, corpus4, odd3, odd4):
    ok = True
    for g, corpus in ((odd3, corpus3), (odd4, corpus4)):
        for s in corpus:
            host = count_4a_cycles(s, 2)
            if host.truncated:
                ok = False
            total = 0
            for gm in aux.all_pivots(g):
                found, truncated = aux.aux_enumerate_cycles(aux.build_Hgamma(s, gm), 4)
                if truncated:
                    ok = False
                total += len(found)
            if host.count < total:
                ok = False
    conclude(11, "host 8-cycles dominate pivoted 4-cycles", ok)


def test_criterion_12_crossover():
    ok = all(
        exponent_crossover(l).paired_is_stronger == (Fraction(l) < Fraction(98, 10))
        for l in range(3, 100, 2)
    )
    conclude(12, "exponent crossover at odd l", ok, "(3..99)")


def test_criterion_13_verify_determinism(capsys):
    argv = ["verify", "--max-n", "6", "--seed", "7"]
    code1 = cli_main(list(argv))
    out1 = capsys.readouterr().out
    code2 = cli_main(list(argv))
    out2 = capsys.readouterr().out
    ok = code1 == 0 and code2 == 0 and out1 == out2 and json.loads(out1)["result"]["ok"]
    with capsys.disabled():
        conclude(13, "verify output is byte-identical", ok)
