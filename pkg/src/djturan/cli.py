"""Command-line frontend: every subsystem as a reproducible subcommand.

All subcommands emit JSON (sorted keys, fixed layout) carrying the tool
version and the fully resolved configuration, so identical invocations
produce byte-identical output in single-worker mode.  Budget exhaustion
is reported through truncation flags and exits 0; invariant violations
exit nonzero.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .core import (
    EdgeSubgraph,
    build_graph,
    cycle_free_lower_bound,
    distance,
    seeded_random_subgraphs,
    subset_mask,
    to_edge_list,
)
from .cycles import (
    contains_cycle,
    count_cycles,
    count_six_cycles,
    count_two_paths,
    degree_square_sum,
    enumerate_cycles,
    girth,
    six_cycles_through_path,
)
from . import chi as chi_mod
from . import auxiliary as aux_mod
from .bounds import bound_report, csv_series, exponent_crossover, report_text
from .errors import BudgetError, ParameterError
from .search import exact_extremal, heuristic_extremal, ramsey_search


def _emit(args, payload) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    sys.stdout.write(text)
    out = getattr(args, "output", None)
    if out:
        base = os.environ.get("DJTURAN_OUTPUT_DIR", "")
        path = out if os.path.isabs(out) or not base else os.path.join(base, out)
        with open(path, "w") as fh:
            fh.write(text)


def _config(args) -> dict:
    skip = {"func"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _payload(args, result) -> dict:
    return {"version": __version__, "config": _config(args), "result": result}


def _subgraph_from_args(g, args) -> EdgeSubgraph:
    if getattr(args, "mask_hex", None):
        return EdgeSubgraph.from_hex(g, args.mask_hex)
    if getattr(args, "empty", False):
        return EdgeSubgraph.empty(g)
    if getattr(args, "drop_edge", None) is not None:
        s = EdgeSubgraph.full(g)
        s.remove_edge(args.drop_edge)
        return s
    if getattr(args, "random_index", None) is not None:
        corpus = seeded_random_subgraphs(g, args.seed, args.random_index + 1)
        return corpus[args.random_index]
    return EdgeSubgraph.full(g)


# -- subcommands ------------------------------------------------------


def cmd_generate(args) -> int:
    g = build_graph(args.n, args.k)
    text = to_edge_list(g)
    if args.format == "text":
        sys.stdout.write(text)
        out = args.output
        if out:
            base = os.environ.get("DJTURAN_OUTPUT_DIR", "")
            path = out if os.path.isabs(out) or not base else os.path.join(base, out)
            with open(path, "w") as fh:
                fh.write(text)
    else:
        _emit(args, _payload(args, {"edge_list": text}))
    return 0


def cmd_cycles(args) -> int:
    g = build_graph(args.n, args.k)
    s = _subgraph_from_args(g, args)
    if args.girth:
        value = girth(s)
        result = {"girth": None if value == math.inf else value}
    elif args.enumerate:
        enum = enumerate_cycles(s, args.length, args.cycle_cap)
        result = {
            "length": enum.length,
            "count": len(enum.cycles),
            "truncated": enum.truncated,
            "cycles": [list(c.vertices) for c in enum.cycles],
        }
    else:
        result = count_cycles(s, args.length, args.cycle_cap).as_record()
    _emit(args, _payload(args, result))
    return 0


def cmd_chi(args) -> int:
    g = build_graph(args.n, args.k)
    s = _subgraph_from_args(g, args)
    vec = chi_mod.chi_vector(s, args.cycle_budget)
    identities = [
        chi_mod.verify_ratio_sum(vec).as_record(),
        chi_mod.verify_edge_identity(s, vec).as_record(),
    ]
    result = {
        "n_c6": vec.n_c6,
        "classes": vec.as_records(),
        "identities": identities,
        "num_classes": vec.table.num_classes,
    }
    _emit(args, _payload(args, result))
    return 0 if all(r["ok"] for r in identities) else 1


def cmd_aux(args) -> int:
    g = build_graph(args.n, args.k)
    s = _subgraph_from_args(g, args)
    result: dict = {}
    ok = True
    if args.center is not None:
        result["hx"] = aux_mod.build_Hx(s, args.center).as_record()
    elif args.gamma is not None:
        elements = [int(t) for t in args.gamma.split(",") if t.strip()] if args.gamma != "empty" else []
        hg = aux_mod.build_Hgamma(s, subset_mask(elements, g.n))
        result["hgamma"] = hg.as_record()
    else:
        reports = aux_mod.verify_hx_identities(s) + [aux_mod.verify_hgamma_identity(s)]
        result["identities"] = [r.as_record() for r in reports]
        ok = all(r.ok for r in reports)
    if args.lemmas:
        a, b = args.lemmas
        rep = aux_mod.verify_direction_lemmas(s, a, b, args.cycle_cap)
        result["direction_lemmas"] = rep.as_records()
        ok = ok and rep.ok
    _emit(args, _payload(args, result))
    return 0 if ok else 1


def cmd_extremal(args) -> int:
    g = build_graph(args.n, args.k)
    if args.heuristic:
        res = heuristic_extremal(g, args.cycle, cycle_cap=args.cycle_cap)
    else:
        res = exact_extremal(g, args.cycle, node_budget=args.node_budget)
    _emit(args, _payload(args, res.as_record()))
    return 0


def cmd_bounds(args) -> int:
    if args.series:
        rows = csv_series(args.cycle, range(1, args.k_max + 1), c=args.c)
        if args.format == "csv":
            for row in rows:
                sys.stdout.write(",".join(str(x) for x in row) + "\n")
            return 0
        _emit(args, _payload(args, {"series": [list(r) for r in rows[1:]]}))
        return 0
    rep = bound_report(
        args.n,
        args.k,
        args.cycle,
        c=args.c,
        search_value=args.search_value,
        search_exact=args.search_exact,
    )
    if args.format == "text":
        sys.stdout.write(report_text(rep))
    else:
        _emit(args, _payload(args, rep.as_record()))
    return 0 if rep.consistent else 1


def cmd_ramsey(args) -> int:
    g = build_graph(args.n, args.k)
    rep = ramsey_search(g, args.colors, args.cycle, seed=args.seed, rounds=args.rounds)
    _emit(args, _payload(args, rep.as_record()))
    return 0


# -- verify: the property suite over a parameter grid -----------------


def _check(name, n, k, ok, detail="") -> dict:
    rec = {"check": name, "n": n, "k": k, "ok": bool(ok)}
    if detail:
        rec["detail"] = detail
    return rec


def _bfs_distance(g, src, dst) -> int:
    if src == dst:
        return 0
    dist = {src: 0}
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for x in g.neighbors(u):
                if x not in dist:
                    dist[x] = dist[u] + 1
                    if x == dst:
                        return dist[x]
                    nxt.append(x)
        frontier = nxt
    return -1


def verify_cell(n: int, k: int, seed: int, corpus_size: int, cycle_budget: int) -> list[dict]:
    """All per-host checks for one (n, k); pure function of its arguments."""
    checks: list[dict] = []
    g = build_graph(n, k)
    full = EdgeSubgraph.full(g)

    expected_e = (n - k) * math.comb(n, k)
    checks.append(
        _check(
            "edge-count",
            n,
            k,
            g.num_edges == expected_e == (k + 1) * math.comb(n, k + 1),
            f"e={g.num_edges}",
        )
    )
    deg_ok = all(g.degree(v) == n - k for v in range(g.num_v1)) and all(
        g.degree(v) == k + 1 for v in range(g.num_v1, g.num_vertices)
    )
    checks.append(_check("degrees", n, k, deg_ok))
    checks.append(_check("girth", n, k, girth(full) == 6))

    n_c6 = count_six_cycles(g)
    if n_c6 <= cycle_budget:
        enum = enumerate_cycles(full, 6, cap=n_c6 + 1)
        checks.append(
            _check(
                "six-cycle-census",
                n,
                k,
                not enum.truncated and len(enum.cycles) == n_c6,
                f"count={len(enum.cycles)} formula={n_c6}",
            )
        )
    else:
        checks.append(_check("six-cycle-census", n, k, True, "skipped: over budget"))

    if g.num_vertices <= 500:
        dist_ok = True
        for u in range(g.num_vertices):
            mu = g.vertex_mask(u)
            for w in range(u, g.num_vertices):
                if distance(g, mu, g.vertex_mask(w)) != _bfs_distance(g, u, w):
                    dist_ok = False
                    break
            if not dist_ok:
                break
        checks.append(_check("distance-bfs", n, k, dist_ok))
    else:
        checks.append(_check("distance-bfs", n, k, True, "skipped: too many vertices"))

    lb = cycle_free_lower_bound(g)
    lb_ok = (
        lb.edge_count() == math.comb(n, k + 1)
        and girth(lb) == math.inf
        and not contains_cycle(lb, 6)
        and all(lb.degree(v) == 1 for v in range(g.num_v1, g.num_vertices))
    )
    checks.append(_check("lower-bound-construction", n, k, lb_ok, f"edges={lb.edge_count()}"))

    if g.num_edges <= 200:
        path_ok = True
        for e in range(g.num_edges):
            u, w = g.edge_endpoints(e)
            if six_cycles_through_path(g, (u, w)) != k * (n - k - 1):
                path_ok = False
        for m in range(g.num_vertices):
            nbrs = g.neighbors(m)
            for i in range(len(nbrs)):
                for j in range(i + 1, len(nbrs)):
                    a, b = nbrs[i], nbrs[j]
                    want = (n - k - 1) if g.part_of(a) == 1 else k
                    if six_cycles_through_path(g, (a, m, b)) != want:
                        path_ok = False
        for e in range(g.num_edges):
            m1, m2 = g.edge_endpoints(e)
            for a in g.neighbors(m1):
                if a == m2:
                    continue
                for b in g.neighbors(m2):
                    if b == m1 or b == a:
                        continue
                    if six_cycles_through_path(g, (a, m1, m2, b)) != 1:
                        path_ok = False
        checks.append(_check("six-cycles-through-paths", n, k, path_ok))
    else:
        checks.append(_check("six-cycles-through-paths", n, k, True, "skipped: too many edges"))

    two_path_total = count_two_paths(full, 1) + count_two_paths(full, 2)
    checks.append(
        _check("two-path-total", n, k, 2 * two_path_total == (n - 1) * g.num_edges)
    )

    corpus = seeded_random_subgraphs(g, seed, corpus_size)
    cs_ok = all(
        degree_square_sum(s, side) * (g.num_v1 if side == 1 else g.num_v2)
        >= s.edge_count() ** 2
        for s in corpus
        for side in (1, 2)
    )
    checks.append(_check("cauchy-schwarz", n, k, cs_ok))

    if n_c6 <= cycle_budget:
        chi_ok = True
        for s in corpus:
            vec = chi_mod.chi_vector(s, cycle_budget)
            if not chi_mod.verify_ratio_sum(vec).ok or not chi_mod.verify_edge_identity(s, vec).ok:
                chi_ok = False
        checks.append(_check("chi-identities", n, k, chi_ok))
    else:
        checks.append(_check("chi-identities", n, k, True, "skipped: over budget"))

    aux_ok = True
    lift_ok = True
    for s in corpus:
        if not all(r.ok for r in aux_mod.verify_hx_identities(s)):
            aux_ok = False
        if not aux_mod.verify_hgamma_identity(s).ok:
            aux_ok = False
        for gm in aux_mod.all_pivots(g):
            hg = aux_mod.build_Hgamma(s, gm)
            for m in range(3, hg.num_vertices + 1):
                found, _ = aux_mod.aux_enumerate_cycles(hg, m)
                for cyc in found:
                    lifted = aux_mod.lift_cycle(hg, cyc)
                    if lifted.length != 2 * m:
                        lift_ok = False
    checks.append(_check("aux-identities", n, k, aux_ok))
    checks.append(_check("hgamma-lift", n, k, lift_ok))

    if n_c6 <= cycle_budget:
        enum = enumerate_cycles(full, 6, cap=n_c6 + 1)
        dir_ok = all(len(aux_mod.direction_set(g, c)) <= 3 for c in enum.cycles)
        checks.append(_check("direction-bound", n, k, dir_ok))
    else:
        checks.append(_check("direction-bound", n, k, True, "skipped: over budget"))
    return checks


def _cell_args(cell, args):
    n, k = cell
    return (n, k, args.seed * 1000 + n * 10 + k, args.corpus, args.cycle_budget)


def _run_cell(params):
    return verify_cell(*params)


def cmd_verify(args) -> int:
    cells = [
        (n, k)
        for k in range(1, args.max_k + 1)
        for n in range(2 * k + 1, args.max_n + 1)
    ]
    checks: list[dict] = []
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            for cell_checks in pool.map(_run_cell, [_cell_args(c, args) for c in cells]):
                checks.extend(cell_checks)
    else:
        for cell in cells:
            checks.extend(_run_cell(_cell_args(cell, args)))
    crossover_ok = all(
        exponent_crossover(l).paired_is_stronger == (l <= 9)
        for l in range(3, 100, 2)
    )
    checks.append(_check("exponent-crossover", 0, 0, crossover_ok, "odd l in 3..99"))
    ok = all(c["ok"] for c in checks)
    _emit(args, _payload(args, {"checks": checks, "ok": ok}))
    return 0 if ok else 1


# -- argument parsing --------------------------------------------------


def _add_common(p, n_k=True):
    if n_k:
        p.add_argument("--n", type=int, required=True, help="ground set size (>= 2k+1)")
        p.add_argument("--k", type=int, required=True, help="small subset size (>= 1)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized corpora")
    p.add_argument("--output", help="also write the output to this file "
                   "(relative paths resolve against DJTURAN_OUTPUT_DIR)")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--workers", type=int, default=1,
                   help="worker processes; results are value-deterministic, "
                   "witnesses only at --workers 1")


def _add_subgraph_selector(p):
    p.add_argument("--mask-hex", help="edge subgraph as a hex bitmask")
    p.add_argument("--empty", action="store_true", help="use the empty subgraph")
    p.add_argument("--drop-edge", type=int, help="full subgraph minus one edge id")
    p.add_argument("--random-index", type=int,
                   help="use the i-th subgraph of the seeded random corpus")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="djturan",
        description="doubled Johnson graphs: cycles, hexagon statistics, "
        "auxiliary graphs, and even-cycle Turan search",
    )
    ap.add_argument("--version", action="version", version=f"djturan {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="export a host graph as an edge list")
    _add_common(p)
    p.set_defaults(func=cmd_generate, format="text")

    p = sub.add_parser("cycles", help="count or enumerate fixed-length cycles")
    _add_common(p)
    _add_subgraph_selector(p)
    p.add_argument("--length", type=int, default=6, help="cycle length (even, >= 6)")
    p.add_argument("--count", action="store_true", help="count only (default)")
    p.add_argument("--enumerate", action="store_true", help="list the cycles")
    p.add_argument("--girth", action="store_true", help="report the girth instead")
    p.add_argument("--cycle-cap", type=int, default=10_000_000)
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("chi", help="hexagon intersection distribution and identities")
    _add_common(p)
    _add_subgraph_selector(p)
    p.add_argument("--cycle-budget", type=int, default=100_000)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("aux", help="auxiliary graphs, identities, direction checks")
    _add_common(p)
    _add_subgraph_selector(p)
    p.add_argument("--center", type=int, help="build the centred graph at this vertex id")
    p.add_argument("--gamma", help="comma-separated pivot elements ('empty' for k=1)")
    p.add_argument("--lemmas", type=int, nargs=2, metavar=("A", "B"),
                   help="run the direction checks for the (4A, 4B) split")
    p.add_argument("--cycle-cap", type=int, default=10_000_000)
    p.set_defaults(func=cmd_aux)

    p = sub.add_parser("extremal", help="exact or heuristic even-cycle Turan search")
    _add_common(p)
    p.add_argument("--cycle", type=int, required=True, help="forbidden cycle length")
    p.add_argument("--heuristic", action="store_true")
    p.add_argument("--node-budget", type=int, default=2_000_000)
    p.add_argument("--cycle-cap", type=int, default=10_000_000)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("bounds", help="closed-form bound tables")
    _add_common(p, n_k=False)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cycle", type=int, required=True)
    p.add_argument("--c", type=float, default=1.0, help="stand-in for unknown constants")
    p.add_argument("--search-value", type=int)
    p.add_argument("--search-exact", action="store_true")
    p.add_argument("--series", action="store_true", help="emit a (k, bound) series")
    p.add_argument("--k-max", type=int, default=10)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("ramsey", help="monochromatic cycle search under edge colourings")
    _add_common(p)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--cycle", type=int, required=True)
    p.add_argument("--rounds", type=int, default=10)
    p.set_defaults(func=cmd_ramsey)

    p = sub.add_parser("verify", help="run the property suite over an (n, k) grid")
    _add_common(p, n_k=False)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--max-k", type=int, default=4)
    p.add_argument("--corpus", type=int, default=20, help="random subgraphs per host")
    p.add_argument("--cycle-budget", type=int, default=100_000)
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "bounds" and args.n is None:
        args.n = 2 * args.k + 1
    try:
        return args.func(args)
    except (ParameterError, BudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
