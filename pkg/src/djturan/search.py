"""Exact and heuristic even-cycle Turan search, cycle censuses, and
edge-colouring experiments.

A subgraph of the host contains a cycle of length L exactly when one of
the host's L-cycles survives intact, so the maximum C_L-free subgraph
problem is e(host) minus a minimum hitting set over the host's L-cycle
edge sets.  For L = 6 that reduction is solved directly by branch and
bound with a greedy disjoint-cycle packing bound; for longer cycles a
branch and bound over edge inclusion is used, detecting completed
forbidden cycles incrementally (against the precomputed cycle list, or
by bounded DFS when the list was truncated).  Budgets are node counts,
never wall clock, so runs reproduce; every witness is re-verified by an
independent freeness check before it is returned.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import kernels
from .core import DoubledJohnsonGraph, EdgeSubgraph
from .cycles import (
    DEFAULT_CYCLE_CAP,
    CycleCount,
    contains_cycle,
    count_cycles,
    cycle_edge_ids,
    enumerate_cycles,
    find_cycle,
)
from .errors import ConsistencyError, ParameterError

DEFAULT_NODE_BUDGET = 2_000_000


@dataclass
class SearchResult:
    n: int
    k: int
    forbidden_length: int
    value: int
    exact: bool
    witness: EdgeSubgraph
    nodes_explored: int
    budget_hit: bool

    @property
    def lower_bound(self) -> int:
        return math.comb(self.n, self.k + 1)

    def hard_upper_bound(self):
        """5/6 of the host edges for forbidden hexagons on doubled Odd hosts."""
        if self.forbidden_length == 6 and self.n == 2 * self.k + 1:
            return (5 * self.witness.parent.num_edges) // 6
        return None

    def as_record(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "forbidden_length": self.forbidden_length,
            "value": self.value,
            "exact": self.exact,
            "lower_bound": self.lower_bound,
            "hard_upper_bound": self.hard_upper_bound(),
            "witness_edge_mask_hex": self.witness.mask_hex(),
            "nodes": self.nodes_explored,
        }


def _verify_witness(witness: EdgeSubgraph, length: int) -> None:
    if contains_cycle(witness, length):
        raise ConsistencyError(f"witness contains a {length}-cycle")


def _host_cycle_masks(g: DoubledJohnsonGraph, length: int, cap: int):
    """Edge-bitmasks of host L-cycles, plus a truncation flag."""
    enum = enumerate_cycles(EdgeSubgraph.full(g), length, cap)
    masks = []
    for c in enum.cycles:
        m = 0
        for e in cycle_edge_ids(g, c):
            m |= 1 << e
        masks.append(m)
    return masks, enum.truncated


def _greedy_hitting_set(cycle_masks, num_edges, banned_edge=None):
    """Hit every cycle, repeatedly deleting the most-covering edge."""
    alive = list(cycle_masks)
    chosen = 0
    while alive:
        counts = [0] * num_edges
        for m in alive:
            mm = m
            while mm:
                low = mm & -mm
                counts[low.bit_length() - 1] += 1
                mm ^= low
        best_e = -1
        best_c = 0
        for e in range(num_edges):
            if e == banned_edge:
                continue
            if counts[e] > best_c:
                best_c = counts[e]
                best_e = e
        bit = 1 << best_e
        chosen |= bit
        alive = [m for m in alive if not m & bit]
    return chosen


def _packing_bound(cycle_masks) -> int:
    """Greedy edge-disjoint cycle packing: a hitting-set lower bound."""
    taken = 0
    size = 0
    for m in cycle_masks:
        if not m & taken:
            taken |= m
            size += 1
    return size


class _Budget:
    __slots__ = ("nodes", "limit", "hit")

    def __init__(self, limit):
        self.nodes = 0
        self.limit = limit
        self.hit = False

    def tick(self) -> bool:
        self.nodes += 1
        if self.nodes >= self.limit:
            self.hit = True
        return self.hit


def _min_hitting_set(cycle_masks, num_edges, budget, banned_edge=None):
    """Exact minimum hitting set over 6-edge cycle masks by branch and bound.

    banned_edge, when set, is excluded from every hitting set; the host's
    edge-transitive symmetry guarantees an optimal solution avoiding any
    one chosen edge, which prunes a constant factor.
    """
    greedy = _greedy_hitting_set(cycle_masks, num_edges, banned_edge)
    best_size = greedy.bit_count()
    best_mask = greedy

    edge_bits = [1 << e for e in range(num_edges)]

    def edges_of(mask):
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def recurse(chosen_mask, chosen_size, alive):
        nonlocal best_size, best_mask
        if budget.tick():
            return
        if not alive:
            if chosen_size < best_size:
                best_size = chosen_size
                best_mask = chosen_mask
            return
        if chosen_size + _packing_bound(alive) >= best_size:
            return
        branch = alive[0]
        for e in edges_of(branch):
            if e == banned_edge:
                continue
            bit = edge_bits[e]
            recurse(
                chosen_mask | bit,
                chosen_size + 1,
                [m for m in alive if not m & bit],
            )

    recurse(0, 0, list(cycle_masks))
    return best_mask, best_size


def _extremal_six(g, budget, symmetry_break):
    cycle_masks, truncated = _host_cycle_masks(g, 6, DEFAULT_CYCLE_CAP)
    if truncated:
        raise ParameterError("host 6-cycle list truncated; raise the cap")
    banned = 0 if symmetry_break else None
    chosen, size = _min_hitting_set(cycle_masks, g.num_edges, budget, banned)
    witness = EdgeSubgraph(g, ((1 << g.num_edges) - 1) ^ chosen)
    return witness, not budget.hit


def _extremal_general(g, length, budget, symmetry_break, start_incumbent):
    """Branch and bound on edge inclusion for forbidden length > 6.

    A cycle is alive while none of its edges is excluded; every alive
    cycle must eventually lose an undecided edge, so a greedy disjoint
    packing of the alive cycles bounds the exclusions still owed.
    """
    num_edges = g.num_edges
    cycle_masks, truncated = _host_cycle_masks(g, length, DEFAULT_CYCLE_CAP)
    per_edge = [[] for _ in range(num_edges)]
    if not truncated:
        for m in cycle_masks:
            mm = m
            while mm:
                low = mm & -mm
                per_edge[low.bit_length() - 1].append(m)
                mm ^= low

    best_value = start_incumbent.edge_count()
    best_mask = start_incumbent.mask

    def include_feasible(included, e):
        new_mask = included | (1 << e)
        if not truncated:
            for m in per_edge[e]:
                if m & ~new_mask == 0:
                    return False
            return True
        probe = EdgeSubgraph(g, new_mask)
        indptr, nbr, _ = probe.csr()
        u, w = g.edge_endpoints(e)
        return not kernels.active.contains_cycle_through_edge(indptr, nbr, u, w, length)

    def recurse(idx, included, included_count, excluded_count, alive):
        nonlocal best_value, best_mask
        if budget.tick():
            return
        if included_count + (num_edges - idx) <= best_value:
            return
        if num_edges - excluded_count - _packing_bound(alive) <= best_value:
            return
        if idx == num_edges:
            if included_count > best_value:
                best_value = included_count
                best_mask = included
            return
        if include_feasible(included, idx):
            recurse(idx + 1, included | (1 << idx), included_count + 1, excluded_count, alive)
        if idx == 0 and symmetry_break:
            # some optimum contains edge 0 (edge-transitive host)
            return
        bit = 1 << idx
        recurse(
            idx + 1,
            included,
            included_count,
            excluded_count + 1,
            [m for m in alive if not m & bit],
        )

    recurse(0, 0, 0, 0, list(cycle_masks) if not truncated else [])
    return EdgeSubgraph(g, best_mask), not budget.hit


def exact_extremal(
    g: DoubledJohnsonGraph,
    length: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    symmetry_break: bool = True,
) -> SearchResult:
    """Maximum number of edges in a C_length-free spanning subgraph.

    The result is exact when the search space was fully explored within
    the node budget; otherwise the best feasible witness found so far is
    returned with exact=False (still a valid lower bound).
    """
    if length % 2 or length < 6:
        raise ParameterError(f"forbidden length must be even and >= 6, got {length}")
    if node_budget < 1:
        raise ParameterError("node budget must be positive")
    budget = _Budget(node_budget)
    if length == 6:
        witness, exact = _extremal_six(g, budget, symmetry_break)
    else:
        incumbent = heuristic_extremal(g, length).witness
        witness, exact = _extremal_general(g, length, budget, symmetry_break, incumbent)
    _verify_witness(witness, length)
    return SearchResult(
        n=g.n,
        k=g.k,
        forbidden_length=length,
        value=witness.edge_count(),
        exact=exact,
        witness=witness,
        nodes_explored=budget.nodes,
        budget_hit=budget.hit,
    )


def heuristic_extremal(
    g: DoubledJohnsonGraph,
    length: int,
    start: EdgeSubgraph | None = None,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
    improvement_rounds: int = 3,
) -> SearchResult:
    """Greedy deletion plus local improvement; never exact.

    Deletes the edge lying on the most surviving forbidden cycles (ties
    to the lowest index) until none survive, then repeatedly re-adds any
    deleted edge whose return creates no forbidden cycle.  Starting from
    an already-feasible subgraph performs no deletions.
    """
    if length % 2 or length < 6:
        raise ParameterError(f"forbidden length must be even and >= 6, got {length}")
    s = (start.copy() if start is not None else EdgeSubgraph.full(g))

    indptr, nbr, eidx = s.csr()
    raw, truncated = kernels.active.enumerate_cycles_fixed_length(indptr, nbr, length, cycle_cap)
    alive = []
    for verts in raw:
        m = 0
        for e in cycle_edge_ids(g, verts):
            m |= 1 << e
        alive.append(m)

    nodes = 0
    while alive:
        counts: dict[int, int] = {}
        for m in alive:
            mm = m
            while mm:
                low = mm & -mm
                e = low.bit_length() - 1
                counts[e] = counts.get(e, 0) + 1
                mm ^= low
        best_e = min(counts, key=lambda e: (-counts[e], e))
        s.remove_edge(best_e)
        nodes += 1
        bit = 1 << best_e
        alive = [m for m in alive if not m & bit]

    # cycles past the cap are caught one at a time
    while truncated:
        found = find_cycle(s, length)
        if found is None:
            break
        s.remove_edge(cycle_edge_ids(g, found)[0])
        nodes += 1

    def creates_cycle(sub, e):
        probe = sub.copy()
        probe.add_edge(e)
        ip, nb, _ = probe.csr()
        u, w = g.edge_endpoints(e)
        return kernels.active.contains_cycle_through_edge(ip, nb, u, w, length)

    for _ in range(improvement_rounds):
        improved = False
        for e in range(g.num_edges):
            if s.contains_edge(e):
                continue
            nodes += 1
            if not creates_cycle(s, e):
                s.add_edge(e)
                improved = True
        if not improved:
            break

    _verify_witness(s, length)
    return SearchResult(
        n=g.n,
        k=g.k,
        forbidden_length=length,
        value=s.edge_count(),
        exact=False,
        witness=s,
        nodes_explored=nodes,
        budget_hit=truncated,
    )


def count_4a_cycles(s: EdgeSubgraph, a: int, cap: int = DEFAULT_CYCLE_CAP) -> CycleCount:
    """Exact census of cycles of length 4a (a >= 2), cap reported."""
    if a < 2:
        raise ParameterError(f"need a >= 2, got {a}")
    return count_cycles(s, 4 * a, cap)


@dataclass(frozen=True)
class EdgeColoring:
    """An assignment of each host edge to one of t colour classes."""

    colors: tuple[int, ...]
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise ParameterError(f"need t >= 1 colours, got {self.t}")
        if any(not 0 <= c < self.t for c in self.colors):
            raise ParameterError("colour indices must lie in 0..t-1")

    def class_mask(self, color: int) -> int:
        m = 0
        for e, c in enumerate(self.colors):
            if c == color:
                m |= 1 << e
        return m


def random_coloring(g: DoubledJohnsonGraph, t: int, rng: random.Random) -> EdgeColoring:
    return EdgeColoring(tuple(rng.randrange(t) for _ in range(g.num_edges)), t)


@dataclass(frozen=True)
class RamseyRound:
    round_index: int
    per_color: tuple[dict, ...]

    @property
    def monochromatic(self) -> bool:
        return any(rec["has_cycle"] for rec in self.per_color)


@dataclass(frozen=True)
class RamseyReport:
    t: int
    length: int
    strategy: str
    seed: int | None
    rounds: tuple[RamseyRound, ...]

    @property
    def always_monochromatic(self) -> bool:
        return all(r.monochromatic for r in self.rounds)

    def as_record(self) -> dict:
        return {
            "t": self.t,
            "length": self.length,
            "strategy": self.strategy,
            "seed": self.seed,
            "rounds": [
                {
                    "round": r.round_index,
                    "monochromatic": r.monochromatic,
                    "per_color": list(r.per_color),
                }
                for r in self.rounds
            ],
            "always_monochromatic": self.always_monochromatic,
        }


def ramsey_search(
    g: DoubledJohnsonGraph,
    t: int,
    length: int,
    strategy: str = "random",
    seed: int = 0,
    rounds: int = 10,
    coloring: EdgeColoring | None = None,
) -> RamseyReport:
    """Look for monochromatic cycles of the given length per colour class.

    With an explicit coloring, exactly that partition is checked; with
    strategy "random", `rounds` seeded colourings are drawn.  Each class
    is checked exhaustively, so "no cycle" is a certificate for that
    class.  At desk scale this is exploratory evidence only.
    """
    if length % 2 or length < 6:
        raise ParameterError(f"cycle length must be even and >= 6, got {length}")
    if coloring is not None:
        if len(coloring.colors) != g.num_edges:
            raise ParameterError("coloring size does not match the host edge count")
        colorings = [coloring]
        strategy = "given"
    elif strategy == "random":
        rng = random.Random(seed)
        colorings = [random_coloring(g, t, rng) for _ in range(rounds)]
    else:
        raise ParameterError(f"unknown strategy {strategy!r}")

    round_reports = []
    for ridx, col in enumerate(colorings):
        per_color = []
        for c in range(col.t):
            cls = EdgeSubgraph(g, col.class_mask(c))
            witness = find_cycle(cls, length)
            per_color.append(
                {
                    "color": c,
                    "edges": cls.edge_count(),
                    "has_cycle": witness is not None,
                    "witness": list(witness.vertices) if witness else None,
                }
            )
        round_reports.append(RamseyRound(ridx, tuple(per_color)))
    return RamseyReport(
        t=coloring.t if coloring is not None else t,
        length=length,
        strategy=strategy,
        seed=None if coloring is not None else seed,
        rounds=tuple(round_reports),
    )
