"""Two-path auxiliary graphs and edge-direction machinery.

Two constructions condense the 2-path structure of a spanning subgraph G:

* centred: for a host vertex x, the auxiliary graph lives on the host
  vertices at distance 2 from x, and joins y, z when some middle vertex
  w outside the host neighbourhood of x makes (y, w, z) a 2-path of G.
  The middle vertex is unique because two subsets at distance 2 have a
  unique common neighbour in the host.

* pivoted: for a (k-1)-subset gamma, the auxiliary graph lives on the
  n-k+1 k-subsets containing gamma, joined when a 2-path of G connects
  them.  An m-cycle here interleaves with its witnesses to produce a
  2m-cycle of G, so forbidding C_{2m} in G forbids C_m here.

Summing auxiliary edge counts over all centres (or pivots) recovers
weighted 2-path counts of G exactly; the verify_* helpers check those
identities.  The direction of a host edge is the unique element in the
symmetric difference of its endpoints; a 2r-cycle uses at most r
distinct directions, and under the right freeness hypothesis two
edge-sharing cycles of complementary lengths share at least two.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from typing import Iterable

from . import kernels
from .core import DoubledJohnsonGraph, EdgeSubgraph, KSubset, mask_str
from .cycles import Cycle, canonical_cycle, contains_cycle, enumerate_cycles
from .errors import ConsistencyError, ParameterError

DEFAULT_AUX_CYCLE_CAP = 10_000_000


@dataclass(frozen=True)
class AuxGraph:
    """A small graph on host vertex ids with per-edge witness vertices."""

    subgraph: EdgeSubgraph
    vertices: tuple[int, ...]  # host vertex ids, ascending
    edges: tuple[tuple[int, int], ...]  # local index pairs (a < b), sorted
    witnesses: tuple[int, ...]  # host vertex id of the 2-path middle, per edge

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def witness_of(self, a: int, b: int) -> int:
        """Witness for the local edge {a, b}; ParameterError if absent."""
        key = (a, b) if a < b else (b, a)
        try:
            return self.witnesses[self.edges.index(key)]
        except ValueError:
            raise ParameterError(f"{key} is not an edge of the auxiliary graph") from None

    def csr(self):
        nv = len(self.vertices)
        adj = [[] for _ in range(nv)]
        for e, (a, b) in enumerate(self.edges):
            adj[a].append((b, e))
            adj[b].append((a, e))
        indptr = array("i", [0] * (nv + 1))
        nbr = array("i")
        eidx = array("i")
        pos = 0
        for v in range(nv):
            for x, e in sorted(adj[v]):
                nbr.append(x)
                eidx.append(e)
                pos += 1
            indptr[v + 1] = pos
        return indptr, nbr, eidx

    def as_record(self) -> dict:
        g = self.subgraph.parent
        return {
            "vertices": [mask_str(g.vertex_mask(v)) for v in self.vertices],
            "edges": [
                {
                    "a": mask_str(g.vertex_mask(self.vertices[a])),
                    "b": mask_str(g.vertex_mask(self.vertices[b])),
                    "witness": mask_str(g.vertex_mask(w)),
                }
                for (a, b), w in zip(self.edges, self.witnesses)
            ],
        }


@dataclass(frozen=True)
class AuxGraphHx(AuxGraph):
    center: int = -1


@dataclass(frozen=True)
class AuxGraphHgamma(AuxGraph):
    gamma_bits: int = -1


def _resolve_vertex(g: DoubledJohnsonGraph, x) -> int:
    if isinstance(x, KSubset):
        return g.vertex_id(x)
    vid = int(x)
    if not 0 <= vid < g.num_vertices:
        raise ParameterError(f"vertex id {vid} out of range")
    return vid


def _pair_edges(s: EdgeSubgraph, vertex_ids, excluded_middles) -> tuple[tuple, tuple]:
    """Edges among vertex_ids witnessed by a selected 2-path.

    Middle candidates are the common selected neighbours of the pair,
    minus excluded_middles; the host structure makes the survivor
    unique, which is asserted.
    """
    nbr_sets = {v: {x for x, _ in s.neighbors(v)} for v in vertex_ids}
    edges = []
    witnesses = []
    for a in range(len(vertex_ids)):
        ya = vertex_ids[a]
        for b in range(a + 1, len(vertex_ids)):
            yb = vertex_ids[b]
            middles = (nbr_sets[ya] & nbr_sets[yb]) - excluded_middles
            if not middles:
                continue
            if len(middles) > 1:
                raise ConsistencyError(
                    f"2-path witness between {ya} and {yb} is not unique: {sorted(middles)}"
                )
            edges.append((a, b))
            witnesses.append(middles.pop())
    return tuple(edges), tuple(witnesses)


def build_Hx(s: EdgeSubgraph, x) -> AuxGraphHx:
    """Centred auxiliary graph of the subgraph s at host vertex x.

    Vertices: all host vertices at host-distance 2 from x (there are
    k(n-k) of them when x is a k-subset, (k+1)(n-k-1) otherwise).
    Edges: pairs joined by a selected 2-path whose middle avoids the
    host neighbourhood of x.
    """
    g = s.parent
    xv = _resolve_vertex(g, x)
    xm = g.vertex_mask(xv)
    if g.part_of(xv) == 1:
        overlap = g.k - 1
        members = [
            g.vertex_id(m) for m in g.v1_masks if m != xm and (m & xm).bit_count() == overlap
        ]
    else:
        overlap = g.k
        members = [
            g.vertex_id(m) for m in g.v2_masks if m != xm and (m & xm).bit_count() == overlap
        ]
    members = tuple(sorted(members))
    host_nbrs = set(g.neighbors(xv))
    edges, witnesses = _pair_edges(s, members, host_nbrs)
    return AuxGraphHx(s, members, edges, witnesses, center=xv)


def build_Hgamma(s: EdgeSubgraph, gamma) -> AuxGraphHgamma:
    """Pivoted auxiliary graph of s at a (k-1)-subset gamma.

    Vertices: the n-k+1 k-subsets containing gamma; edges: pairs joined
    by a selected 2-path.  gamma may be a KSubset or a raw mask; for
    k = 1 the empty set is the only legal pivot.
    """
    g = s.parent
    gm = gamma.bits if isinstance(gamma, KSubset) else int(gamma)
    if gm < 0 or gm >> g.n:
        raise ParameterError(f"pivot mask {gm:#x} has bits outside [{g.n}]")
    if gm.bit_count() != g.k - 1:
        raise ParameterError(
            f"pivot must be a {g.k - 1}-subset, got {mask_str(gm)} with {gm.bit_count()} elements"
        )
    members = []
    for p in range(g.n):
        bit = 1 << p
        if not gm & bit:
            members.append(g.vertex_id(gm | bit))
    members = tuple(sorted(members))
    edges, witnesses = _pair_edges(s, members, set())
    return AuxGraphHgamma(s, members, edges, witnesses, gamma_bits=gm)


def all_pivots(g: DoubledJohnsonGraph) -> list[int]:
    """All (k-1)-subset masks of [n], in colex order."""
    from .core import k_subset_masks

    return list(k_subset_masks(g.n, g.k - 1))


def aux_enumerate_cycles(aux: AuxGraph, length: int, cap: int = DEFAULT_AUX_CYCLE_CAP):
    """Cycles of exactly `length` in an auxiliary graph, local indices."""
    if length < 3:
        raise ParameterError(f"cycle length must be >= 3, got {length}")
    if cap < 1:
        raise ParameterError(f"cap must be >= 1, got {cap}")
    indptr, nbr, _ = aux.csr()
    raw, truncated = kernels.active.enumerate_cycles_fixed_length(indptr, nbr, length, cap)
    return raw, truncated


def aux_contains_cycle(aux: AuxGraph, length: int) -> bool:
    if length < 3:
        raise ParameterError(f"cycle length must be >= 3, got {length}")
    indptr, nbr, _ = aux.csr()
    return kernels.active.contains_cycle_fixed_length(indptr, nbr, length)


def lift_cycle(aux: AuxGraphHgamma, cycle: Iterable[int]) -> Cycle:
    """Interleave an auxiliary m-cycle with its witnesses: a host 2m-cycle.

    The witnesses of consecutive auxiliary edges are pairwise distinct
    (a collision would merge two distinct pivot extensions), and every
    interleaved consecutive pair is a selected edge of the underlying
    subgraph; both facts are verified and violations raise
    ConsistencyError since they would indicate a construction bug.
    """
    local = tuple(int(v) for v in cycle)
    m = len(local)
    if m < 3:
        raise ParameterError(f"auxiliary cycle needs >= 3 vertices, got {m}")
    if len(set(local)) != m:
        raise ParameterError("auxiliary cycle vertices must be distinct")
    for a in local:
        if not 0 <= a < aux.num_vertices:
            raise ParameterError(f"local vertex {a} out of range")
    witnesses = []
    for t in range(m):
        witnesses.append(aux.witness_of(local[t], local[(t + 1) % m]))
    if len(set(witnesses)) != m:
        raise ConsistencyError(f"witness collision while lifting: {witnesses}")
    host_seq = []
    for t in range(m):
        host_seq.append(aux.vertices[local[t]])
        host_seq.append(witnesses[t])
    s = aux.subgraph
    g = s.parent
    for t in range(2 * m):
        e = g.edge_id_between(host_seq[t], host_seq[(t + 1) % (2 * m)])
        if not s.contains_edge(e):
            raise ConsistencyError("lifted cycle uses an unselected edge")
    return canonical_cycle(host_seq)


def direction(g: DoubledJohnsonGraph, edge: int) -> int:
    """The unique ground-set element separating an edge's endpoints."""
    if not 0 <= edge < g.num_edges:
        raise ParameterError(f"edge id {edge} out of range")
    u, w = g.edge_endpoints(edge)
    return (g.vertex_mask(u) ^ g.vertex_mask(w)).bit_length()


def direction_of_pair(g: DoubledJohnsonGraph, a: int, b: int) -> int:
    """Direction of the edge joining two adjacent vertex ids."""
    diff = g.vertex_mask(a) ^ g.vertex_mask(b)
    if diff.bit_count() != 1:
        raise ParameterError(f"vertices {a} and {b} are not adjacent")
    return diff.bit_length()


def direction_multiset(g: DoubledJohnsonGraph, cycle) -> tuple[int, ...]:
    """Directions of a cycle's edges, sorted, with multiplicity."""
    verts = cycle.vertices if isinstance(cycle, Cycle) else tuple(cycle)
    m = len(verts)
    return tuple(
        sorted(direction_of_pair(g, verts[t], verts[(t + 1) % m]) for t in range(m))
    )


def direction_set(g: DoubledJohnsonGraph, cycle) -> frozenset[int]:
    """Set of edge directions used by a cycle (or any closed vertex walk)."""
    return frozenset(direction_multiset(g, cycle))


def path_direction_set(g: DoubledJohnsonGraph, vertices) -> frozenset[int]:
    """Set of edge directions used along a path."""
    verts = tuple(vertices)
    return frozenset(direction_of_pair(g, a, b) for a, b in zip(verts, verts[1:]))


@dataclass(frozen=True)
class IdentityReport:
    name: str
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def as_record(self) -> dict:
        return {"identity": self.name, "lhs": self.lhs, "rhs": self.rhs, "ok": self.ok}


def verify_hx_identities(s: EdgeSubgraph) -> list[IdentityReport]:
    """Centred edge sums against weighted 2-path counts, both sides.

    Sum of e(H_x) over small-part centres equals (n-k-1) times the
    2-paths with a large-part middle; over large-part centres it equals
    k times the 2-paths with a small-part middle.
    """
    g = s.parent
    deg = s.degrees()
    two_paths_v2_middle = sum(math.comb(deg[v], 2) for v in range(g.num_v1, g.num_vertices))
    two_paths_v1_middle = sum(math.comb(deg[v], 2) for v in range(g.num_v1))
    sum_v1 = sum(build_Hx(s, x).num_edges for x in range(g.num_v1))
    sum_v2 = sum(build_Hx(s, x).num_edges for x in range(g.num_v1, g.num_vertices))
    return [
        IdentityReport("hx-edge-sum-small-centres", sum_v1, (g.n - g.k - 1) * two_paths_v2_middle),
        IdentityReport("hx-edge-sum-large-centres", sum_v2, g.k * two_paths_v1_middle),
    ]


def verify_hgamma_identity(s: EdgeSubgraph) -> IdentityReport:
    """Pivoted edge sum equals the 2-paths with a large-part middle."""
    g = s.parent
    deg = s.degrees()
    two_paths = sum(math.comb(deg[v], 2) for v in range(g.num_v1, g.num_vertices))
    total = sum(build_Hgamma(s, gm).num_edges for gm in all_pivots(g))
    return IdentityReport("hgamma-edge-sum", total, two_paths)


@dataclass(frozen=True)
class DirectionLemmaReport:
    """Outcome of the direction checks on one subgraph."""

    a: int
    b: int
    cycles_4a: int
    cycles_4b: int
    truncated: bool
    direction_bound_checked: int
    direction_bound_violations: tuple
    overlap_pairs_checked: int
    overlap_violations: tuple

    @property
    def ok(self) -> bool:
        return not self.direction_bound_violations and not self.overlap_violations

    def as_records(self) -> list[dict]:
        return [
            {
                "lemma": "cycle-direction-bound",
                "instances_checked": self.direction_bound_checked,
                "violations": len(self.direction_bound_violations),
                "truncated": self.truncated,
            },
            {
                "lemma": "edge-sharing-direction-overlap",
                "instances_checked": self.overlap_pairs_checked,
                "violations": len(self.overlap_violations),
                "truncated": self.truncated,
            },
        ]


def verify_direction_lemmas(
    s: EdgeSubgraph, a: int, b: int, cap: int = DEFAULT_AUX_CYCLE_CAP
) -> DirectionLemmaReport:
    """Direction checks for the (4a, 4b) split on a C_{4a+4b-2}-free subgraph.

    Every 2r-cycle uses at most r distinct directions; every pair of an
    enumerated 4a-cycle and 4b-cycle sharing an edge shares at least two
    directions.  The second check needs the subgraph to be free of
    cycles of length 4a+4b-2, which is verified up front.
    """
    if a < 2 or b < 2:
        raise ParameterError(f"need a, b >= 2, got a={a}, b={b}")
    forbidden = 4 * a + 4 * b - 2
    if contains_cycle(s, forbidden):
        raise ParameterError(f"subgraph contains a {forbidden}-cycle; checks require freeness")
    g = s.parent

    def gather(length):
        enum = enumerate_cycles(s, length, cap)
        return enum.cycles, enum.truncated

    cycles_a, trunc_a = gather(4 * a)
    if b == a:
        cycles_b, trunc_b = cycles_a, trunc_a
    else:
        cycles_b, trunc_b = gather(4 * b)

    bound_violations = []
    checked = 0
    dirsets_a = []
    for c in cycles_a:
        ds = direction_set(g, c)
        dirsets_a.append(ds)
        checked += 1
        if len(ds) > 2 * a:
            bound_violations.append(("4a", c.vertices, sorted(ds)))
    if b == a:
        dirsets_b = dirsets_a
    else:
        dirsets_b = []
        for c in cycles_b:
            ds = direction_set(g, c)
            dirsets_b.append(ds)
            checked += 1
            if len(ds) > 2 * b:
                bound_violations.append(("4b", c.vertices, sorted(ds)))

    from .cycles import cycle_edge_ids

    by_edge_a: dict[int, list[int]] = {}
    for idx, c in enumerate(cycles_a):
        for e in cycle_edge_ids(g, c):
            by_edge_a.setdefault(e, []).append(idx)

    overlap_violations = []
    pairs_checked = 0
    seen_pairs = set()
    for idx_b, c in enumerate(cycles_b):
        for e in cycle_edge_ids(g, c):
            for idx_a in by_edge_a.get(e, ()):
                if b == a:
                    if idx_a == idx_b:
                        continue
                    key = (min(idx_a, idx_b), max(idx_a, idx_b))
                else:
                    key = (idx_a, idx_b)
                if key in seen_pairs:
                    continue
                seen_pairs.add(key)
                pairs_checked += 1
                if len(dirsets_a[idx_a] & dirsets_b[idx_b]) < 2:
                    overlap_violations.append(
                        (cycles_a[idx_a].vertices, cycles_b[idx_b].vertices)
                    )
    return DirectionLemmaReport(
        a=a,
        b=b,
        cycles_4a=len(cycles_a),
        cycles_4b=len(cycles_b),
        truncated=trunc_a or trunc_b,
        direction_bound_checked=checked,
        direction_bound_violations=tuple(bound_violations),
        overlap_pairs_checked=pairs_checked,
        overlap_violations=tuple(overlap_violations),
    )
