"""Doubled Johnson graphs on bitmask-encoded subsets.

J(n;k,k+1) is the bipartite graph whose parts are the k-subsets and the
(k+1)-subsets of {1,...,n}, two vertices being adjacent exactly when one
subset contains the other.  Every vertex of the small part has degree
n-k, every vertex of the large part has degree k+1, so the edge count is
(n-k)*C(n,k) = (k+1)*C(n,k+1).  The distance between two vertices x, y
is |x| + |y| - 2|x & y|, and the shortest cycles have length 6.

Instances are desk scale: the ground set is capped at 63 elements so a
subset is a single machine word, element i living at bit i-1.  Numeric
order of the masks is then colexicographic order of the subsets, which
pins down all vertex and edge indices deterministically.  A spanning
subgraph is a bitmask over the host's edge list; the host itself is
immutable and may be shared freely between workers.
"""

from __future__ import annotations

import math
import random
from array import array
from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import BudgetError, ParameterError

MAX_GROUND_SET = 63
DEFAULT_EDGE_BUDGET = 2_000_000

#: densities cycled through by seeded_random_subgraphs
DENSITY_SCHEDULE = (0.15, 0.3, 0.5, 0.7, 0.85)


def subset_mask(elements, n: int = MAX_GROUND_SET) -> int:
    """Pack an iterable of elements of {1,...,n} into a bitmask."""
    mask = 0
    for e in elements:
        e = int(e)
        if not 1 <= e <= n:
            raise ParameterError(f"element {e} outside ground set [{n}]")
        mask |= 1 << (e - 1)
    return mask


def mask_elements(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into its sorted element tuple."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def mask_str(mask: int) -> str:
    return "{" + ",".join(str(e) for e in mask_elements(mask)) + "}"


def k_subset_masks(n: int, k: int) -> Iterator[int]:
    """All k-element masks over [n] in increasing numeric (= colex) order.

    Uses Gosper's hack to step from one k-bit pattern to the next.
    """
    if k == 0:
        yield 0
        return
    if k > n:
        return
    m = (1 << k) - 1
    top = 1 << n
    while m < top:
        yield m
        c = m & -m
        r = m + c
        m = (((r ^ m) >> 2) // c) | r


@dataclass(frozen=True)
class KSubset:
    """A subset of {1,...,n} stored as a bitmask (element i at bit i-1)."""

    bits: int
    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_GROUND_SET:
            raise ParameterError(f"ground set size {self.n} outside 1..{MAX_GROUND_SET}")
        if self.bits < 0 or self.bits >> self.n:
            raise ParameterError(f"mask {self.bits:#x} has bits outside [{self.n}]")

    @classmethod
    def from_elements(cls, elements, n: int) -> "KSubset":
        return cls(subset_mask(elements, n), n)

    def elements(self) -> tuple[int, ...]:
        return mask_elements(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= self.n and bool(self.bits >> (element - 1) & 1)

    def __str__(self) -> str:
        return mask_str(self.bits)


class DoubledJohnsonGraph:
    """Immutable instance of J(n;k,k+1); construct via build_graph().

    Vertex ids are global: 0..|V1|-1 for the k-subsets in colex order,
    then |V1|..|V1|+|V2|-1 for the (k+1)-subsets in colex order.  Edges
    are (V1-index, V2-index) pairs sorted lexicographically.
    """

    def __init__(self, n, k, v1_masks, v2_masks, edges):
        self.n = n
        self.k = k
        self.v1_masks = v1_masks
        self.v2_masks = v2_masks
        self.edges = edges
        self.num_v1 = len(v1_masks)
        self.num_v2 = len(v2_masks)
        self.num_vertices = self.num_v1 + self.num_v2
        self.num_edges = len(edges)
        adjacency = [[] for _ in range(self.num_vertices)]
        for e, (i, j) in enumerate(edges):
            adjacency[i].append(e)
            adjacency[self.num_v1 + j].append(e)
        self.adjacency = tuple(tuple(a) for a in adjacency)
        self._edge_index = {pair: e for e, pair in enumerate(edges)}
        self._v1_index = {m: i for i, m in enumerate(v1_masks)}
        self._v2_index = {m: j for j, m in enumerate(v2_masks)}

    # -- vertices ----------------------------------------------------

    def part_of(self, vid: int) -> int:
        """1 for the k-subset side, 2 for the (k+1)-subset side."""
        if not 0 <= vid < self.num_vertices:
            raise ParameterError(f"vertex id {vid} out of range")
        return 1 if vid < self.num_v1 else 2

    def vertex_mask(self, vid: int) -> int:
        if not 0 <= vid < self.num_vertices:
            raise ParameterError(f"vertex id {vid} out of range")
        if vid < self.num_v1:
            return self.v1_masks[vid]
        return self.v2_masks[vid - self.num_v1]

    def vertex(self, vid: int) -> KSubset:
        return KSubset(self.vertex_mask(vid), self.n)

    def vertex_id(self, subset) -> int:
        """Global vertex id of a KSubset or raw mask; ParameterError if absent."""
        mask = subset.bits if isinstance(subset, KSubset) else int(subset)
        size = mask.bit_count()
        if size == self.k and mask in self._v1_index:
            return self._v1_index[mask]
        if size == self.k + 1 and mask in self._v2_index:
            return self.num_v1 + self._v2_index[mask]
        raise ParameterError(f"{mask_str(mask)} is not a vertex of J({self.n};{self.k},{self.k + 1})")

    def degree(self, vid: int) -> int:
        return len(self.adjacency[vid])

    # -- edges -------------------------------------------------------

    def edge_endpoints(self, e: int) -> tuple[int, int]:
        """Global (V1-vertex, V2-vertex) ids of edge e."""
        i, j = self.edges[e]
        return i, self.num_v1 + j

    def edge_id_between(self, a: int, b: int) -> int:
        """Edge id joining two adjacent global vertex ids."""
        if self.part_of(a) == 2:
            a, b = b, a
        try:
            return self._edge_index[(a, b - self.num_v1)]
        except KeyError:
            raise ParameterError(f"vertices {a} and {b} are not adjacent") from None

    def neighbors(self, vid: int) -> list[int]:
        """Full-host neighbour ids of a vertex, ascending."""
        out = []
        for e in self.adjacency[vid]:
            u, w = self.edge_endpoints(e)
            out.append(w if u == vid else u)
        return out

    def __repr__(self):
        return f"DoubledJohnsonGraph(n={self.n}, k={self.k}, edges={self.num_edges})"


def build_graph(n: int, k: int, max_edges: int = DEFAULT_EDGE_BUDGET) -> DoubledJohnsonGraph:
    """Construct J(n;k,k+1) deterministically.

    Requires k >= 1 and n >= 2k+1 (instances with n < 2k+1 are isomorphic
    to ones in that range and are rejected rather than relabelled), and
    n <= 63 so subsets fit one machine word.
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if n < 2 * k + 1:
        raise ParameterError(f"need n >= 2k+1, got n={n}, k={k}")
    if n > MAX_GROUND_SET:
        raise ParameterError(f"ground set capped at {MAX_GROUND_SET}, got n={n}")
    edge_count = (k + 1) * math.comb(n, k + 1)
    if edge_count > max_edges:
        raise BudgetError(f"J({n};{k},{k + 1}) has {edge_count} edges, budget is {max_edges}")

    v1_masks = tuple(k_subset_masks(n, k))
    v2_masks = tuple(k_subset_masks(n, k + 1))
    v2_index = {m: j for j, m in enumerate(v2_masks)}
    edges = []
    for i, u in enumerate(v1_masks):
        # supersets of u in increasing mask order = increasing V2 index
        for p in range(n):
            bit = 1 << p
            if not u & bit:
                edges.append((i, v2_index[u | bit]))
    return DoubledJohnsonGraph(n, k, v1_masks, v2_masks, tuple(edges))


class EdgeSubgraph:
    """A spanning subgraph of a host graph: a bitmask over edge indices."""

    __slots__ = ("parent", "mask")

    def __init__(self, parent: DoubledJohnsonGraph, mask: int = 0):
        if mask < 0 or mask >> parent.num_edges:
            raise ParameterError(f"edge mask {mask:#x} has bits outside 0..{parent.num_edges - 1}")
        self.parent = parent
        self.mask = mask

    @classmethod
    def full(cls, parent) -> "EdgeSubgraph":
        return cls(parent, (1 << parent.num_edges) - 1)

    @classmethod
    def empty(cls, parent) -> "EdgeSubgraph":
        return cls(parent, 0)

    @classmethod
    def from_hex(cls, parent, hex_mask: str) -> "EdgeSubgraph":
        return cls(parent, int(hex_mask, 16))

    def mask_hex(self) -> str:
        return f"{self.mask:x}"

    def edge_count(self) -> int:
        return self.mask.bit_count()

    def contains_edge(self, e: int) -> bool:
        return bool(self.mask >> e & 1)

    def add_edge(self, e: int) -> None:
        if not 0 <= e < self.parent.num_edges:
            raise ParameterError(f"edge id {e} out of range")
        self.mask |= 1 << e

    def remove_edge(self, e: int) -> None:
        if not 0 <= e < self.parent.num_edges:
            raise ParameterError(f"edge id {e} out of range")
        self.mask &= ~(1 << e)

    def copy(self) -> "EdgeSubgraph":
        return EdgeSubgraph(self.parent, self.mask)

    def selected_edges(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def degree(self, vid: int) -> int:
        d = 0
        for e in self.parent.adjacency[vid]:
            if self.mask >> e & 1:
                d += 1
        return d

    def degrees(self) -> list[int]:
        deg = [0] * self.parent.num_vertices
        for e in self.selected_edges():
            u, w = self.parent.edge_endpoints(e)
            deg[u] += 1
            deg[w] += 1
        return deg

    def neighbors(self, vid: int) -> list[tuple[int, int]]:
        """(neighbour id, edge id) pairs over selected edges, ascending."""
        out = []
        for e in self.parent.adjacency[vid]:
            if self.mask >> e & 1:
                u, w = self.parent.edge_endpoints(e)
                out.append((w if u == vid else u, e))
        return out

    def csr(self):
        """Adjacency of the selected edges as (indptr, nbr, eidx) int arrays."""
        g = self.parent
        nbr = array("i")
        eidx = array("i")
        indptr = array("i", [0] * (g.num_vertices + 1))
        pos = 0
        for v in range(g.num_vertices):
            for e in g.adjacency[v]:
                if self.mask >> e & 1:
                    u, w = g.edge_endpoints(e)
                    nbr.append(w if u == v else u)
                    eidx.append(e)
                    pos += 1
            indptr[v + 1] = pos
        return indptr, nbr, eidx

    def __eq__(self, other):
        return (
            isinstance(other, EdgeSubgraph)
            and other.parent is self.parent
            and other.mask == self.mask
        )

    def __repr__(self):
        return f"EdgeSubgraph({self.parent!r}, edges={self.edge_count()})"


def distance(g: DoubledJohnsonGraph, x, y) -> int:
    """Graph distance between two vertices: |x| + |y| - 2|x & y|."""
    xm = x.bits if isinstance(x, KSubset) else int(x)
    ym = y.bits if isinstance(y, KSubset) else int(y)
    g.vertex_id(xm)
    g.vertex_id(ym)
    return xm.bit_count() + ym.bit_count() - 2 * (xm & ym).bit_count()


def default_lower_bound_chooser(w_mask: int) -> int:
    """Drop the largest element: the lexicographically least k-subset of w."""
    return w_mask ^ (1 << (w_mask.bit_length() - 1))


def cycle_free_lower_bound(
    g: DoubledJohnsonGraph,
    chooser: Callable[[int], int] = default_lower_bound_chooser,
) -> EdgeSubgraph:
    """One edge per (k+1)-subset vertex: C(n,k+1) edges, never a cycle.

    Every large-side vertex has degree 1 in the result, so no cycle can
    alternate through the large side.  The chooser picks which incident
    edge survives and may be swapped out for experiments.
    """
    mask = 0
    for j, w in enumerate(g.v2_masks):
        u = chooser(w)
        if u & ~w or u.bit_count() != g.k:
            raise ParameterError(
                f"chooser returned {mask_str(u)}, not a k-subset of {mask_str(w)}"
            )
        e = g._edge_index[(g._v1_index[u], j)]
        mask |= 1 << e
    return EdgeSubgraph(g, mask)


def to_edge_list(g: DoubledJohnsonGraph) -> str:
    """Plain-text export: header 'n k |V1| |V2| |E|', then one edge per line."""
    lines = [f"{g.n} {g.k} {g.num_v1} {g.num_v2} {g.num_edges}"]
    for i, j in g.edges:
        lines.append(f"{mask_str(g.v1_masks[i])} {mask_str(g.v2_masks[j])}")
    return "\n".join(lines) + "\n"


def _parse_subset(token: str, n: int) -> int:
    if not (token.startswith("{") and token.endswith("}")):
        raise ParameterError(f"malformed subset token {token!r}")
    inner = token[1:-1]
    elements = [int(t) for t in inner.split(",")] if inner else []
    return subset_mask(elements, n)


def from_edge_list(text: str) -> DoubledJohnsonGraph:
    """Parse the plain-text format back into a graph.

    The edge set must coincide with the canonical construction for the
    header's (n, k); the canonical graph is returned so indices stay
    deterministic regardless of line order in the input.
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParameterError("empty edge list")
    head = lines[0].split()
    if len(head) != 5:
        raise ParameterError(f"malformed header {lines[0]!r}")
    n, k, nv1, nv2, ne = (int(t) for t in head)
    g = build_graph(n, k)
    if (g.num_v1, g.num_v2, g.num_edges) != (nv1, nv2, ne):
        raise ParameterError("header counts do not match J(n;k,k+1)")
    if len(lines) - 1 != ne:
        raise ParameterError(f"expected {ne} edge lines, got {len(lines) - 1}")
    seen = set()
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 2:
            raise ParameterError(f"malformed edge line {ln!r}")
        um = _parse_subset(toks[0], n)
        wm = _parse_subset(toks[1], n)
        if um.bit_count() != k or wm.bit_count() != k + 1 or um & ~wm:
            raise ParameterError(f"line {ln!r} is not a containment edge")
        pair = (g._v1_index[um], g._v2_index[wm])
        if pair in seen:
            raise ParameterError(f"duplicate edge {ln!r}")
        seen.add(pair)
    if len(seen) != ne:
        raise ParameterError("edge set does not match the canonical construction")
    return g


def seeded_random_subgraphs(g: DoubledJohnsonGraph, seed: int, count: int) -> list[EdgeSubgraph]:
    """Reproducible corpus of random spanning subgraphs.

    Densities cycle through DENSITY_SCHEDULE; the generator is the
    stdlib Mersenne Twister so a seed fully determines the corpus.
    """
    rng = random.Random(seed)
    out = []
    for t in range(count):
        density = DENSITY_SCHEDULE[t % len(DENSITY_SCHEDULE)]
        mask = 0
        for e in range(g.num_edges):
            if rng.random() < density:
                mask |= 1 << e
        out.append(EdgeSubgraph(g, mask))
    return out
