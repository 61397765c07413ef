"""Path and even-cycle machinery over a doubled Johnson host.

Every cycle in a subgraph is a cycle of the host, the host is bipartite
with girth 6, so subgraph cycles have even length >= 6.  Enumeration
returns each cycle once in canonical form (minimum vertex first, then
toward its smaller cycle-neighbour) and in deterministic lexicographic
order; caps are reported, never silent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .core import DoubledJohnsonGraph, EdgeSubgraph
from .errors import ConsistencyError, ParameterError

DEFAULT_CYCLE_CAP = 10_000_000

GIRTH_INFINITE = math.inf


@dataclass(frozen=True)
class Cycle:
    """A simple cycle as a canonical vertex-id sequence."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> tuple[tuple[int, int], ...]:
        v = self.vertices
        m = len(v)
        return tuple((v[t], v[(t + 1) % m]) for t in range(m))


@dataclass(frozen=True)
class PathSpec:
    """A simple path as a vertex-id sequence; length = number of edges."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class CycleEnumeration:
    length: int
    cycles: tuple[Cycle, ...]
    truncated: bool


@dataclass(frozen=True)
class CycleCount:
    length: int
    count: int
    truncated: bool

    def as_record(self) -> dict:
        return {"length": self.length, "count": self.count, "truncated": self.truncated}


def canonical_cycle(vertices) -> Cycle:
    """Canonicalize any rotation/direction of a cycle's vertex sequence."""
    seq = tuple(vertices)
    m = len(seq)
    if m < 3 or len(set(seq)) != m:
        raise ParameterError("not a simple cycle sequence")
    start = seq.index(min(seq))
    fwd = seq[start:] + seq[:start]
    rev = (fwd[0],) + tuple(reversed(fwd[1:]))
    return Cycle(fwd if fwd[1] < rev[1] else rev)


def _check_host_cycle_length(length: int) -> None:
    if length % 2 or length < 6:
        raise ParameterError(
            f"host cycles have even length >= 6, got {length}"
        )


def enumerate_cycles(s: EdgeSubgraph, length: int, cap: int = DEFAULT_CYCLE_CAP) -> CycleEnumeration:
    """All cycles of exactly `length` in the subgraph, canonical and sorted."""
    _check_host_cycle_length(length)
    if cap < 1:
        raise ParameterError(f"cap must be >= 1, got {cap}")
    indptr, nbr, _ = s.csr()
    raw, truncated = kernels.active.enumerate_cycles_fixed_length(indptr, nbr, length, cap)
    return CycleEnumeration(length, tuple(Cycle(t) for t in raw), truncated)


def count_cycles(s: EdgeSubgraph, length: int, cap: int = DEFAULT_CYCLE_CAP) -> CycleCount:
    """Count cycles of exactly `length` without materializing them."""
    _check_host_cycle_length(length)
    if cap < 1:
        raise ParameterError(f"cap must be >= 1, got {cap}")
    indptr, nbr, _ = s.csr()
    count, truncated = kernels.active.count_cycles_fixed_length(indptr, nbr, length, cap)
    return CycleCount(length, count, truncated)


def contains_cycle(s: EdgeSubgraph, length: int) -> bool:
    """True iff at least one cycle of exactly `length` exists (short-circuits)."""
    _check_host_cycle_length(length)
    indptr, nbr, _ = s.csr()
    return kernels.active.contains_cycle_fixed_length(indptr, nbr, length)


def find_cycle(s: EdgeSubgraph, length: int) -> Cycle | None:
    """First cycle of exactly `length` in canonical order, or None."""
    _check_host_cycle_length(length)
    indptr, nbr, _ = s.csr()
    raw = kernels.active.find_cycle_fixed_length(indptr, nbr, length)
    return Cycle(raw) if raw is not None else None


def as_path(g: DoubledJohnsonGraph, vertices) -> PathSpec:
    """Validate a vertex sequence as a simple path of the full host."""
    seq = tuple(int(v) for v in vertices)
    if len(seq) < 2:
        raise ParameterError("a path needs at least two vertices")
    if len(set(seq)) != len(seq):
        raise ParameterError("path vertices must be distinct")
    for a, b in zip(seq, seq[1:]):
        g.edge_id_between(a, b)  # raises if not adjacent
    return PathSpec(seq)


def six_cycles_through_path(g: DoubledJohnsonGraph, p) -> int:
    """Number of 6-cycles of the full host containing the path p.

    p may be a PathSpec or a vertex sequence of length 1, 2 or 3 edges.
    Each containing 6-cycle corresponds to exactly one simple completion
    of the path back to its first vertex, so completions are counted by
    a depth-bounded DFS.
    """
    path = as_path(g, p.vertices if isinstance(p, PathSpec) else p)
    i = path.length
    if i not in (1, 2, 3):
        raise ParameterError(f"path length must be 1, 2 or 3, got {i}")
    target = path.vertices[0]
    banned = set(path.vertices)
    count = 0

    def extend(v, steps_left):
        nonlocal count
        if steps_left == 1:
            for x in g.neighbors(v):
                if x == target:
                    count += 1
            return
        for x in g.neighbors(v):
            if x in banned or x == target:
                continue
            banned.add(x)
            extend(x, steps_left - 1)
            banned.remove(x)

    extend(path.vertices[-1], 6 - i)
    return count


def count_six_cycles(g: DoubledJohnsonGraph) -> int:
    """Exact number of 6-cycles: C(n,k)*(n-k)*k*(n-k-1)/6."""
    total = math.comb(g.n, g.k) * (g.n - g.k) * g.k * (g.n - g.k - 1)
    if total % 6:
        raise ConsistencyError(f"6-cycle census {total} not divisible by 6")
    return total // 6


def _side_selector(side) -> int:
    if side in (1, 2):
        return side
    if isinstance(side, str) and side.upper() in ("V1", "V2"):
        return 1 if side.upper() == "V1" else 2
    raise ParameterError(f"side must be 1, 2, 'V1' or 'V2', got {side!r}")


def count_two_paths(s: EdgeSubgraph, side) -> int:
    """Number of 2-paths whose middle vertex lies on the given side."""
    part = _side_selector(side)
    g = s.parent
    deg = s.degrees()
    vids = range(g.num_v1) if part == 1 else range(g.num_v1, g.num_vertices)
    return sum(math.comb(deg[v], 2) for v in vids)


def degree_square_sum(s: EdgeSubgraph, side) -> int:
    """Sum of squared subgraph degrees over one side."""
    part = _side_selector(side)
    g = s.parent
    deg = s.degrees()
    vids = range(g.num_v1) if part == 1 else range(g.num_v1, g.num_vertices)
    return sum(deg[v] * deg[v] for v in vids)


def girth(s: EdgeSubgraph):
    """Shortest cycle length of the subgraph, or GIRTH_INFINITE if acyclic.

    Per-root BFS with early exit at 6; subgraph cycles are host cycles,
    so the result is always an even number >= 6 or infinity.
    """
    indptr, nbr, _ = s.csr()
    best = kernels.active.girth_bfs(indptr, nbr, 6)
    return GIRTH_INFINITE if best == 0 else best


def cycle_edge_ids(g: DoubledJohnsonGraph, cycle) -> tuple[int, ...]:
    """Edge ids traversed by a cycle (host edge indices, in cycle order)."""
    verts = cycle.vertices if isinstance(cycle, Cycle) else tuple(cycle)
    m = len(verts)
    return tuple(g.edge_id_between(verts[t], verts[(t + 1) % m]) for t in range(m))
