"""Hexagon-intersection statistics for spanning subgraphs.

For a spanning subgraph G of a host with girth 6, every host 6-cycle H
meets G in an edge-subset of a hexagon.  Edge-subsets of a labelled
hexagon fall into orbits under the dihedral symmetry group of order 12;
counting, for each orbit, the fraction of host 6-cycles H whose
intersection with G lands in that orbit gives a distribution (the
chi-vector) with two exact identities:

  * the fractions sum to 1, and
  * e(G)/e(host) = (1/6) * sum over orbits of (orbit edge count) * fraction,

the second because every host edge lies on the same number of 6-cycles.
All arithmetic is exact rational; floats appear only in rendered text.

Orbit counting from first principles yields 13 classes (the two-edge
stratum splits into adjacent / one-apart / opposite placements, and the
complementary four-edge stratum mirrors it).  Accounts that list 12
classes merge part of a stratum; the identities above are insensitive
to the split, and the three proof-relevant shapes are pinned down
structurally: the 4-consecutive-edges path, the 5-edge class, and the
full hexagon.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import DoubledJohnsonGraph, EdgeSubgraph
from .cycles import contains_cycle, count_six_cycles, cycle_edge_ids, enumerate_cycles
from .errors import BudgetError, ParameterError

DEFAULT_SIX_CYCLE_BUDGET = 100_000

#: edge-slot permutations of a hexagon: 6 rotations + 6 reflections
_SYMMETRIES = tuple(
    [tuple((i + j) % 6 for i in range(6)) for j in range(6)]
    + [tuple((j - i) % 6 for i in range(6)) for j in range(6)]
)


def _apply(perm, mask: int) -> int:
    out = 0
    for i in range(6):
        if mask >> i & 1:
            out |= 1 << perm[i]
    return out


@dataclass(frozen=True)
class C6Class:
    """One dihedral orbit of hexagon edge-subsets."""

    index: int
    class_id: str
    canonical_mask: int
    edge_count: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class C6ClassTable:
    """All orbits, ordered by (edge count, canonical mask)."""

    classes: tuple[C6Class, ...]
    class_of: tuple[int, ...]  # 64-entry lookup: edge mask -> class index

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def by_id(self, class_id: str) -> C6Class:
        for c in self.classes:
            if c.class_id == class_id:
                return c
        raise ParameterError(f"no class {class_id!r}")

    # structurally pinned classes used by the counting inequalities
    @property
    def path4_index(self) -> int:
        """The 4-consecutive-edges class (a hexagon minus two adjacent edges)."""
        return self.class_of[0b001111]

    @property
    def five_edge_index(self) -> int:
        return self.class_of[0b011111]

    @property
    def full_index(self) -> int:
        return self.class_of[0b111111]


def build_class_table() -> C6ClassTable:
    """Partition the 64 hexagon edge-subsets into dihedral orbits."""
    assigned = [-1] * 64
    classes = []
    orbits = []
    for mask in range(64):
        if assigned[mask] != -1:
            continue
        orbit = sorted({_apply(p, mask) for p in _SYMMETRIES})
        idx = len(orbits)
        for m in orbit:
            assigned[m] = idx
        orbits.append(orbit)
    # reorder by (edge count, canonical mask) and re-key the lookup
    order = sorted(range(len(orbits)), key=lambda t: (orbits[t][0].bit_count(), orbits[t][0]))
    remap = {old: new for new, old in enumerate(order)}
    per_count: dict[int, int] = {}
    for new, old in enumerate(order):
        orbit = orbits[old]
        ec = orbits[old][0].bit_count()
        j = per_count.get(ec, 0)
        per_count[ec] = j + 1
        classes.append(
            C6Class(
                index=new,
                class_id=f"{ec}e{j}",
                canonical_mask=orbit[0],
                edge_count=ec,
                members=tuple(orbit),
            )
        )
    class_of = tuple(remap[assigned[m]] for m in range(64))
    return C6ClassTable(tuple(classes), class_of)


_TABLE = None


def class_table() -> C6ClassTable:
    """Shared table; the orbit partition is a constant of the hexagon."""
    global _TABLE
    if _TABLE is None:
        _TABLE = build_class_table()
    return _TABLE


@dataclass(frozen=True)
class ChiVector:
    """Distribution of intersection classes over all host 6-cycles."""

    counts: tuple[int, ...]
    n_c6: int
    table: C6ClassTable

    def ratio(self, index: int) -> Fraction:
        return Fraction(self.counts[index], self.n_c6)

    def ratios(self) -> tuple[Fraction, ...]:
        return tuple(self.ratio(i) for i in range(len(self.counts)))

    def as_records(self) -> list[dict]:
        out = []
        for c in self.table.classes:
            out.append(
                {
                    "class_id": c.class_id,
                    "edge_count": c.edge_count,
                    "count": self.counts[c.index],
                    "ratio_num": self.counts[c.index],
                    "ratio_den": self.n_c6,
                }
            )
        return out


# host 6-cycles keyed by (n, k): construction is deterministic, so the
# cycle list and its edge ids depend only on the parameters
_HOST_CYCLES: dict[tuple[int, int], tuple[tuple[int, ...], ...]] = {}


def host_six_cycle_edges(g: DoubledJohnsonGraph, budget: int = DEFAULT_SIX_CYCLE_BUDGET):
    """Edge-id 6-tuples of every host 6-cycle, in canonical cycle order."""
    expected = count_six_cycles(g)
    if expected > budget:
        raise BudgetError(f"host has {expected} 6-cycles, budget is {budget}")
    key = (g.n, g.k)
    cached = _HOST_CYCLES.get(key)
    if cached is not None:
        return cached
    enum = enumerate_cycles(EdgeSubgraph.full(g), 6, cap=expected + 1)
    if enum.truncated or len(enum.cycles) != expected:
        raise BudgetError(f"6-cycle enumeration returned {len(enum.cycles)}, expected {expected}")
    result = tuple(cycle_edge_ids(g, c) for c in enum.cycles)
    _HOST_CYCLES[key] = result
    return result


def chi_vector(s: EdgeSubgraph, budget: int = DEFAULT_SIX_CYCLE_BUDGET) -> ChiVector:
    """Classify the intersection of s with every host 6-cycle."""
    table = class_table()
    g = s.parent
    cycles = host_six_cycle_edges(g, budget)
    counts = [0] * table.num_classes
    mask = s.mask
    for edge_ids in cycles:
        sub = 0
        for t, e in enumerate(edge_ids):
            if mask >> e & 1:
                sub |= 1 << t
        counts[table.class_of[sub]] += 1
    return ChiVector(tuple(counts), len(cycles), table)


@dataclass(frozen=True)
class IdentityReport:
    name: str
    lhs: Fraction
    rhs: Fraction

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def as_record(self) -> dict:
        return {
            "identity": self.name,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "ok": self.ok,
        }


def verify_ratio_sum(chi: ChiVector) -> IdentityReport:
    """The class fractions sum to exactly 1."""
    return IdentityReport("chi-ratio-sum", sum(chi.ratios(), Fraction(0)), Fraction(1))


def verify_edge_identity(s: EdgeSubgraph, chi: ChiVector) -> IdentityReport:
    """e(s)/e(host) equals the edge-count-weighted chi average over 6."""
    g = s.parent
    lhs = Fraction(s.edge_count(), g.num_edges)
    rhs = Fraction(0)
    for c in chi.table.classes:
        rhs += c.edge_count * chi.ratio(c.index)
    rhs /= 6
    return IdentityReport("chi-edge-ratio", lhs, rhs)


@dataclass(frozen=True)
class InequalityReport:
    name: str
    lhs: Fraction
    rhs: Fraction

    @property
    def ok(self) -> bool:
        return self.lhs >= self.rhs

    @property
    def slack(self) -> Fraction:
        return self.lhs - self.rhs

    def as_record(self) -> dict:
        return {
            "inequality": self.name,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "slack": str(self.slack),
            "ok": self.ok,
        }


def verify_counting_inequalities(s: EdgeSubgraph, chi: ChiVector, which) -> InequalityReport:
    """Double-counting inequalities satisfied by C8-free / C10-free subgraphs.

    For a C8-free subgraph of a doubled Odd host, pairing each 2-path L
    with the at most one 6-cycle H whose intersection minus E(L) is the
    4-edge path gives   k*e(host) >= (6*chi_full + 2*chi_5 + chi_P5)*n(C6).
    For a C10-free subgraph, pairing host edges with 6-cycles whose
    intersection minus that edge is the 5-edge class gives
    (2k-1)*e(host) >= (6*chi_full + chi_5)*n(C6).
    """
    g = s.parent
    if g.n != 2 * g.k + 1:
        raise ParameterError("counting inequalities apply to doubled Odd hosts (n = 2k+1)")
    key = str(which).upper().lstrip("C")
    if key == "8":
        if contains_cycle(s, 8):
            raise ParameterError("subgraph contains an 8-cycle; inequality requires C8-free")
        lhs = Fraction(g.k * g.num_edges)
        rhs = (
            6 * chi.ratio(chi.table.full_index)
            + 2 * chi.ratio(chi.table.five_edge_index)
            + chi.ratio(chi.table.path4_index)
        ) * chi.n_c6
        return InequalityReport("two-path-pairing-c8free", lhs, rhs)
    if key == "10":
        if contains_cycle(s, 10):
            raise ParameterError("subgraph contains a 10-cycle; inequality requires C10-free")
        lhs = Fraction((2 * g.k - 1) * g.num_edges)
        rhs = (
            6 * chi.ratio(chi.table.full_index) + chi.ratio(chi.table.five_edge_index)
        ) * chi.n_c6
        return InequalityReport("edge-pairing-c10free", lhs, rhs)
    raise ParameterError(f"which must be 'C8' or 'C10', got {which!r}")
