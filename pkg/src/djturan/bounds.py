"""Closed-form upper bounds for even-cycle-free subgraphs, with honest
flags for unknown constants and vanishing terms.

Two families are evaluated.  On a general host J(n;k,k+1):

* forbidden C_{4l}, l >= 2:   (c * (n-k)^(-1/2 + 1/(2l)) + (k+1)^(-1/2)) * e,
  where c is a caller-supplied constant (the derivation only proves one
  exists), so the value is flagged constant-dependent;
* forbidden C_{4l+2}, l >= 1: (1/(2(k+1)) + sqrt(2)/2) * e up to a term
  vanishing in n, flagged asymptotic.

On a doubled Odd host (n = 2k+1), sharper per-edge ratios apply: a hard
5/6 for forbidden hexagons, 2/3 + o(1) for forbidden C_8 and C_10, and
for longer cycles O(k^q) ratios whose exponents q are exact rationals;
for C_{4l+2} the exponent -1/(2l+1) (available only at odd l) beats
-1/16 + 1/(8(l-1)) exactly when l <= 9, which the crossover check
certifies by rational comparison.  Asymptotic or constant-dependent
bounds are reported, never compared against finite search values as
hard numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError


def host_edge_count(n: int, k: int) -> int:
    if k < 1 or n < 2 * k + 1:
        raise ParameterError(f"need k >= 1 and n >= 2k+1, got n={n}, k={k}")
    return (n - k) * math.comb(n, k)


@dataclass(frozen=True)
class BoundEntry:
    """One upper bound on e(subgraph), as a ratio of the host edge count."""

    label: str
    ratio: float | None  # per-edge coefficient when numeric
    value: float | None  # ratio * e(host)
    exponent: Fraction | None  # exponent q for O(k^q) e(host) forms
    asymptotic: bool  # carries an o(1) term
    constant_dependent: bool  # carries an unspecified constant

    @property
    def comparable(self) -> bool:
        """May this bound be checked against exact finite values?"""
        return not self.asymptotic and not self.constant_dependent

    def as_record(self) -> dict:
        return {
            "label": self.label,
            "ratio": self.ratio,
            "value": self.value,
            "exponent": str(self.exponent) if self.exponent is not None else None,
            "asymptotic": self.asymptotic,
            "constant_dependent": self.constant_dependent,
        }


def quarter_cycle_bound(n: int, k: int, l: int, c: float = 1.0) -> BoundEntry:
    """Upper bound for C_{4l}-free subgraphs of J(n;k,k+1), l >= 2.

    c is the caller's stand-in for the unspecified constant; the entry
    is always flagged constant-dependent, even at c = 0 where it
    degenerates to e(host)/sqrt(k+1).
    """
    if l < 2:
        raise ParameterError(f"need l >= 2, got {l}")
    if c < 0:
        raise ParameterError(f"constant must be >= 0, got {c}")
    e = host_edge_count(n, k)
    ratio = c * (n - k) ** (-0.5 + 1 / (2 * l)) + (k + 1) ** -0.5
    return BoundEntry(
        label=f"c4l-free(l={l}, c={c})",
        ratio=ratio,
        value=ratio * e,
        exponent=None,
        asymptotic=False,
        constant_dependent=True,
    )


def half_offset_cycle_bound(n: int, k: int) -> BoundEntry:
    """Leading term for C_{4l+2}-free subgraphs of J(n;k,k+1), any l >= 1."""
    e = host_edge_count(n, k)
    ratio = 1 / (2 * (k + 1)) + math.sqrt(2) / 2
    return BoundEntry(
        label="c4l2-free-leading",
        ratio=ratio,
        value=ratio * e,
        exponent=None,
        asymptotic=True,
        constant_dependent=False,
    )


def _odd_exponent_first(l: int) -> Fraction:
    return Fraction(-1, 2 * l + 1)


def _odd_exponent_second(l: int) -> Fraction:
    return Fraction(-1, 16) + Fraction(1, 8 * (l - 1))


def doubled_odd_bounds(k: int, length: int) -> list[BoundEntry]:
    """Per-edge bounds for C_length-free subgraphs of the doubled Odd host.

    length 6 gives the hard 5/6 ratio; 8 and 10 give 2/3 + o(1); lengths
    4l with l >= 3 and 4l+2 with l >= 3 give O(k^q) entries with exact
    rational exponents, the 4l+2 clause selecting -1/(2l+1) exactly for
    l in {3, 5, 7, 9}.
    """
    if k < 1:
        raise ParameterError(f"need k >= 1, got {k}")
    if length % 2 or length < 6:
        raise ParameterError(f"forbidden length must be even and >= 6, got {length}")
    e = host_edge_count(2 * k + 1, k)
    if length == 6:
        return [
            BoundEntry(
                label="hexagon-free-hard",
                ratio=5 / 6,
                value=5 * e / 6,
                exponent=None,
                asymptotic=False,
                constant_dependent=False,
            )
        ]
    if length in (8, 10):
        return [
            BoundEntry(
                label=f"c{length}-free-leading",
                ratio=2 / 3,
                value=2 * e / 3,
                exponent=None,
                asymptotic=True,
                constant_dependent=False,
            )
        ]
    if length % 4 == 0:
        l = length // 4
        if l < 3:
            raise ParameterError(f"no doubled-Odd clause for length {length}")
        return [
            BoundEntry(
                label=f"c4l-free-odd-host(l={l})",
                ratio=None,
                value=None,
                exponent=Fraction(-1, 2) + Fraction(1, l),
                asymptotic=True,
                constant_dependent=True,
            )
        ]
    l = (length - 2) // 4
    if l < 3:
        raise ParameterError(f"no doubled-Odd clause for length {length}")
    if l % 2 == 1 and l <= 9:
        exponent = _odd_exponent_first(l)
        label = f"c4l2-free-odd-host(l={l}, paired-split)"
    else:
        exponent = _odd_exponent_second(l)
        label = f"c4l2-free-odd-host(l={l}, uneven-split)"
    return [
        BoundEntry(
            label=label,
            ratio=None,
            value=None,
            exponent=exponent,
            asymptotic=True,
            constant_dependent=True,
        )
    ]


@dataclass(frozen=True)
class CrossoverReport:
    l: int
    paired_exponent: Fraction
    uneven_exponent: Fraction

    @property
    def paired_is_stronger(self) -> bool:
        return self.paired_exponent < self.uneven_exponent

    @property
    def selected(self) -> str:
        return "paired-split" if self.paired_is_stronger else "uneven-split"

    def as_record(self) -> dict:
        return {
            "l": self.l,
            "paired_exponent": str(self.paired_exponent),
            "uneven_exponent": str(self.uneven_exponent),
            "selected": self.selected,
        }


def exponent_crossover(l: int) -> CrossoverReport:
    """Compare the two C_{4l+2} exponents at odd l by exact rationals.

    The paired split (a = b = (l+1)/2) only exists at odd l; it wins,
    i.e. gives the smaller exponent, precisely for l in {3, 5, 7, 9}.
    """
    if l < 3 or l % 2 == 0:
        raise ParameterError(f"crossover is defined for odd l >= 3, got {l}")
    return CrossoverReport(l, _odd_exponent_first(l), _odd_exponent_second(l))


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    forbidden_length: int
    lower_bound: int
    entries: tuple[BoundEntry, ...]
    search_value: int | None
    search_exact: bool

    @property
    def consistent(self) -> bool:
        """No comparable bound falls below an exact search value."""
        if self.search_value is None or not self.search_exact:
            return True
        for b in self.entries:
            if b.comparable and b.value is not None and b.value < self.search_value:
                return False
        return True

    def as_record(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "forbidden_length": self.forbidden_length,
            "lower_bound": self.lower_bound,
            "bounds": [b.as_record() for b in self.entries],
            "search_value": self.search_value,
            "search_exact": self.search_exact,
            "consistent": self.consistent,
        }


def bound_report(
    n: int,
    k: int,
    length: int,
    c: float = 1.0,
    search_value: int | None = None,
    search_exact: bool = False,
) -> BoundReport:
    """Collect every applicable bound for (n, k, forbidden length)."""
    if length % 2 or length < 6:
        raise ParameterError(f"forbidden length must be even and >= 6, got {length}")
    host_edge_count(n, k)  # validates the parameter domain
    entries: list[BoundEntry] = []
    if length % 4 == 0 and length >= 8:
        entries.append(quarter_cycle_bound(n, k, length // 4, c))
    if length % 4 == 2:
        entries.append(half_offset_cycle_bound(n, k))
    if n == 2 * k + 1:
        try:
            entries.extend(doubled_odd_bounds(k, length))
        except ParameterError:
            pass  # lengths without a doubled-Odd clause
    return BoundReport(
        n=n,
        k=k,
        forbidden_length=length,
        lower_bound=math.comb(n, k + 1),
        entries=tuple(entries),
        search_value=search_value,
        search_exact=search_exact,
    )


def report_text(report: BoundReport) -> str:
    """Aligned-column rendering of a bound report."""
    lines = [
        f"host J({report.n};{report.k},{report.k + 1})  forbidden C_{report.forbidden_length}",
        f"{'lower bound':<38} {report.lower_bound:>12}",
    ]
    for b in report.entries:
        flags = []
        if b.asymptotic:
            flags.append("+o(1)")
        if b.constant_dependent:
            flags.append("const")
        tag = ",".join(flags) or "hard"
        if b.value is not None:
            lines.append(f"{b.label:<38} {b.value:>12.3f}  [{tag}]")
        else:
            lines.append(f"{b.label:<38} {'O(k^' + str(b.exponent) + ')':>12}  [{tag}]")
    if report.search_value is not None:
        kind = "exact" if report.search_exact else "heuristic"
        lines.append(f"{'search value (' + kind + ')':<38} {report.search_value:>12}")
        lines.append(f"{'consistent':<38} {str(report.consistent):>12}")
    return "\n".join(lines) + "\n"


def csv_series(length: int, ks, c: float = 1.0, search_values=None) -> list[tuple]:
    """(k, bound, search_value) rows for external plotting.

    The bound column prefers the smallest hard bound; when only flagged
    bounds apply, the smallest numeric leading value is used instead.
    """
    rows = [("k", "bound", "search_value")]
    search_values = search_values or {}
    for k in ks:
        rep = bound_report(2 * k + 1, k, length, c=c)
        hard = [b.value for b in rep.entries if b.value is not None and b.comparable]
        soft = [b.value for b in rep.entries if b.value is not None]
        bound = min(hard) if hard else (min(soft) if soft else float("nan"))
        rows.append((k, bound, search_values.get(k, "")))
    return rows
