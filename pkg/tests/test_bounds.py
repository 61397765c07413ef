import math
from fractions import Fraction

import pytest

from djturan import ParameterError
from djturan.bounds import (
    bound_report,
    csv_series,
    doubled_odd_bounds,
    exponent_crossover,
    half_offset_cycle_bound,
    host_edge_count,
    quarter_cycle_bound,
    report_text,
)
from djturan.search import exact_extremal


def test_host_edge_count():
    assert host_edge_count(9, 2) == 7 * 36 == 252
    assert host_edge_count(5, 2) == 30
    with pytest.raises(ParameterError):
        host_edge_count(4, 2)


def test_quarter_cycle_bound_example():
    b = quarter_cycle_bound(9, 2, 2, c=1.0)
    assert b.value == pytest.approx((7 ** -0.25 + 3 ** -0.5) * 252)
    assert b.constant_dependent and not b.asymptotic


def test_quarter_cycle_bound_degenerate_constant():
    b = quarter_cycle_bound(9, 2, 2, c=0.0)
    assert b.value == pytest.approx(252 / math.sqrt(3))
    assert b.constant_dependent


def test_quarter_cycle_limit_in_n():
    # the ratio decreases towards (k+1)^(-1/2) as n grows
    k, l = 2, 3
    ratios = [quarter_cycle_bound(n, k, l).ratio for n in (7, 20, 100, 10**12)]
    assert all(a > b for a, b in zip(ratios, ratios[1:]))
    assert ratios[-1] == pytest.approx((k + 1) ** -0.5, rel=1e-2)


def test_quarter_cycle_domain():
    with pytest.raises(ParameterError):
        quarter_cycle_bound(9, 2, 1)
    with pytest.raises(ParameterError):
        quarter_cycle_bound(9, 2, 2, c=-1)


def test_half_offset_bound():
    b = half_offset_cycle_bound(3, 1)
    assert b.ratio == pytest.approx(0.25 + math.sqrt(2) / 2)
    assert b.asymptotic
    # ratio tends to sqrt(2)/2 for large k
    big = half_offset_cycle_bound(201, 100)
    assert big.ratio == pytest.approx(math.sqrt(2) / 2, rel=1e-2)


def test_doubled_odd_hexagon_hard_bound():
    entries = doubled_odd_bounds(2, 6)
    assert len(entries) == 1
    b = entries[0]
    assert b.value == pytest.approx(25.0)
    assert b.comparable


def test_doubled_odd_c8_c10():
    for length in (8, 10):
        (b,) = doubled_odd_bounds(3, length)
        assert b.ratio == pytest.approx(2 / 3)
        assert b.asymptotic and not b.comparable


def test_doubled_odd_long_even():
    (b,) = doubled_odd_bounds(5, 12)  # 4l with l = 3
    assert b.exponent == Fraction(-1, 2) + Fraction(1, 3)
    (b14,) = doubled_odd_bounds(5, 14)  # 4l+2 with l = 3
    assert b14.exponent == Fraction(-1, 7)
    assert "paired-split" in b14.label
    (b18,) = doubled_odd_bounds(5, 18)  # 4l+2 with l = 4
    assert b18.exponent == Fraction(-1, 16) + Fraction(1, 24)
    assert "uneven-split" in b18.label
    (b46,) = doubled_odd_bounds(5, 46)  # 4l+2 with l = 11: uneven wins
    assert b46.exponent == Fraction(-1, 16) + Fraction(1, 80)
    with pytest.raises(ParameterError):
        doubled_odd_bounds(5, 7)
    with pytest.raises(ParameterError):
        doubled_odd_bounds(0, 6)


def test_crossover_selection():
    for l in range(3, 100, 2):
        rep = exponent_crossover(l)
        assert rep.paired_is_stronger == (l <= 9)
    assert exponent_crossover(3).paired_exponent == Fraction(-1, 7)
    assert exponent_crossover(3).uneven_exponent == 0
    assert exponent_crossover(9).paired_exponent == Fraction(-1, 19)
    assert exponent_crossover(9).uneven_exponent == Fraction(-3, 64)
    assert exponent_crossover(11).selected == "uneven-split"
    with pytest.raises(ParameterError):
        exponent_crossover(4)
    with pytest.raises(ParameterError):
        exponent_crossover(1)


def test_clause_and_crossover_agree():
    # the published clause split for 4l+2 matches the exponent comparison
    for l in range(3, 100):
        (b,) = doubled_odd_bounds(7, 4 * l + 2)
        if l % 2 == 1:
            rep = exponent_crossover(l)
            want = rep.paired_exponent if rep.paired_is_stronger else rep.uneven_exponent
            assert b.exponent == want
        else:
            assert b.exponent == Fraction(-1, 16) + Fraction(1, 8 * (l - 1))


def test_bound_report_consistency(g523):
    res = exact_extremal(g523, 6)
    rep = bound_report(5, 2, 6, search_value=res.value, search_exact=True)
    assert rep.consistent
    assert rep.lower_bound == 10
    # a fabricated over-large "exact" value must be flagged
    bad = bound_report(5, 2, 6, search_value=26, search_exact=True)
    assert not bad.consistent
    # asymptotic bounds are never compared as hard numbers
    soft = bound_report(5, 2, 8, search_value=26, search_exact=True)
    assert soft.consistent


def test_bound_report_text_and_series(g523):
    text = report_text(bound_report(5, 2, 6, search_value=25, search_exact=True))
    assert "hexagon-free-hard" in text and "lower bound" in text
    rows = csv_series(6, [1, 2, 3], search_values={2: 25})
    assert rows[0] == ("k", "bound", "search_value")
    assert rows[2][0] == 2 and rows[2][1] == pytest.approx(25.0) and rows[2][2] == 25
    # hard bound preferred over the asymptotic leading value
    assert rows[3][1] == pytest.approx(5 * 140 / 6)


def test_bound_report_domain():
    with pytest.raises(ParameterError):
        bound_report(5, 2, 7)
    with pytest.raises(ParameterError):
        bound_report(4, 2, 6)
