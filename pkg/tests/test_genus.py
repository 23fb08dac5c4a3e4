"""Genus invariants: frozen example values plus structural properties."""

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from crosscap import (
    EXACT_BY_BATSON,
    EXACT_BY_COLLAPSE,
    EXACT_BY_POSITIVE_PINCHES,
    EXACT_UNKNOWN,
    PinchSign,
    StopRule,
    TorusKnot,
    crosscap_by_splitting,
    crosscap_number,
    euclidean_division,
    four_genus_bounds,
    gap_report,
    genus_report,
    normalize,
    normalized_knots,
    odd_split,
    orientable_genus,
    pinch_sequence,
    pinches_to_unknot,
    pinches_to_zero,
    terminal_unknot_parameter,
)
from crosscap.errors import (
    DegenerateModulus,
    EvenParity,
    OddParity,
    UnknotInput,
)

from math import gcd


@st.composite
def nontrivial_knots(draw, max_param=200):
    a = draw(st.integers(min_value=2, max_value=max_param))
    b = draw(st.integers(min_value=2, max_value=max_param))
    assume(gcd(a, b) == 1)
    return normalize(a, b)


@pytest.mark.parametrize(
    "knot, expected",
    [
        ((4, 3), (1, 1)),
        ((8, 3), (2, 2)),
        ((4, 7), (0, 4)),
        ((5, 3), (1, 2)),
        ((14, 3), (4, 2)),
    ],
)
def test_euclidean_division_examples(knot, expected):
    assert euclidean_division(TorusKnot(*knot)) == expected


def test_euclidean_division_requires_q_above_one():
    with pytest.raises(DegenerateModulus):
        euclidean_division(TorusKnot(5, 1))


@pytest.mark.parametrize(
    "knot, ell",
    [
        ((4, 3), 2),
        ((4, 7), 0),
        ((5, 3), 1),
        ((16, 5), 4),
        ((14, 3), 4),
        ((8, 3), 2),
        ((7, 5), 1),
    ],
)
def test_terminal_unknot_parameter_examples(knot, ell):
    assert terminal_unknot_parameter(TorusKnot(*knot)) == ell


@pytest.mark.parametrize(
    "knot, count",
    [
        ((4, 3), 1),
        ((16, 5), 2),
        ((4, 7), 2),
        ((5, 3), 1),
        ((11, 5), 2),
    ],
)
def test_pinches_to_unknot_examples(knot, count):
    assert pinches_to_unknot(TorusKnot(*knot)) == count


def test_pinches_to_unknot_rejects_unknots():
    with pytest.raises(UnknotInput):
        pinches_to_unknot(TorusKnot(2, 1))


@pytest.mark.parametrize(
    "knot, count",
    [
        ((4, 3), 2),
        ((2, 3), 1),
        ((8, 3), 2),
        ((2, 1), 1),  # Moebius band: one pinch
        ((0, 1), 0),
        ((16, 5), 4),
    ],
)
def test_pinches_to_zero_examples(knot, count):
    assert pinches_to_zero(TorusKnot(*knot)) == count


def test_pinches_to_zero_requires_even_p():
    with pytest.raises(OddParity):
        pinches_to_zero(TorusKnot(5, 3))


def test_odd_split_examples():
    split = odd_split(TorusKnot(5, 3))
    assert (split.first, split.second) == (TorusKnot(2, 1), TorusKnot(2, 3))
    split = odd_split(TorusKnot(7, 5))
    assert (split.first, split.second) == (TorusKnot(2, 3), TorusKnot(4, 3))


def test_odd_split_errors():
    with pytest.raises(UnknotInput):
        odd_split(TorusKnot(3, 1))
    with pytest.raises(EvenParity):
        odd_split(TorusKnot(4, 3))


def test_odd_split_structure():
    for knot in normalized_knots(60):
        if knot.p % 2 == 0:
            continue
        split = odd_split(knot)
        # each piece keeps exactly one even parameter, and the raw pieces
        # sum back to the original parameters
        assert split.first.p % 2 == 0 and split.first.q % 2 == 1
        assert split.second.p % 2 == 0 and split.second.q % 2 == 1


@pytest.mark.parametrize("knot, value", [((5, 3), 2), ((7, 5), 3)])
def test_crosscap_by_splitting_examples(knot, value):
    assert crosscap_by_splitting(TorusKnot(*knot)) == value


@pytest.mark.parametrize(
    "knot, value",
    [
        ((4, 3), 2),
        ((5, 3), 2),
        ((7, 5), 3),
        ((16, 5), 4),
        ((2, 3), 1),
        ((14, 3), 3),
    ],
)
def test_crosscap_number_examples(knot, value):
    assert crosscap_number(TorusKnot(*knot)) == value


def test_crosscap_number_rejects_unknots():
    with pytest.raises(UnknotInput):
        crosscap_number(TorusKnot(5, 1))


def test_batson_family_small():
    for k in range(2, 30):
        knot = TorusKnot(2 * k, 2 * k - 1)
        assert crosscap_number(knot) == k
        bounds = four_genus_bounds(knot)
        assert bounds.exact == k - 1


@pytest.mark.parametrize(
    "knot, lower, upper, exact, provenance",
    [
        ((4, 3), 1, 1, 1, EXACT_BY_POSITIVE_PINCHES),
        ((16, 5), 1, 2, 2, EXACT_BY_POSITIVE_PINCHES),
        ((5, 3), 1, 1, 1, EXACT_BY_COLLAPSE),
        ((14, 3), 1, 1, 1, EXACT_BY_COLLAPSE),  # single pinch, but a negative one
        ((6, 5), 1, 2, 2, EXACT_BY_POSITIVE_PINCHES),
        ((10, 7), 1, 2, None, EXACT_UNKNOWN),
        ((11, 5), 1, 2, None, EXACT_UNKNOWN),
    ],
)
def test_four_genus_bounds_examples(knot, lower, upper, exact, provenance):
    bounds = four_genus_bounds(TorusKnot(*knot))
    assert (bounds.lower, bounds.upper, bounds.exact, bounds.provenance) == (
        lower,
        upper,
        exact,
        provenance,
    )


def test_four_genus_batson_provenance():
    # q = p-1 with more than one pinch and a negative somewhere is impossible,
    # so the all-positive rule usually wins; force the batson label off a knot
    # where the trace is longer than one move
    bounds = four_genus_bounds(TorusKnot(8, 7))
    assert bounds.exact == 3
    assert bounds.provenance in (EXACT_BY_POSITIVE_PINCHES, EXACT_BY_BATSON)


@pytest.mark.parametrize(
    "knot, gap, bound",
    [
        ((4, 3), 1, Fraction(1, 2)),
        ((8, 3), 1, Fraction(1)),
        ((4, 7), 0, Fraction(0)),
        ((14, 3), 2, Fraction(2)),
        ((16, 5), 2, Fraction(3, 2)),
    ],
)
def test_gap_report_examples(knot, gap, bound):
    assert gap_report(TorusKnot(*knot)) == (gap, bound)


def test_gap_report_errors():
    with pytest.raises(OddParity):
        gap_report(TorusKnot(5, 3))
    with pytest.raises(UnknotInput):
        gap_report(TorusKnot(2, 1))


@pytest.mark.parametrize(
    "knot, genus",
    [
        ((4, 3), 3),
        ((5, 3), 4),
        ((2, 3), 1),
        ((0, 1), 0),
        ((1, 1), 0),
    ],
)
def test_orientable_genus_examples(knot, genus):
    assert orientable_genus(TorusKnot(*knot)) == genus


def test_genus_report_assembly():
    report = genus_report(TorusKnot(4, 3))
    assert (report.k, report.a, report.ell) == (1, 1, 2)
    assert report.beta1_F == 1
    assert report.gamma3 == 2
    assert report.gamma4.upper == report.beta1_F
    assert report.gap_lower_bound == Fraction(1, 2)
    assert report.orientable_genus == 3
    assert report.split is None
    assert len(report.trace) == 1

    report = genus_report(TorusKnot(5, 3))
    assert report.split is not None
    assert (report.split.first, report.split.second) == (
        TorusKnot(2, 1),
        TorusKnot(2, 3),
    )


def test_genus_report_rejects_unknots():
    with pytest.raises(UnknotInput):
        genus_report(TorusKnot(1, 1))


# Structural properties over exhaustive small ranges.


def test_even_case_consistency():
    # crosscap number, pinches to zero, and the trace-based count agree
    for knot in normalized_knots(60):
        if knot.p % 2:
            continue
        gamma3 = crosscap_number(knot)
        assert gamma3 == pinches_to_zero(knot)
        ell = terminal_unknot_parameter(knot)
        assert ell % 2 == 0
        assert gamma3 == pinches_to_unknot(knot) + ell // 2


def test_terminal_parameter_matches_trace():
    for knot in normalized_knots(60):
        observed = pinch_sequence(knot, StopRule.FIRST_UNKNOT)[-1].result.p
        assert terminal_unknot_parameter(knot) == observed


def test_odd_case_consistency_small():
    for knot in normalized_knots(60):
        if knot.p % 2 == 0:
            continue
        assert crosscap_number(knot) == crosscap_by_splitting(knot)


def test_sandwich_and_exactness_flags():
    for knot in normalized_knots(60):
        bounds = four_genus_bounds(knot)
        gamma3 = crosscap_number(knot)
        assert 1 <= bounds.lower <= bounds.upper <= gamma3
        if bounds.exact is None:
            assert bounds.provenance == EXACT_UNKNOWN
            assert bounds.lower < bounds.upper
        else:
            assert bounds.provenance != EXACT_UNKNOWN
            assert bounds.lower <= bounds.exact <= bounds.upper


def test_family_km1_small():
    for m in range(3, 14, 2):
        for k in range(1, 14, 2):
            knot = normalize(k * m + 1, m)
            assert knot == TorusKnot(k * m + 1, m)
            assert pinches_to_unknot(knot) == (m - 1) // 2
            trace = pinch_sequence(knot, StopRule.FIRST_UNKNOT)
            assert all(r.sign is PinchSign.POSITIVE for r in trace)
            bounds = four_genus_bounds(knot)
            assert bounds.exact == (m - 1) // 2
            assert bounds.provenance == EXACT_BY_POSITIVE_PINCHES
            assert crosscap_number(knot) == (m - 1) // 2 + (k + 1) // 2
            gap, _ = gap_report(knot)
            assert gap == (k + 1) // 2


@settings(max_examples=100)
@given(nontrivial_knots())
def test_report_internal_consistency_random(knot):
    report = genus_report(knot)
    assert report.gamma4.upper == report.beta1_F == len(report.trace)
    assert 1 <= report.gamma4.lower <= report.gamma4.upper <= report.gamma3
    assert report.gap_lower_bound == Fraction(report.k, 2)
    if knot.p % 2 == 0:
        assert report.gamma3 - report.beta1_F == report.ell // 2
        assert Fraction(report.gamma3 - report.beta1_F) >= report.gap_lower_bound
        assert report.split is None
    else:
        assert report.split is not None
