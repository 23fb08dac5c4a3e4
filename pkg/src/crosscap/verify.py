"""Bounded exhaustive verification of the pinch/step identities.

Every check enumerates the normalized nontrivial torus knots with both
parameters inside a bound (p ascending, then q ascending), evaluates one
claimed identity on each, and reports a CheckOutcome.  Checks never abort
on a failure: they keep scanning and collect up to MAX_COUNTEREXAMPLES
offending cases so a broken identity is visible in bulk, not one case at a
time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .genus import (
    crosscap_by_splitting,
    crosscap_number,
    euclidean_division,
    pinches_to_unknot,
    terminal_unknot_parameter,
)
from .knot import (
    StopRule,
    TorusKnot,
    normalized_knots,
    pinch,
    pinch_by_step,
    pinch_sequence,
    pinch_sign_from_expansion,
    pinch_witness,
)

__all__ = [
    "MAX_COUNTEREXAMPLES",
    "Counterexample",
    "CheckOutcome",
    "check_pinch_equivalence",
    "check_sign_lemma",
    "check_magnitude",
    "check_sign_parity",
    "check_terminal_unknot",
    "check_crosscap_odd_consistency",
    "check_gap_formula",
    "run_all",
]

MAX_COUNTEREXAMPLES = 100


@dataclass(frozen=True)
class Counterexample:
    input: str
    expected: str
    actual: str


@dataclass
class CheckOutcome:
    """Result of one exhaustive check over a parameter range."""

    check_name: str
    range_description: str
    cases_checked: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    failures_total: int = 0

    @property
    def passed(self) -> bool:
        return self.failures_total == 0


class _Collector:
    """Accumulates cases and counterexamples for one check."""

    def __init__(self, name: str, range_description: str):
        self.outcome = CheckOutcome(name, range_description)

    def case(self) -> None:
        self.outcome.cases_checked += 1

    def fail(self, case: object, expected: object, actual: object) -> None:
        self.outcome.failures_total += 1
        if len(self.outcome.counterexamples) < MAX_COUNTEREXAMPLES:
            self.outcome.counterexamples.append(
                Counterexample(str(case), str(expected), str(actual))
            )


def _knot_range(max_param: int) -> str:
    return f"normalized nontrivial T(p,q) with p,q <= {max_param}"


def check_pinch_equivalence(max_param: int) -> CheckOutcome:
    """Pinch via modular residues lands on the same knot as one cf step."""
    col = _Collector("pinch-equivalence", _knot_range(max_param))
    for knot in normalized_knots(max_param):
        col.case()
        via_residues = pinch(knot).result
        via_step = pinch_by_step(knot)
        if via_residues != via_step:
            col.fail(knot, via_residues, via_step)
    return col.outcome


def check_sign_lemma(max_param: int) -> CheckOutcome:
    """(p-2t)(q-2h) >= 0, with equality exactly when p = 2."""
    col = _Collector("sign-lemma", _knot_range(max_param))
    for knot in normalized_knots(max_param):
        col.case()
        wit = pinch_witness(knot.p, knot.q)
        product = (knot.p - 2 * wit.t) * (knot.q - 2 * wit.h)
        if product < 0:
            col.fail(knot, "(p-2t)(q-2h) >= 0", product)
        if (product == 0) != (knot.p == 2):
            col.fail(knot, "(p-2t)(q-2h) == 0 iff p == 2", product)
    return col.outcome


def check_magnitude(max_param: int) -> CheckOutcome:
    """|p-2t| and |q-2h| are ordered the same way as p and q.

    Checked on the raw residue output, before normalization reorders the
    resulting pair: r >= s when p > q, and r < s when p < q.
    """
    col = _Collector("magnitude-order", _knot_range(max_param))
    for knot in normalized_knots(max_param):
        col.case()
        wit = pinch_witness(knot.p, knot.q)
        r, s = abs(knot.p - 2 * wit.t), abs(knot.q - 2 * wit.h)
        if knot.p > knot.q and r < s:
            col.fail(knot, "r >= s for p > q", (r, s))
        if knot.p < knot.q and r >= s:
            col.fail(knot, "r < s for p < q", (r, s))
    return col.outcome


def check_sign_parity(max_param: int) -> CheckOutcome:
    """Residue-based pinch sign matches the expansion-length parity rule."""
    col = _Collector("sign-parity", _knot_range(max_param))
    for knot in normalized_knots(max_param):
        col.case()
        predicted = pinch_sign_from_expansion(knot)
        observed = pinch(knot).sign
        if observed is not predicted:
            col.fail(knot, predicted, observed)
    return col.outcome


def check_terminal_unknot(max_param: int) -> CheckOutcome:
    """The division formula predicts the first unknot a pinch walk reaches."""
    col = _Collector("terminal-unknot", _knot_range(max_param))
    for knot in normalized_knots(max_param):
        col.case()
        predicted = terminal_unknot_parameter(knot)
        observed = pinch_sequence(knot, StopRule.FIRST_UNKNOT)[-1].result.p
        if predicted != observed:
            col.fail(knot, predicted, observed)
    return col.outcome


def check_crosscap_odd_consistency(max_param: int) -> CheckOutcome:
    """Closed-formula crosscap number agrees with the splitting construction."""
    col = _Collector(
        "crosscap-odd-consistency", f"odd coprime 3 <= q < p <= {max_param}"
    )
    for knot in normalized_knots(max_param):
        if knot.p % 2 == 0:
            continue
        col.case()
        formula = crosscap_number(knot)
        geometric = crosscap_by_splitting(knot)
        if formula != geometric:
            col.fail(knot, geometric, formula)
    return col.outcome


def check_gap_formula(max_param: int) -> CheckOutcome:
    """gamma3 - beta1_F equals ceil(k/2) and stays >= k/2 for even p."""
    col = _Collector(
        "gap-formula", f"normalized nontrivial T(p,q), p even, p,q <= {max_param}"
    )
    for knot in normalized_knots(max_param):
        if knot.p % 2:
            continue
        col.case()
        k, _ = euclidean_division(knot)
        gap = crosscap_number(knot) - pinches_to_unknot(knot)
        if gap != (k + 1) // 2:
            col.fail(knot, (k + 1) // 2, gap)
        if Fraction(gap) < Fraction(k, 2):
            col.fail(knot, f"gap >= {Fraction(k, 2)}", gap)
    return col.outcome


def run_all(max_param: int) -> list[CheckOutcome]:
    """Run every check at the given bound, in a fixed order."""
    if max_param < 3:
        raise ValueError(f"bound must be at least 3: {max_param}")
    return [
        check_pinch_equivalence(max_param),
        check_sign_lemma(max_param),
        check_magnitude(max_param),
        check_sign_parity(max_param),
        check_terminal_unknot(max_param),
        check_crosscap_odd_consistency(max_param),
        check_gap_formula(max_param),
    ]
