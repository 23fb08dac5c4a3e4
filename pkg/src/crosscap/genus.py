"""Nonorientable genus invariants of torus knots.

For a nontrivial T(p,q) this module computes, all in exact arithmetic:

* beta1_F   - the number of pinch moves needed to reach the first unknot.
              Capping the pinch cobordism in the four-ball gives a
              nonorientable surface with this first Betti number, so it is
              an upper bound for the nonorientable four-genus gamma4.
* gamma3    - the crosscap number (nonorientable three-genus), from
              Teragaito's step-count formula: N(p,q) when pq is even, and
              N(pq-+1, p^2) when pq is odd, the sign picked by the parity
              of x with xq = -1 mod p.  N(a,b) counts reduction steps from
              a/b to 0 and is computed by cf.steps_to_zero.
* gamma4    - bounds for the nonorientable four-genus: lower 1, upper
              beta1_F, marked exact when a known criterion pins it down.
* the gap   - gamma3 - beta1_F, which for even p equals ell/2 where T(ell,1)
              is the unknot the pinch sequence first reaches.  The gap grows
              linearly in p//q, so the three- and four-dimensional invariants
              diverge along fixed-q families.

The odd-pq crosscap number also has a geometric form: split T(p,q) along
the second-to-last convergent of p/q and sum the pinch counts of the two
pieces (Teragaito again).  `crosscap_by_splitting` implements that route so
the verification module can cross-check the closed formula against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import cf
from .errors import DegenerateModulus, EvenParity, OddParity, UnknotInput
from .knot import PinchRecord, PinchSign, StopRule, TorusKnot, is_unknot, normalize, pinch_sequence

__all__ = [
    "OddSplit",
    "FourGenusBounds",
    "GenusReport",
    "EXACT_BY_POSITIVE_PINCHES",
    "EXACT_BY_BATSON",
    "EXACT_BY_COLLAPSE",
    "EXACT_UNKNOWN",
    "euclidean_division",
    "terminal_unknot_parameter",
    "pinches_to_unknot",
    "pinches_to_zero",
    "odd_split",
    "crosscap_by_splitting",
    "crosscap_number",
    "four_genus_bounds",
    "gap_report",
    "orientable_genus",
    "genus_report",
]

# Provenance labels for an exact gamma4 value.
EXACT_BY_POSITIVE_PINCHES = "all-positive-pinches"
EXACT_BY_BATSON = "batson"
EXACT_BY_COLLAPSE = "interval-collapse"
EXACT_UNKNOWN = "none"


@dataclass(frozen=True)
class OddSplit:
    """Decomposition of an odd-parameter T(p,q) into two torus knots.

    `first` comes from the second-to-last convergent of p/q, `second` from
    the complementary parameters; each piece has exactly one even parameter.
    """

    first: TorusKnot
    second: TorusKnot


@dataclass(frozen=True)
class FourGenusBounds:
    """Bounds for the nonorientable four-genus, with an exactness verdict.

    `exact` is set when one of the recognized criteria applies and
    `provenance` records which one: "all-positive-pinches" (even p, every
    pinch to the first unknot positive), "batson" (the T(2k,2k-1) family,
    where gamma4 = k-1), or "interval-collapse" (lower == upper, no theorem
    needed).  Otherwise exact is None and provenance is "none".
    """

    lower: int
    upper: int
    exact: Optional[int]
    provenance: str


@dataclass(frozen=True)
class GenusReport:
    """Everything this package knows about one nontrivial torus knot."""

    knot: TorusKnot
    k: int
    a: int
    ell: int
    beta1_F: int
    gamma3: int
    gamma4: FourGenusBounds
    gap_lower_bound: Fraction
    orientable_genus: int
    trace: tuple[PinchRecord, ...]
    split: Optional[OddSplit]


def _require_nontrivial(knot: TorusKnot) -> None:
    if is_unknot(knot):
        raise UnknotInput(f"{knot} is trivial")


def euclidean_division(knot: TorusKnot) -> tuple[int, int]:
    """Write p = q*k + a with 0 < a < q and return (k, a)."""
    if knot.q <= 1:
        raise DegenerateModulus(f"division by q requires q > 1: {knot}")
    return divmod(knot.p, knot.q)


def terminal_unknot_parameter(knot: TorusKnot) -> int:
    """Predict the l of the first unknot T(l,1) a pinch sequence reaches.

    With p = q*k + a, the answer is k when p and k share parity and k+1
    otherwise.
    """
    k, _ = euclidean_division(knot)
    return k if (knot.p - k) % 2 == 0 else k + 1


def pinches_to_unknot(knot: TorusKnot) -> int:
    """Number of pinch moves from a nontrivial knot to the first unknot.

    Equals the step count of cf.steps_to_integer(p/q), which is how it is
    computed; the pinch-per-step equivalence is enforced by module verify.
    """
    _require_nontrivial(knot)
    count, _ = cf.steps_to_integer(knot.fraction())
    return count


def pinches_to_zero(knot: TorusKnot) -> int:
    """Number of pinch moves from T(p,q), p even, all the way to T(0,1).

    This is N(p,q) in step-count terms.  Unknots with even p are accepted:
    T(2,1) needs one move and T(0,1) none, and both show up as split pieces
    of odd-parameter knots.
    """
    if knot.p % 2:
        raise OddParity(f"reaching T(0,1) requires even p: {knot}")
    return cf.steps_to_zero(knot.fraction())


def odd_split(knot: TorusKnot) -> OddSplit:
    """Split an odd-parameter T(p,q) into the two knots whose pinch
    surfaces glue to a crosscap-realizing surface for it.

    With p_i/q_i the convergents of p/q = [c0, ..., cm], the pieces are
    T(p_{m-1}, q_{m-1}) and T(p - p_{m-1}, q - q_{m-1}), normalized.
    """
    _require_nontrivial(knot)
    if knot.p % 2 == 0:
        raise EvenParity(f"splitting is defined for odd parameters only: {knot}")
    penultimate = cf.convergents(cf.expand(knot.fraction()))[-2].value
    first = normalize(penultimate.numerator, penultimate.denominator)
    second = normalize(knot.p - penultimate.numerator, knot.q - penultimate.denominator)
    return OddSplit(first, second)


def crosscap_by_splitting(knot: TorusKnot) -> int:
    """Crosscap number of an odd-parameter knot via its split pieces.

    Geometric route: sum of the pinches-to-zero counts of the two split
    knots.  Used as an independent oracle for `crosscap_number`.
    """
    split = odd_split(knot)
    return pinches_to_zero(split.first) + pinches_to_zero(split.second)


def crosscap_number(knot: TorusKnot) -> int:
    """Crosscap number gamma3 of a nontrivial torus knot.

    Even pq: N(p,q).  Odd pq: N(pq-1, p^2) or N(pq+1, p^2) according to
    whether the residue x with xq = -1 (mod p) is even or odd.  Both
    N arguments are even and coprime to the odd square, so the step count
    is always defined.
    """
    _require_nontrivial(knot)
    p, q = knot.p, knot.q
    if p % 2 == 0:
        return cf.steps_to_zero(knot.fraction())
    x = (-pow(q, -1, p)) % p
    numerator = p * q - 1 if x % 2 == 0 else p * q + 1
    return cf.steps_to_zero(Fraction(numerator, p * p))


def _bounds_from_trace(knot: TorusKnot, trace: tuple[PinchRecord, ...]) -> FourGenusBounds:
    upper = len(trace)
    lower = 1
    candidates = []
    if knot.p % 2 == 0 and all(r.sign is PinchSign.POSITIVE for r in trace):
        candidates.append((EXACT_BY_POSITIVE_PINCHES, upper))
    if knot.p % 2 == 0 and knot.q == knot.p - 1:
        candidates.append((EXACT_BY_BATSON, knot.p // 2 - 1))
    if lower == upper:
        candidates.append((EXACT_BY_COLLAPSE, upper))
    if not candidates:
        return FourGenusBounds(lower, upper, None, EXACT_UNKNOWN)
    values = {value for _, value in candidates}
    if len(values) != 1:
        # Cannot happen: the criteria provably agree wherever they overlap.
        raise RuntimeError(f"exactness criteria disagree on {knot}: {candidates}")
    provenance, value = candidates[0]
    return FourGenusBounds(lower, upper, value, provenance)


def four_genus_bounds(knot: TorusKnot) -> FourGenusBounds:
    """Bounds (and, when known, the exact value) of the nonorientable
    four-genus of a nontrivial torus knot."""
    _require_nontrivial(knot)
    trace = tuple(pinch_sequence(knot, StopRule.FIRST_UNKNOT))
    return _bounds_from_trace(knot, trace)


def gap_report(knot: TorusKnot) -> tuple[int, Fraction]:
    """Return (gamma3 - beta1_F, k/2) for an even-parameter knot.

    The first component measures how far the crosscap number exceeds the
    four-genus upper bound; it always equals ceil(k/2) = ell/2, which the
    implementation re-derives and checks.  The second component is the
    exact rational lower bound k/2.
    """
    _require_nontrivial(knot)
    if knot.p % 2:
        raise OddParity(f"gap formula requires even p: {knot}")
    k, _ = euclidean_division(knot)
    gap = crosscap_number(knot) - pinches_to_unknot(knot)
    if gap != (k + 1) // 2:
        raise RuntimeError(f"gap closed form violated on {knot}: {gap} != {(k + 1) // 2}")
    return gap, Fraction(k, 2)


def orientable_genus(knot: TorusKnot) -> int:
    """Seifert genus (p-1)(q-1)/2 of T(p,q)."""
    return (knot.p - 1) * (knot.q - 1) // 2


def genus_report(knot: TorusKnot) -> GenusReport:
    """Assemble the full invariant report for a nontrivial torus knot."""
    _require_nontrivial(knot)
    k, a = euclidean_division(knot)
    trace = tuple(pinch_sequence(knot, StopRule.FIRST_UNKNOT))
    return GenusReport(
        knot=knot,
        k=k,
        a=a,
        ell=terminal_unknot_parameter(knot),
        beta1_F=len(trace),
        gamma3=crosscap_number(knot),
        gamma4=_bounds_from_trace(knot, trace),
        gap_lower_bound=Fraction(k, 2),
        orientable_genus=orientable_genus(knot),
        trace=trace,
        split=odd_split(knot) if knot.p % 2 else None,
    )
