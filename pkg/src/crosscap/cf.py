"""Exact continued-fraction arithmetic for nonnegative rationals.

A nonnegative rational p/q in lowest terms is stored as its canonical
expansion [c0, c1, ..., cm]:

    p/q = c0 + 1/(c1 + 1/(... + 1/cm))

with c0 >= 0, interior coefficients >= 1, and cm >= 2 whenever m >= 1.
The integers 0 and 1 expand to [0] and [1].  Under these constraints the
expansion of each rational is unique, so expansions can serve as exact keys.

The reduction `step` subtracts 2 from the last coefficient and restores
canonical form.  On the knot side a step corresponds to one pinch move on a
torus knot, which is why everything here is exact integer arithmetic: a
single rounding error would silently change a genus count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .errors import InvalidParity, NotCanonicalizable, StepUndefined, ZeroDenominator

__all__ = [
    "ContinuedFraction",
    "Convergent",
    "expand",
    "evaluate",
    "canonicalize",
    "convergents",
    "step",
    "steps_to_zero",
    "steps_to_integer",
]


@dataclass(frozen=True)
class ContinuedFraction:
    """A canonical expansion [c0, ..., cm] of a nonnegative rational.

    Construction validates canonical form: c0 >= 0, interior coefficients
    >= 1, final coefficient >= 2 when the expansion has more than one entry.
    Instances are immutable and hashable.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not coeffs:
            raise NotCanonicalizable("coefficient sequence is empty")
        if any(not isinstance(c, int) for c in coeffs):
            raise TypeError("coefficients must be integers")
        if coeffs[0] < 0:
            raise NotCanonicalizable(f"leading coefficient must be >= 0: {list(coeffs)}")
        if len(coeffs) > 1:
            if any(c < 1 for c in coeffs[1:-1]):
                raise NotCanonicalizable(f"interior coefficients must be >= 1: {list(coeffs)}")
            if coeffs[-1] < 2:
                raise NotCanonicalizable(f"final coefficient must be >= 2: {list(coeffs)}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"


@dataclass(frozen=True)
class Convergent:
    """The i-th convergent p_i/q_i of an expansion, stored exactly."""

    index: int
    value: Fraction


Coefficients = Union[ContinuedFraction, Sequence[int], Iterable[int]]


def _as_tuple(cf: Coefficients) -> tuple[int, ...]:
    if isinstance(cf, ContinuedFraction):
        return cf.coeffs
    return tuple(cf)


def expand(x: Union[Fraction, int]) -> ContinuedFraction:
    """Return the canonical continued-fraction expansion of x >= 0.

    Repeated Euclidean division already yields a final coefficient >= 2
    (successive remainders are strictly decreasing), so the trailing-1 fold
    below is a guard rather than the common path.
    """
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"expansion is defined for nonnegative rationals only: {x}")
    a, b = x.numerator, x.denominator
    coeffs = []
    while b:
        c, r = divmod(a, b)
        coeffs.append(c)
        a, b = b, r
    if len(coeffs) > 1 and coeffs[-1] == 1:
        coeffs.pop()
        coeffs[-1] += 1
    return ContinuedFraction(tuple(coeffs))


def evaluate(cf: Coefficients) -> Fraction:
    """Evaluate a coefficient sequence by nested division, right to left.

    The input need not be canonical, but every intermediate denominator must
    be nonzero; otherwise ZeroDenominator is raised.  (Canonical input never
    trips this: all tails evaluate to values >= 1.)
    """
    coeffs = _as_tuple(cf)
    if not coeffs:
        raise ValueError("cannot evaluate an empty coefficient sequence")
    acc = Fraction(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        if acc == 0:
            raise ZeroDenominator(f"zero denominator while evaluating {list(coeffs)}")
        acc = c + 1 / acc
    return acc


def canonicalize(raw: Coefficients) -> ContinuedFraction:
    """Restore canonical form after the last coefficient was decreased by 2.

    Accepts a sequence that is canonical except its final entry may be 0 or 1,
    and rewrites the tail until the canonical constraints hold:

        [..., c, 0] == [...]          (drop the last two entries)
        [..., c, 1] == [..., c + 1]   (fold a trailing 1)

    Both rewrites preserve the represented value.  A two-entry sequence
    ending in 0 has no finite value and is rejected; it can only arise from a
    value with denominator 2, which `step` refuses up front.
    """
    seq = list(_as_tuple(raw))
    if not seq:
        raise NotCanonicalizable("coefficient sequence is empty")
    if seq[0] < 0 or (len(seq) > 1 and seq[-1] < 0) or any(c < 1 for c in seq[1:-1]):
        raise NotCanonicalizable(f"not a step image of a canonical sequence: {seq}")
    while len(seq) > 1 and seq[-1] < 2:
        if seq[-1] == 1:
            seq.pop()
            seq[-1] += 1
        else:
            if len(seq) == 2:
                raise NotCanonicalizable(f"{seq} does not represent a finite rational")
            del seq[-2:]
    return ContinuedFraction(tuple(seq))


def convergents(cf: ContinuedFraction) -> list[Convergent]:
    """Return all convergents p_i/q_i of a canonical expansion.

    The numerators and denominators follow the standard recursion

        p_i = c_i * p_{i-1} + p_{i-2},   q_i = c_i * q_{i-1} + q_{i-2}

    seeded with p_0 = c_0, q_0 = 1 and p_1 = c_1*c_0 + 1, q_1 = c_1.
    Consecutive convergents satisfy p_i q_{i-1} - p_{i-1} q_i = (-1)^(i-1),
    so each p_i/q_i is automatically in lowest terms and the final convergent
    equals the value of the expansion.
    """
    c = cf.coeffs
    p_prev, q_prev = c[0], 1
    out = [Convergent(0, Fraction(p_prev, q_prev))]
    if len(c) == 1:
        return out
    p_cur, q_cur = c[1] * c[0] + 1, c[1]
    out.append(Convergent(1, Fraction(p_cur, q_cur)))
    for i in range(2, len(c)):
        p_prev, q_prev, p_cur, q_cur = (
            p_cur,
            q_cur,
            c[i] * p_cur + p_prev,
            c[i] * q_cur + q_prev,
        )
        out.append(Convergent(i, Fraction(p_cur, q_cur)))
    return out


def step(cf: ContinuedFraction) -> ContinuedFraction:
    """Subtract 2 from the last coefficient and recanonicalize.

    Undefined for [0] and [1] (nothing left to reduce) and for values with
    denominator 2, where the rewrite rules cannot produce a finite value.  A
    canonical expansion has denominator 2 exactly when it reads [c0, 2], so
    the check is structural.
    """
    c = cf.coeffs
    if c == (0,) or c == (1,):
        raise StepUndefined(f"no step from {cf}")
    if len(c) == 2 and c[1] == 2:
        raise StepUndefined(f"step undefined for half-integer values: {cf}")
    return canonicalize(c[:-1] + (c[-1] - 2,))


def steps_to_zero(x: Union[Fraction, int]) -> int:
    """Count reduction steps from a/b down to [0], for even a and odd b.

    Coprimality makes b odd automatically once a is even.  Each step
    preserves the parities of numerator and denominator, so the walk can
    never strand on [1] or on a denominator-2 value, and the strictly
    decreasing numerator forces termination at [0].
    """
    x = Fraction(x)
    if x.numerator % 2:
        raise InvalidParity(f"numerator must be even: {x}")
    cf = expand(x)
    n = 0
    while cf.coeffs != (0,):
        cf = step(cf)
        n += 1
    return n


def steps_to_integer(x: Union[Fraction, int]) -> tuple[int, int]:
    """Count reduction steps until the expansion first becomes a single entry.

    Returns (count, value of that entry).  Integer inputs need no steps at
    all and report themselves.
    """
    x = Fraction(x)
    cf = expand(x)
    n = 0
    while len(cf.coeffs) > 1:
        cf = step(cf)
        n += 1
    return n, cf.coeffs[0]
