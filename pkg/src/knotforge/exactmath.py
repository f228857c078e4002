"""Exact arithmetic substrate.

Angles are carried as rational multiples of pi so that singularity tests
(``sin = 0``) and sign-of-sine queries are pure integer arithmetic.  The
module also houses modular inverses and the two continued-fraction
algorithms that the 2-bridge classification is built on: the all-even
expansion and exact (projective) evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

__all__ = [
    "BigRational",
    "PiRational",
    "NonInvertible",
    "OddLength",
    "IntermediateZero",
    "InfiniteValue",
    "sin_sign",
    "sin_sign_int",
    "mod_inverse",
    "even_cf_expand",
    "even_cf_terms",
    "cf_evaluate",
    "cf_evaluate_projective",
]

# Reduced arbitrary-precision rationals; the stdlib type already enforces
# lowest terms and a positive denominator.
BigRational = Fraction


class NonInvertible(ValueError):
    """Raised when gcd(q, p) != 1 so q has no inverse mod p."""


class OddLength(ValueError):
    """All-even continued fraction terminated with an odd number of terms."""


class IntermediateZero(ZeroDivisionError):
    """A partial continued-fraction value hit zero in denominator position."""


class InfiniteValue(ArithmeticError):
    """A projective continued-fraction evaluation ended at infinity."""


@dataclass(frozen=True)
class PiRational:
    """An angle ``coeff * pi`` with an exact rational coefficient."""

    coeff: Fraction

    def __post_init__(self):
        if not isinstance(self.coeff, Fraction):
            object.__setattr__(self, "coeff", Fraction(self.coeff))

    def reduced_mod2(self) -> Fraction:
        """Coefficient folded into [0, 2)."""
        return self.coeff % 2

    def radians(self) -> float:
        return float(self.coeff) * math.pi

    def __float__(self) -> float:
        return self.radians()


AngleLike = Union[PiRational, Fraction, int]


def sin_sign(theta: AngleLike) -> int:
    """Exact sign of sin(theta) for theta a rational multiple of pi.

    Returns 0 iff the coefficient is an integer, +1 if it lies in (0, 1)
    mod 2, and -1 if it lies in (1, 2) mod 2.
    """
    coeff = theta.coeff if isinstance(theta, PiRational) else Fraction(theta)
    m = coeff % 2
    if m.denominator == 1:
        return 0
    return 1 if m < 1 else -1


def sin_sign_int(num: int, den: int) -> int:
    """sin_sign(num/den * pi) on raw integers; den must be positive."""
    m = num % (den << 1)
    if m % den == 0:
        return 0
    return 1 if m < den else -1


def mod_inverse(q: int, p: int) -> int:
    """Inverse of q mod p, in (0, p)."""
    if p <= 0:
        raise ValueError("modulus must be positive")
    if math.gcd(q, p) != 1:
        raise NonInvertible(f"gcd({q}, {p}) != 1")
    return pow(q, -1, p)


def even_cf_expand(p: int, q: int) -> tuple[int, ...]:
    """All-even continued fraction of a 2-bridge fraction p/q.

    Returns (a_1, ..., a_n) such that the continued fraction
    [2a_1, -2a_2, 2a_3, ..., (-1)^(n+1) 2a_n] evaluates exactly to p/q'
    where q' is the even member of {q, p-q}.  An expansion with all even
    partial quotients only exists for an even denominator, and q and p-q
    describe mirror-image knots, which are identified throughout.

    The greedy step picks the even integer nearest to the current value;
    no tie can occur because the numerator/denominator parities alternate
    (odd/even, even/odd, ...), which also forces n to be even.
    """
    if p <= 0 or p % 2 == 0:
        raise ValueError("p must be a positive odd integer")
    if not 0 < q < p:
        raise ValueError("q must satisfy 0 < q < p")
    if math.gcd(p, q) != 1:
        raise ValueError("p and q must be coprime")
    if q % 2 == 1:
        q = p - q
    num, den = p, q
    terms: list[int] = []
    while den:
        # nearest even integer to num/den: 2 * round(num / (2*den))
        c = 2 * ((Fraction(num, den) + 1) // 2)
        terms.append(c)
        num, den = den, num - c * den
        if den != 0 and abs(den) >= abs(num):
            raise AssertionError("even quotient step failed to contract")
    if len(terms) % 2 == 1:
        raise OddLength("expansion has odd length; input describes a 2-component link")
    return tuple(
        c // 2 if i % 2 == 0 else -(c // 2) for i, c in enumerate(terms)
    )


def even_cf_terms(a: Sequence[int]) -> list[int]:
    """Partial quotients [2a_1, -2a_2, ...] from a band-twist sequence."""
    return [2 * ai if i % 2 == 0 else -2 * ai for i, ai in enumerate(a)]


def cf_evaluate(terms: Sequence[int]) -> Fraction:
    """Exact value of t_1 + 1/(t_2 + 1/(... + 1/t_m))."""
    if not terms:
        raise ValueError("empty continued fraction")
    val: Fraction | None = None
    for t in reversed(terms):
        if val is None:
            val = Fraction(t)
        else:
            if val == 0:
                raise IntermediateZero("zero in denominator position")
            val = t + 1 / val
    assert val is not None
    return val


def cf_evaluate_projective(terms: Sequence[int]) -> tuple[int, int]:
    """Continued-fraction value as a coprime pair (num, den), den >= 0.

    Intermediate infinities are legal (1/inf = 0 is absorbed by the
    recurrence); only a final value of infinity is an error.  0/0 cannot
    arise: the pair stays coprime throughout.
    """
    if not terms:
        raise ValueError("empty continued fraction")
    num, den = 1, 0
    for t in reversed(terms):
        num, den = t * num + den, num
    if den == 0:
        raise InfiniteValue("continued fraction evaluated to infinity")
    if den < 0:
        num, den = -num, -den
    return num, den
