"""2-bridge (rational) knot algebra.

A 2-bridge knot is classified by a fraction p/q with p odd and
0 < q < p; two fractions give the same knot (mirrors identified) exactly
when p matches and q' lies in the orbit {q, p-q, q^-1, p-q^-1} mod p.
This module turns 4-plat sign sequences into canonical fractions and
computes the band-sequence invariants used to screen for the symmetry
that all such sampled knots must carry: Conway and Alexander
polynomials, the mod-2 square test, and the linking number with the
2-periodicity axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .exactmath import (
    InfiniteValue,
    cf_evaluate_projective,
    even_cf_expand,
    mod_inverse,
)

__all__ = [
    "UNKNOT",
    "TwoBridgeFraction",
    "LaurentPolyInt",
    "SignSequence4Plat",
    "EvenP",
    "OddDegree",
    "Asymmetric",
    "canonical",
    "canonical_orbit",
    "fraction_from_diagram",
    "conway_polynomial",
    "alexander_from_conway",
    "alexander_of_fraction",
    "is_square_mod2",
    "is_one_mod2",
    "linking_number_with_axis",
    "positive_cf",
    "crossing_number",
    "enumerate_two_bridge",
]


class EvenP(ValueError):
    """Diagram evaluated to an even numerator: a link, not a knot."""


class OddDegree(ValueError):
    """Conway polynomial had odd z-terms; not a knot polynomial."""


class Asymmetric(ValueError):
    """Laurent polynomial is not palindromic in t <-> 1/t."""


class _Unknot:
    """Sentinel for the trivial knot (fraction 1)."""

    identity = "1/1"
    p = 1

    def __repr__(self) -> str:
        return "Unknot"


UNKNOT = _Unknot()


def canonical_orbit(p: int, q: int) -> tuple[int, int, int, int]:
    """The equivalence orbit {q, p-q, q^-1, p-q^-1} of q modulo p."""
    q %= p
    qi = mod_inverse(q, p)
    return (q, p - q, qi, p - qi)


@dataclass(frozen=True, order=True)
class TwoBridgeFraction:
    """Canonical fraction of a 2-bridge knot; q is the orbit minimum."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 3 or self.p % 2 == 0:
            raise ValueError("p must be an odd integer >= 3")
        if not 0 < self.q < self.p:
            raise ValueError("q must satisfy 0 < q < p")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError("p and q must be coprime")
        if self.q != min(canonical_orbit(self.p, self.q)):
            raise ValueError(f"{self.p}/{self.q} is not canonical")

    @property
    def identity(self) -> str:
        return f"{self.p}/{self.q}"

    def __str__(self) -> str:
        return self.identity


def canonical(p: int, q: int) -> TwoBridgeFraction:
    """Orbit-minimal representative of the fraction p/q (mirror-inclusive)."""
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd integer >= 3")
    q %= p
    if q == 0 or math.gcd(p, q) != 1:
        raise ValueError("q must be invertible mod p")
    return TwoBridgeFraction(p, min(canonical_orbit(p, q)))


@dataclass(frozen=True)
class SignSequence4Plat:
    """Crossing signs of an nx=2 diagram read left to right: one sign per
    row crossing and a pair of signs per column of two."""

    eta: tuple[int, ...]
    eps_pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.eps_pairs) != len(self.eta) - 1:
            raise ValueError("need exactly one column pair between consecutive rows")
        if any(e not in (-1, 1) for e in self.eta):
            raise ValueError("row signs must be +-1")
        if any(s not in (-1, 1) for pair in self.eps_pairs for s in pair):
            raise ValueError("column signs must be +-1")

    def cf_terms(self) -> list[int]:
        terms = []
        for i, e in enumerate(self.eta):
            terms.append(e)
            if i < len(self.eps_pairs):
                terms.append(sum(self.eps_pairs[i]))
        return terms


def fraction_from_diagram(signs: SignSequence4Plat):
    """Evaluate the alternating sign continued fraction of a 4-plat.

    Returns the canonical TwoBridgeFraction, or UNKNOT when |p| = 1.
    Column sums of zero are legal: evaluation runs over projective
    rationals where intermediate infinities absorb.
    """
    try:
        num, den = cf_evaluate_projective(signs.cf_terms())
    except InfiniteValue as exc:
        raise EvenP(f"diagram fraction is infinite: {exc}") from exc
    if num < 0:
        num, den = -num, -den
    if num % 2 == 0:
        raise EvenP(f"diagram fraction {num}/{den} has even numerator")
    if num == 1:
        return UNKNOT
    return canonical(num, den % num)


# ---------------------------------------------------------------------------
# Laurent polynomials over Z
# ---------------------------------------------------------------------------


class LaurentPolyInt:
    """Sparse integer Laurent polynomial: exponent -> coefficient."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.c = {e: v for e, v in (coeffs or {}).items() if v}

    @classmethod
    def const(cls, v: int) -> "LaurentPolyInt":
        return cls({0: v})

    @classmethod
    def term(cls, v: int, e: int) -> "LaurentPolyInt":
        return cls({e: v})

    def coeff(self, e: int) -> int:
        return self.c.get(e, 0)

    def __bool__(self) -> bool:
        return bool(self.c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.c == ({0: other} if other else {})
        return isinstance(other, LaurentPolyInt) and self.c == other.c

    def __hash__(self):
        return hash(tuple(sorted(self.c.items())))

    def __add__(self, other: "LaurentPolyInt") -> "LaurentPolyInt":
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPolyInt(out)

    def __sub__(self, other: "LaurentPolyInt") -> "LaurentPolyInt":
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, 0) - v
        return LaurentPolyInt(out)

    def __neg__(self) -> "LaurentPolyInt":
        return LaurentPolyInt({e: -v for e, v in self.c.items()})

    def __mul__(self, other: "LaurentPolyInt") -> "LaurentPolyInt":
        out: dict[int, int] = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + v1 * v2
        return LaurentPolyInt(out)

    def is_symmetric(self) -> bool:
        return all(self.coeff(-e) == v for e, v in self.c.items())

    def exponents(self) -> list[int]:
        return sorted(self.c)

    def mod2_bits(self) -> int:
        """GF(2) image as a bit-packed int, shifted to lowest degree 0."""
        odd = [e for e, v in self.c.items() if v % 2]
        if not odd:
            return 0
        lo = min(odd)
        bits = 0
        for e in odd:
            bits |= 1 << (e - lo)
        return bits

    def __repr__(self) -> str:
        if not self.c:
            return "0"
        bits = []
        for e in self.exponents():
            v = self.c[e]
            if e == 0:
                bits.append(f"{v}")
            else:
                bits.append(f"{v}*t^{e}")
        return " + ".join(bits)


def conway_polynomial(a: Sequence[int]) -> LaurentPolyInt:
    """Conway polynomial of the plumbed-band surface with twists a.

    Top-left entry of the product of the matrices [[-a_i z, 1], [1, 0]];
    the variable z is represented by exponent 1.
    """
    # (p, q) tracks the first row of the running product
    p, q = LaurentPolyInt.const(1), LaurentPolyInt()
    for ai in a:
        p, q = LaurentPolyInt.term(-ai, 1) * p + q, p
    return p


def alexander_from_conway(nabla: LaurentPolyInt) -> LaurentPolyInt:
    """Substitute z = t^(1/2) - t^(-1/2); z^2 becomes t - 2 + 1/t."""
    if any(e % 2 for e in nabla.c):
        raise OddDegree("Conway polynomial has odd z-terms")
    zsq = LaurentPolyInt({1: 1, 0: -2, -1: 1})
    out = LaurentPolyInt()
    for e, v in nabla.c.items():
        term = LaurentPolyInt.const(v)
        for _ in range(e // 2):
            term = term * zsq
        out = out + term
    return out


def alexander_of_fraction(frac: TwoBridgeFraction) -> LaurentPolyInt:
    """Alexander polynomial (symmetric, Delta(1)=1) of a canonical fraction."""
    return alexander_from_conway(conway_polynomial(even_cf_expand(frac.p, frac.q)))


def is_square_mod2(delta: LaurentPolyInt) -> bool:
    """True iff the symmetric polynomial is a square over GF(2): every
    odd-exponent coefficient must be even."""
    if not delta.is_symmetric():
        raise Asymmetric(f"not symmetric: {delta!r}")
    return all(v % 2 == 0 for e, v in delta.c.items() if e % 2)


def is_one_mod2(delta: LaurentPolyInt) -> bool:
    """True iff delta = 1 coefficientwise over GF(2)."""
    if not delta.is_symmetric():
        raise Asymmetric(f"not symmetric: {delta!r}")
    return delta.coeff(0) % 2 == 1 and all(
        v % 2 == 0 for e, v in delta.c.items() if e != 0
    )


def linking_number_with_axis(a: Sequence[int]) -> int:
    """Signed count of axis intersections of the plumbed-band surface.

    The sign sequence starts at +1 and flips after every even twist
    count; the linking number is its total.
    """
    eps = 1
    total = 1
    for ai in a:
        if ai % 2 == 0:
            eps = -eps
        total += eps
    return total


# ---------------------------------------------------------------------------
# crossing numbers and enumeration by crossing number
# ---------------------------------------------------------------------------


def positive_cf(p: int, q: int) -> list[int]:
    """All-positive continued fraction of p/q > 1 with last term >= 2."""
    if not 0 < q < p:
        raise ValueError("need 0 < q < p")
    digits = []
    while q:
        digits.append(p // q)
        p, q = q, p % q
    if digits[-1] == 1 and len(digits) > 1:  # cannot happen for reduced input
        digits[-2] += 1
        digits.pop()
    return digits


def crossing_number(f: TwoBridgeFraction) -> int:
    """Crossing number: the reduced alternating 4-plat diagram given by
    the positive expansion realizes it; minimize over the orbit."""
    return min(sum(positive_cf(f.p, q)) for q in set(canonical_orbit(f.p, f.q)))


def _compositions(total: int) -> Iterator[tuple[int, ...]]:
    """Compositions of total with all parts >= 1 and last part >= 2."""
    if total >= 2:
        yield (total,)
    for first in range(1, total - 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def _cf_to_pair(digits: Sequence[int]) -> tuple[int, int]:
    num, den = digits[-1], 1
    for d in reversed(digits[:-1]):
        num, den = d * num + den, num
    return num, den


def enumerate_two_bridge(cr_max: int) -> dict[int, frozenset[TwoBridgeFraction]]:
    """All 2-bridge knots grouped by crossing number, up to cr_max.

    Every reduced alternating 4-plat is encoded by a positive
    continued-fraction composition; evaluating, discarding even
    numerators (links), and canonicalizing yields each knot exactly once
    at its crossing number.
    """
    seen: set[TwoBridgeFraction] = set()
    table: dict[int, set[TwoBridgeFraction]] = {}
    for cr in range(3, cr_max + 1):
        bucket = table.setdefault(cr, set())
        for digits in _compositions(cr):
            p, q = _cf_to_pair(digits)
            if p % 2 == 0 or p < 3:
                continue
            f = canonical(p, q)
            if f in seen:
                continue
            seen.add(f)
            bucket.add(f)
    return {cr: frozenset(bucket) for cr, bucket in table.items()}
