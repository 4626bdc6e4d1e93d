"""Truncated hypergeometric sums, the telescoping F/G pair, and terminating
instances of the very-well-poised 6F5(-1) <-> 3F2(1) transformation, all in
exact rational arithmetic.

Summand families (the weight exponent m is always odd):

    A: (-1)^k (4k-1)^m (-1/2)_k^3 / k!^3
    B:        (4k-1)^m (-1/2)_k^4 / k!^4
    V: (-1)^k (4k+1)^m (1/2)_k^3  / k!^3

Summation is sequential left-to-right; exactness makes the order irrelevant
and the result deterministic.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .arith import Rational
from .special import inv_pochhammer_int, pochhammer

FAMILIES = ("A", "B", "V")

_lock = threading.Lock()


class PreconditionViolated(ValueError):
    """An operation was called outside its stated domain."""


class ParameterSingularity(ValueError):
    """A denominator rising factorial vanishes for the given parameters."""


@dataclass(frozen=True)
class SumSpec:
    """One truncated sum: family tag, odd weight exponent, inclusive upper index."""

    family: str
    m: int
    upper: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.m < 1 or self.m % 2 == 0:
            raise ValueError(f"weight exponent m must be an odd positive integer, got {self.m}")
        if self.upper < 0:
            raise ValueError(f"upper limit must be >= 0, got {self.upper}")


def term_value(spec: SumSpec, k: int) -> Fraction:
    """The exact k-th summand of the family (defined for every k >= 0)."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    fact = Fraction(math.factorial(k))
    if spec.family == "A":
        u = pochhammer(Fraction(-1, 2), k) / fact
        return (-1) ** k * (4 * k - 1) ** spec.m * u**3
    if spec.family == "B":
        u = pochhammer(Fraction(-1, 2), k) / fact
        return (4 * k - 1) ** spec.m * u**4
    v = pochhammer(Fraction(1, 2), k) / fact
    return (-1) ** k * (4 * k + 1) ** spec.m * v**3


def partial_sum(spec: SumSpec) -> Fraction:
    """Sum of term_value(spec, k) over k = 0..upper, via incremental term ratios."""
    total = Fraction(0)
    u = Fraction(1)  # (base)_k / k! for the family's base
    sign = 1
    for k in range(spec.upper + 1):
        if k:
            # (-1/2)_k/k! and (1/2)_k/k! advance by (2k-3)/(2k) and (2k-1)/(2k)
            u *= Fraction(2 * k - 3, 2 * k) if spec.family != "V" else Fraction(2 * k - 1, 2 * k)
        if spec.family == "A":
            total += sign * (4 * k - 1) ** spec.m * u**3
        elif spec.family == "B":
            total += (4 * k - 1) ** spec.m * u**4
        else:
            total += sign * (4 * k + 1) ** spec.m * u**3
        sign = -sign
    return total


# Prefix-product caches for the two rising-factorial bases the telescoping
# pair evaluates over and over: (-1/2)_k and (1/2)_k.
_POCH_NEG_HALF: list[Fraction] = [Fraction(1)]
_POCH_POS_HALF: list[Fraction] = [Fraction(1)]


def _poch_neg_half(k: int) -> Fraction:
    """(-1/2)_k from a growing prefix cache."""
    if k >= len(_POCH_NEG_HALF):
        with _lock:
            while len(_POCH_NEG_HALF) <= k:
                i = len(_POCH_NEG_HALF)
                _POCH_NEG_HALF.append(_POCH_NEG_HALF[-1] * Fraction(2 * i - 3, 2))
    return _POCH_NEG_HALF[k]


def _poch_pos_half(k: int) -> Fraction:
    """(1/2)_k from a growing prefix cache."""
    if k >= len(_POCH_POS_HALF):
        with _lock:
            while len(_POCH_POS_HALF) <= k:
                i = len(_POCH_POS_HALF)
                _POCH_POS_HALF.append(_POCH_POS_HALF[-1] * Fraction(2 * i - 1, 2))
    return _POCH_POS_HALF[k]


def wz_F(n: int, k: int) -> Fraction:
    """F(n,k) = (-1)^(n+k) (4n-1) (-1/2)_n^2 (-1/2)_(n+k) / ((1)_n^2 (1)_(n-k) (-1/2)_k^2).

    The 1/(1)_m = 0 convention for negative m makes F vanish for k > n.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    inv_tail = inv_pochhammer_int(n - k)
    if inv_tail == 0:
        return Fraction(0)
    sign = -1 if (n + k) % 2 else 1
    num = (4 * n - 1) * _poch_neg_half(n) ** 2 * _poch_neg_half(n + k) * inv_tail
    return sign * num / (Fraction(math.factorial(n)) ** 2 * _poch_neg_half(k) ** 2)


def wz_G(n: int, k: int) -> Fraction:
    """G(n,k) = (-1)^(n+k) 2 (-1/2)_n^2 (-1/2)_(n+k-1) / ((1)_(n-1)^2 (1)_(n-k) (-1/2)_k^2).

    Vanishes at n = 0 (through 1/(1)_(-1) = 0) and for k > n.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    inv_head = inv_pochhammer_int(n - 1)
    inv_tail = inv_pochhammer_int(n - k)
    if inv_head == 0 or inv_tail == 0:
        return Fraction(0)
    sign = -1 if (n + k) % 2 else 1
    num = 2 * _poch_neg_half(n) ** 2 * _poch_neg_half(n + k - 1) * inv_head**2 * inv_tail
    return sign * num / _poch_neg_half(k) ** 2


def check_wz_relation(n: int, k: int) -> bool:
    """F(n,k-1) - F(n,k) == G(n+1,k) - G(n,k), exactly.  Stated for k >= 1."""
    if k < 1:
        raise PreconditionViolated(f"the pair relation is stated for k >= 1, got k={k}")
    return wz_F(n, k - 1) - wz_F(n, k) == wz_G(n + 1, k) - wz_G(n, k)


def check_telescoped_identity(p: int) -> bool:
    """Exact telescoped identity for odd p >= 3, with h = (p+1)/2:

        sum_{n=0..h} F(n,0) == F(h,h) + sum_{k=1..h} G(h+1, k)
    """
    if p < 3 or p % 2 == 0:
        raise PreconditionViolated(f"p must be odd and >= 3, got {p}")
    h = (p + 1) // 2
    lhs = sum((wz_F(n, 0) for n in range(h + 1)), Fraction(0))
    rhs = wz_F(h, h) + sum((wz_G(h + 1, k) for k in range(1, h + 1)), Fraction(0))
    return lhs == rhs


def boundary_closed_form(p: int) -> tuple[Fraction, Fraction]:
    """The diagonal boundary term two ways, for odd p >= 3.

    Returns (F(h,h), -2p(2p+1) C(2p,p) C(p-1,(p-1)/2) / (4^p (p+1)^2)),
    h = (p+1)/2.  The two components are equal for every odd p; the identity
    is algebraic, not merely p-adic, so odd composites work too.
    """
    if p < 3 or p % 2 == 0:
        raise PreconditionViolated(f"p must be odd and >= 3, got {p}")
    h = (p + 1) // 2
    closed = Fraction(
        -2 * p * (2 * p + 1) * math.comb(2 * p, p) * math.comb(p - 1, (p - 1) // 2),
        4**p * (p + 1) ** 2,
    )
    return wz_F(h, h), closed


def _vanishes_within(base: Fraction, count: int) -> bool:
    # (x)_k = 0 for some 1 <= k <= count iff x is an integer in [-(count-1), 0]
    return base.denominator == 1 and -(count - 1) <= base.numerator <= 0


def whipple_terminating(
    a: Rational, b: Rational, c: Rational, d: Rational, N: int
) -> bool:
    """Terminating transform check with e = -N:

        sum_{k=0..N} (-1)^k (a)_k (1+a/2)_k (b)_k (c)_k (d)_k (-N)_k
                     / (k! (a/2)_k (1+a-b)_k (1+a-c)_k (1+a-d)_k (1+a+N)_k)
        == ((1+a)_N / (1+a-d)_N)
           * sum_{k=0..N} (1+a-b-c)_k (d)_k (-N)_k / (k! (1+a-b)_k (1+a-c)_k)

    The prefactor is the Gamma-ratio of the transformation reduced to rising
    factorials by the shift property.  Raises ParameterSingularity when a
    denominator rising factorial vanishes within the summation range.
    """
    if N < 0:
        raise ValueError(f"N must be non-negative, got {N}")
    a, b, c, d = (Fraction(x) for x in (a, b, c, d))
    e = Fraction(-N)
    lower = (a / 2, 1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e)
    for base in lower:
        if _vanishes_within(base, N):
            raise ParameterSingularity(
                f"denominator factor ({base})_k vanishes for some k <= {N}"
            )
    lhs = Fraction(0)
    for k in range(N + 1):
        num = Fraction(1)
        for base in (a, 1 + a / 2, b, c, d, e):
            num *= pochhammer(base, k)
        den = Fraction(math.factorial(k))
        for base in lower:
            den *= pochhammer(base, k)
        lhs += (-1) ** k * num / den
    prefactor = pochhammer(1 + a, N) / pochhammer(1 + a - d, N)
    rhs = Fraction(0)
    for k in range(N + 1):
        num = pochhammer(1 + a - b - c, k) * pochhammer(d, k) * pochhammer(e, k)
        den = Fraction(math.factorial(k)) * pochhammer(1 + a - b, k) * pochhammer(1 + a - c, k)
        rhs += num / den
    return lhs == prefactor * rhs


def f32_top_minus_one(d: Rational, e: Rational, lower: Rational) -> Fraction:
    """Exact two-term value 1 - d*e/lower^2 of a 3F2(1) whose top parameter is
    -1 and whose two lower parameters both equal `lower`."""
    d, e, lower = Fraction(d), Fraction(e), Fraction(lower)
    return 1 - d * e / lower**2  # lower = 0 raises ZeroDivisionError


def pochhammer_ratio_product(p: int, k: int) -> Fraction:
    """prod_{j=1..k} ((2j-3)^2 - p^2) / ((2j)^2 - p^2) for odd p.

    Equals the rising-factorial ratio
    ((-1-p)/2)_k ((-1+p)/2)_k / ((1+p/2)_k (1-p/2)_k) exactly.
    """
    if p % 2 == 0:
        raise PreconditionViolated(f"p must be odd, got {p}")
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    out = Fraction(1)
    for j in range(1, k + 1):
        out *= Fraction((2 * j - 3) ** 2 - p * p, (2 * j) ** 2 - p * p)
    return out
