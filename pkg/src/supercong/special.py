"""Rising factorials, second-order harmonic numbers, Euler numbers, rational
Gamma-ratio shifts, and the two classical central-binomial congruences
(Wolstenholme, Morley).

Gamma ratios are never evaluated as Gamma values: every ratio used downstream
reduces to a quotient of rising factorials through Gamma(x+1) = x*Gamma(x),
keeping the whole package in exact rationals.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .arith import CongruenceReport, InvalidPrime, Rational, is_odd_prime, make_report

_lock = threading.Lock()


def pochhammer(a: Rational, k: int) -> Fraction:
    """Rising factorial (a)_k = a(a+1)...(a+k-1); the empty product is 1."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def inv_pochhammer_int(m: int) -> Fraction:
    """1/(1)_m = 1/m!, extended by 1/(1)_m = 0 for m = -1, -2, ...

    The zero extension is what makes the boundary terms of the telescoping
    F/G pair vanish; see series.wz_F and series.wz_G.
    """
    if m < 0:
        return Fraction(0)
    return Fraction(1, math.factorial(m))


_H2: list[Fraction] = [Fraction(0)]


def h2(n: int) -> Fraction:
    """Second-order harmonic number sum_{j=1..n} 1/j^2; zero for n = 0."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n >= len(_H2):
        with _lock:
            while len(_H2) <= n:
                j = len(_H2)
                _H2.append(_H2[-1] + Fraction(1, j * j))
    return _H2[n]


# Even-index Euler numbers E_0, E_2, E_4, ... defined by the recurrence
# sum_{k=0..n/2} C(n, 2k) E_{2k} = 0 for even n >= 2 (equivalent to the
# sech-type generating function; odd-index values vanish).
_EULER_EVEN: list[int] = [1]


def _extend_euler(max_index: int) -> None:
    if 2 * (len(_EULER_EVEN) - 1) >= max_index:
        return
    with _lock:
        while 2 * (len(_EULER_EVEN) - 1) < max_index:
            n = 2 * len(_EULER_EVEN)
            _EULER_EVEN.append(
                -sum(math.comb(n, 2 * k) * e for k, e in enumerate(_EULER_EVEN))
            )


@dataclass(frozen=True)
class EulerTable:
    """Euler numbers at even indices 0, 2, ..., max_index."""

    max_index: int
    values: tuple[int, ...]

    def value(self, n: int) -> int:
        """E_n for 0 <= n <= max_index; zero at odd n."""
        if not 0 <= n <= self.max_index:
            raise IndexError(f"index {n} outside table range [0, {self.max_index}]")
        return 0 if n % 2 else self.values[n // 2]


def euler_numbers(max_index: int) -> EulerTable:
    """Table of Euler numbers up to the given even index."""
    if max_index < 0 or max_index % 2:
        raise ValueError(f"max_index must be even and >= 0, got {max_index}")
    _extend_euler(max_index)
    return EulerTable(max_index, tuple(_EULER_EVEN[: max_index // 2 + 1]))


def euler_number(n: int) -> int:
    """Single Euler number E_n (zero at odd n)."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n % 2:
        return 0
    _extend_euler(n)
    return _EULER_EVEN[n // 2]


def gamma_ratio_half_shift(p: int) -> Fraction:
    """Gamma(1 + p/2) Gamma(1 - p/2) / (Gamma(1/2) Gamma(3/2)) for odd p >= 3.

    Reduced via the shift Gamma(x+1) = x*Gamma(x) to the exact quotient
    (3/2)_h / (1 - p/2)_h with h = (p-1)/2, which equals p * (-1)^((p-1)/2).
    """
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be odd and >= 3, got {p}")
    h = (p - 1) // 2
    return pochhammer(Fraction(3, 2), h) / pochhammer(1 - Fraction(p, 2), h)


def _require_prime_above_3(p: int, what: str) -> None:
    if p <= 3 or not is_odd_prime(p):
        raise InvalidPrime(f"{what} is stated for primes p > 3, got {p}")


def check_wolstenholme(p: int) -> CongruenceReport:
    """C(2p, p) = 2 (mod p^3) for primes p > 3."""
    _require_prime_above_3(p, "Wolstenholme's congruence")
    return make_report("wolstenholme", p, math.comb(2 * p, p), 2, 3)


def check_morley(p: int) -> CongruenceReport:
    """C(p-1, (p-1)/2) = (-1)^((p-1)/2) * 4^(p-1) (mod p^3) for primes p > 3."""
    _require_prime_above_3(p, "Morley's congruence")
    h = (p - 1) // 2
    return make_report("morley", p, math.comb(p - 1, h), (-1) ** h * 4 ** (p - 1), 3)
