"""Named congruence checks over the summand families, plus the exact
closed-form identities and per-index lemma instances backing them.

Every check produces a CongruenceReport carrying the exact achieved valuation
of lhs - rhs, so over-performance (a sum beating its required modulus) is
visible as data.  Checks whose supporting ingredients hold only for p > 3
have floor 5; p = 3 is reachable for them via informational mode, which
records valuations without pass/fail semantics.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .arith import CongruenceReport, InvalidPrime, is_odd_prime, make_report, vp
from .series import (
    SumSpec,
    _poch_neg_half,
    _poch_pos_half,
    partial_sum,
    pochhammer_ratio_product,
    wz_F,
    wz_G,
)
from .special import euler_number, h2

_lock = threading.Lock()


class PrimeTooSmall(ValueError):
    """The prime is below the check's domain floor (informational mode bypasses)."""


class IndexOutOfRange(ValueError):
    """A per-index lemma instance was requested outside its stated index range."""


# ---------------------------------------------------------------------------
# Closed forms for the two lemma sums, per weight exponent m in {3, 5, 7}.
# ---------------------------------------------------------------------------

TABLE1_WEIGHTS = (3, 5, 7)


def _require_m(m: int) -> None:
    if m not in TABLE1_WEIGHTS:
        raise ValueError(f"closed forms exist for m in {TABLE1_WEIGHTS}, got {m}")


def table1_f(m: int, n: int) -> Fraction:
    """Closed form of the unweighted lemma sum."""
    _require_m(m)
    if m == 3:
        return Fraction(0)
    base = -64 * n * (n - 1) * (2 * n - 1)
    if m == 5:
        return Fraction(base)
    return Fraction(base * (24 * n * n - 24 * n + 11))


def table1_g_parts(m: int, n: int) -> tuple[Fraction, Fraction]:
    """(rational part, coefficient of H_n^(2)) of the weighted closed form."""
    _require_m(m)
    den = 4 * n * n * (n - 1) ** 2
    if m == 3:
        return Fraction((2 * n - 1) ** 2 * (7 * n * n - 7 * n + 1), den), Fraction(0)
    if m == 5:
        poly = 256 * n**6 - 640 * n**5 + 320 * n**4 + 414 * n**3 - 493 * n**2 + 145 * n - 1
        return Fraction((2 * n - 1) * poly, den), Fraction(32 * n * (n - 1) * (2 * n - 1))
    poly = (
        6144 * n**8 - 21504 * n**7 + 24320 * n**6 - 1920 * n**5
        - 18496 * n**4 + 17582 * n**3 - 7557 * n**2 + 1433 * n - 1
    )
    coeff = 32 * n * (n - 1) * (2 * n - 1) * (24 * n * n - 24 * n + 11)
    return Fraction((2 * n - 1) * poly, den), Fraction(coeff)


def table1_g(m: int, n: int) -> Fraction:
    """Weighted closed form: rational part + H-coefficient * H_n^(2)."""
    rational, coeff = table1_g_parts(m, n)
    return rational + coeff * h2(n)


# Shared inner weight sum_{j=1..k} (1/(2j)^2 - 1/(2j-3)^2), used by both the
# weighted lemma sum and the order-4 product expansion.
_WEIGHTS: list[Fraction] = [Fraction(0)]


def _weight(k: int) -> Fraction:
    if k >= len(_WEIGHTS):
        with _lock:
            while len(_WEIGHTS) <= k:
                j = len(_WEIGHTS)
                _WEIGHTS.append(
                    _WEIGHTS[-1] + Fraction(1, 4 * j * j) - Fraction(1, (2 * j - 3) ** 2)
                )
    return _WEIGHTS[k]


def _lemma_terms(m: int, n: int):
    """Yield (k, t_k) for the terminating lemma summand

        t_k = (4k-1)^m (-1/2)_k^2 (-n)_k (n-1)_k / ((1)_k^2 (n+1/2)_k (3/2-n)_k)

    for k = 0..n, advancing by the exact integer term ratio.
    """
    t = Fraction(-1)  # k = 0 term: (-1)^m with m odd
    yield 0, t
    for k in range(1, n + 1):
        num = (2 * k - 3) ** 2 * (k - 1 - n) * (n + k - 2)
        den = k * k * (2 * n + 2 * k - 1) * (2 * k - 2 * n + 1)
        t *= Fraction(4 * k - 1, 4 * k - 5) ** m * Fraction(num, den)
        yield k, t


def check_lemma_f(m: int, n: int) -> bool:
    """Unweighted lemma sum equals its closed form, exactly (not just p-adically)."""
    _require_m(m)
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    total = sum((t for _, t in _lemma_terms(m, n)), Fraction(0))
    return total == table1_f(m, n)


def check_lemma_g(m: int, n: int) -> bool:
    """Weighted lemma sum equals its closed form, exactly."""
    _require_m(m)
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    total = Fraction(0)
    for k, t in _lemma_terms(m, n):
        total += t * _weight(k)
    return total == table1_g(m, n)


# ---------------------------------------------------------------------------
# Per-index congruence instances.
# ---------------------------------------------------------------------------


def _lemma_sun3_values(p: int, k: int) -> tuple[Fraction, Fraction]:
    h = (p - 1) // 2
    sign = -1 if (h + 1 + k) % 2 else 1
    lhs = (
        sign
        * 2
        * _poch_pos_half(h + 1) ** 2
        * _poch_pos_half(h + k)
        / (
            Fraction(math.factorial(h)) ** 2
            * math.factorial(h + 1 - k)
            * _poch_pos_half(k) ** 2
        )
    )
    rhs = Fraction(p**3 * 4**k, 2 * k * (2 * k - 1) * math.comb(2 * k, k))
    return lhs, rhs


def check_lemma_sun3(p: int, k: int) -> CongruenceReport:
    """One (p, k) instance of the signed Pochhammer-quotient congruence

        (-1)^((p+1)/2+k) 2 (1/2)_((p+1)/2)^2 (1/2)_((p-1)/2+k)
          / ((1)_((p-1)/2)^2 (1)_((p+1)/2-k) (1/2)_k^2)
        = p^3 4^k / (2k(2k-1) C(2k,k))   (mod p^4)

    for primes p >= 5 and 1 <= k <= (p-1)/2.
    """
    _require_check_prime(p, 5, "lemma_sun3")
    h = (p - 1) // 2
    if not 1 <= k <= h:
        raise IndexOutOfRange(f"k must lie in [1, {h}], got {k}")
    lhs, rhs = _lemma_sun3_values(p, k)
    return make_report("lemma_sun3", p, lhs, rhs, 4, k=k)


def _ratio_expansion_values(p: int, k: int, order: int) -> tuple[Fraction, Fraction]:
    lhs = pochhammer_ratio_product(p, k)
    u2 = (_poch_neg_half(k) / math.factorial(k)) ** 2
    rhs = u2 if order == 2 else u2 * (1 + p * p * _weight(k))
    return lhs, rhs


def check_ratio_expansion(p: int, k: int, order: int) -> CongruenceReport:
    """The shifted-parameter product prod_{j=1..k} ((2j-3)^2-p^2)/((2j)^2-p^2)
    against its even expansion in p:

        order 4:  (-1/2)_k^2/k!^2 * (1 + p^2 sum_{j=1..k} (1/(2j)^2 - 1/(2j-3)^2))
        order 2:  (-1/2)_k^2/k!^2

    for odd primes and 0 <= k <= (p+1)/2; required valuation = order.
    """
    if order not in (2, 4):
        raise ValueError(f"order must be 2 or 4, got {order}")
    _require_check_prime(p, 3, "ratio_expansion")
    if not 0 <= k <= (p + 1) // 2:
        raise IndexOutOfRange(f"k must lie in [0, {(p + 1) // 2}], got {k}")
    lhs, rhs = _ratio_expansion_values(p, k, order)
    return make_report(f"ratio_expansion_mod{order}", p, lhs, rhs, order, k=k)


def _require_check_prime(p: int, floor: int, what: str) -> None:
    if not is_odd_prime(p):
        raise InvalidPrime(f"{what} needs an odd prime, got {p}")
    if p < floor:
        raise PrimeTooSmall(f"{what} requires p >= {floor}, got {p}")


# ---------------------------------------------------------------------------
# The named check registry.
# ---------------------------------------------------------------------------

ValuesFn = Callable[[int], tuple[Fraction, Fraction, "int | None"]]


@dataclass(frozen=True)
class CheckDef:
    check_id: str
    floor: int
    required: int
    m: int | None
    values: ValuesFn


CHECKS: dict[str, CheckDef] = {}


def _register(check_id: str, floor: int, required: int, m: int | None, values: ValuesFn) -> None:
    CHECKS[check_id] = CheckDef(check_id, floor, required, m, values)


def _sgn(p: int) -> int:
    """(-1)^((p-1)/2) for odd p."""
    return -1 if ((p - 1) // 2) % 2 else 1


def _sum_a(m: int, p: int) -> Fraction:
    return partial_sum(SumSpec("A", m, (p + 1) // 2))


def _sum_b(m: int, p: int) -> Fraction:
    return partial_sum(SumSpec("B", m, (p + 1) // 2))


def _sum_v(m: int, p: int) -> Fraction:
    return partial_sum(SumSpec("V", m, (p - 1) // 2))


def _central_binomial_sum(p: int) -> Fraction:
    # sum_{k=1..(p-1)/2} 4^k / ((2k-1) C(2k,k))
    total = Fraction(0)
    for k in range(1, (p - 1) // 2 + 1):
        total += Fraction(4**k, (2 * k - 1) * math.comb(2 * k, k))
    return total


def _tail_sum(p: int) -> Fraction:
    h = (p + 1) // 2
    return sum((wz_G(h + 1, k) for k in range(1, h + 1)), Fraction(0))


def _worst_lemma_sun3(p: int) -> tuple[Fraction, Fraction, int]:
    worst = None
    for k in range(1, (p - 1) // 2 + 1):
        lhs, rhs = _lemma_sun3_values(p, k)
        achieved = vp(lhs - rhs, p)
        if worst is None or achieved < worst[0]:
            worst = (achieved, lhs, rhs, k)
    return worst[1], worst[2], worst[3]


def _worst_ratio_expansion(p: int, order: int) -> tuple[Fraction, Fraction, int]:
    worst = None
    for k in range(0, (p + 1) // 2 + 1):
        lhs, rhs = _ratio_expansion_values(p, k, order)
        achieved = vp(lhs - rhs, p)
        if worst is None or achieved < worst[0]:
            worst = (achieved, lhs, rhs, k)
    return worst[1], worst[2], worst[3]


_register("van_hamme", 3, 3, 1, lambda p: (_sum_v(1, p), Fraction(p * _sgn(p)), None))
_register(
    "sun_refinement", 5, 4, 1,
    lambda p: (_sum_v(1, p), p * _sgn(p) + p**3 * euler_number(p - 3), None),
)
_register(
    "thm1", 5, 4, 1,
    lambda p: (_sum_a(1, p), -p * _sgn(p) + p**3 * (2 - euler_number(p - 3)), None),
)
_register("thm2", 3, 2, 3, lambda p: (_sum_a(3, p), Fraction(3 * p * _sgn(p)), None))
_register("thm3_m3", 5, 4, 3, lambda p: (_sum_b(3, p), Fraction(0), None))
_register("thm3_m5", 5, 4, 5, lambda p: (_sum_b(5, p), Fraction(16 * p), None))
_register("thm3_m7", 5, 4, 7, lambda p: (_sum_b(7, p), Fraction(80 * p), None))
_register("gs0", 5, 5, 1, lambda p: (_sum_b(1, p), Fraction(-5 * p**4), None))
_register(
    "lemma_sun1", 3, 1, None,
    lambda p: (_central_binomial_sum(p), euler_number(p - 3) - 1 + _sgn(p), None),
)
# A common printed form of the same congruence reads E_(p-1), but every
# application of it needs E_(p-3); this id evaluates the misprinted form to
# document the discrepancy (it fails at p = 5 and p = 7) and is excluded
# from DEFAULT_CHECK_IDS.
_register(
    "lemma_sun1_printed", 5, 1, None,
    lambda p: (_central_binomial_sum(p), euler_number(p - 1) - 1 + _sgn(p), None),
)
_register(
    "tail_congruence", 5, 4, None,
    lambda p: (_tail_sum(p), p**3 * (2 - _sgn(p) - euler_number(p - 3)), None),
)
_register(
    "boundary_mod", 5, 4, None,
    lambda p: (wz_F((p + 1) // 2, (p + 1) // 2), Fraction(_sgn(p) * (p**3 - p)), None),
)
_register("h2_cong", 5, 1, None, lambda p: (h2((p + 1) // 2), Fraction(4), None))
for _m in TABLE1_WEIGHTS:
    _register(
        f"combined_m{_m}", 5, 4, _m,
        lambda p, m=_m: (
            _sum_b(m, p),
            table1_f(m, (p + 1) // 2) - p * p * table1_g(m, (p + 1) // 2),
            None,
        ),
    )
_register("lemma_sun3", 5, 4, None, _worst_lemma_sun3)
_register("ratio_expansion_mod2", 3, 2, None, lambda p: _worst_ratio_expansion(p, 2))
_register("ratio_expansion_mod4", 3, 4, None, lambda p: _worst_ratio_expansion(p, 4))

#: Canonical scan set: every registered check except the erratum documentation id.
DEFAULT_CHECK_IDS = tuple(sorted(i for i in CHECKS if i != "lemma_sun1_printed"))


def check(check_id: str, p: int, *, informational: bool = False) -> CongruenceReport:
    """Run one named check at an odd prime p.

    Below the check's floor, raises PrimeTooSmall unless informational=True,
    in which case the report carries the exact valuations with passed=None.
    For aggregate ids (lemma_sun3, ratio_expansion_mod*) the report holds the
    minimum achieved valuation over the index range, so it passes iff every
    per-index instance passes.
    """
    spec = CHECKS.get(check_id)
    if spec is None:
        raise ValueError(f"unknown check id {check_id!r}")
    if not is_odd_prime(p):
        raise InvalidPrime(f"{check_id} needs an odd prime, got {p}")
    if p < spec.floor and not informational:
        raise PrimeTooSmall(
            f"{check_id} requires p >= {spec.floor}; use informational mode for smaller primes"
        )
    lhs, rhs, k = spec.values(p)
    return make_report(
        check_id, p, lhs, rhs, spec.required,
        m=spec.m, k=k, informational=informational and p < spec.floor,
    )
