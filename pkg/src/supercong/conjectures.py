"""Conjectured constant families: verify the congruence for a given constant
at (m, p, r), extract the constant's residue per prime, and rediscover the
integer constant by symmetric CRT lifting.

Family C: alternating cube sums (summand family A), claimed
    sum = c_m * p^r * (-1)^((p-1)r/2)  (mod p^(r+2)),
family D: fourth-power sums (summand family B), claimed
    sum = d_m * p^r                     (mod p^(r+3)),
with the truncation at (p^r+1)/2 ("half") or p^r - 1 ("full"); both
truncations are claimed to obey the same congruence, so the residues must
agree between variants.

Terms with index k >= p (which occur for r >= 2 and in full variants) can
carry p-dividing denominator factors, so this module always evaluates sums on
the exact-rational path; the modular fast path is only applied to the final
sum, whose reduced denominator is coprime to p whenever the valuation
precondition holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import (
    CongruenceReport,
    InconsistentInput,
    InvalidPrime,
    PrimePower,
    crt_lift,
    is_odd_prime,
    make_report,
    reduce_mod,
    vp,
)
from .series import SumSpec, partial_sum

FAMILIES = ("C", "D")
VARIANTS = ("half", "full")

_SUMMAND = {"C": "A", "D": "B"}
_RESIDUE_EXPONENT = {"C": 2, "D": 3}


class ValuationTooLow(ValueError):
    """The sum's valuation at p is below r: the claimed congruence already
    fails at this prime (a counterexample candidate)."""


def _validate(family: str, m: int, p: int, r: int, variant: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")
    if m < 1 or m % 2 == 0:
        raise ValueError(f"m must be an odd positive integer, got {m}")
    if not is_odd_prime(p):
        raise InvalidPrime(f"p must be an odd prime, got {p}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")


def _unit_sign(family: str, p: int, r: int) -> int:
    """(-1)^((p-1)r/2) for family C; +1 for family D."""
    if family == "D":
        return 1
    return -1 if (((p - 1) // 2) * r) % 2 else 1


def conj_sum(family: str, m: int, p: int, r: int, variant: str) -> Fraction:
    """Exact truncated sum of the family's summand at prime p and depth r,
    with upper limit (p^r+1)/2 (half) or p^r - 1 (full)."""
    _validate(family, m, p, r, variant)
    upper = (p**r + 1) // 2 if variant == "half" else p**r - 1
    return partial_sum(SumSpec(_SUMMAND[family], m, upper))


def verify_conjecture(
    family: str, m: int, p: int, r: int, constant: int, variant: str
) -> CongruenceReport:
    """Report on sum = constant * p^r * sign (mod p^(r+2) or p^(r+3))."""
    s = conj_sum(family, m, p, r, variant)
    rhs = Fraction(constant * p**r * _unit_sign(family, p, r))
    required = r + _RESIDUE_EXPONENT[family]
    return make_report(f"conj_{family.lower()}_{variant}", p, s, rhs, required, m=m, r=r)


def extract_residue(family: str, m: int, p: int, r: int, variant: str) -> tuple[int, int]:
    """Invert the claimed congruence for the constant at one prime.

    Returns (residue, modulus) with residue = (sum * sign / p^r) mod p^e,
    e = 2 for family C and 3 for family D.  Requires v_p(sum) >= r.
    """
    s = conj_sum(family, m, p, r, variant)
    if vp(s, p) < r:
        raise ValuationTooLow(
            f"family {family}, m={m}, p={p}, r={r} ({variant}): v_p(sum) < r"
        )
    pp = PrimePower(p, _RESIDUE_EXPONENT[family])
    x = s * _unit_sign(family, p, r) / Fraction(p) ** r
    return reduce_mod(x, pp), pp.modulus


@dataclass(frozen=True)
class DiscoveryResult:
    """A reconstructed integer constant with the per-prime evidence behind it.

    `consistent` witnesses the invariant "constant reproduces the residue at
    every evidence prime".  A False value means the per-prime residues do not
    come from any single small integer: the evidence rows identify the
    disagreeing primes, which are counterexample candidates for the claimed
    congruence.
    """

    family: str
    m: int
    r: int
    constant: int
    evidence: tuple[tuple[int, int, int], ...]  # (p, residue, modulus)
    consistent: bool


def _stabilized_lift(evidence: list[tuple[int, int, int]]) -> int:
    """Symmetric CRT lift that tolerates a disagreeing minority of primes.

    Lifts descending-prime prefixes until the symmetric representative stops
    changing; the first stabilized value is the candidate.  When every
    residue comes from one constant of small magnitude this equals the plain
    full-pool crt_lift (the full lift of consistent residues IS that
    constant); when a lone prime disagrees, the stabilized value is still the
    constant the remaining primes pin down, and the re-check in
    discover_constant flags the disagreement instead of returning an
    artifact of the combined modulus.
    """
    acc: list[tuple[int, int]] = []
    prev = None
    for _, res, mod in sorted(evidence, reverse=True):
        acc.append((res, mod))
        x = crt_lift(acc)
        if prev is not None and x == prev:
            return x
        prev = x
    return prev


def discover_constant(
    family: str,
    m: int,
    primes: list[int],
    r: int = 1,
    variant: str = "both",
) -> DiscoveryResult:
    """Rediscover the family constant from per-prime residues via CRT.

    With variant="both" (the default) the residue is extracted from the half
    and full truncations independently and the two must agree at every prime;
    InconsistentInput identifies the offending prime otherwise.  Residues are
    gathered in ascending prime order, lifted to the symmetric representative
    (see _stabilized_lift), and `consistent` re-verifies that the lifted
    constant reproduces every residue.  The output is empirical: it carries
    no claim beyond the primes listed in the evidence.
    """
    if variant not in VARIANTS + ("both",):
        raise ValueError(f"variant must be 'half', 'full' or 'both', got {variant!r}")
    if not primes:
        raise ValueError("need at least one prime")
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be distinct")
    evidence = []
    for p in sorted(primes):
        if p < 5 or not is_odd_prime(p):
            raise InvalidPrime(f"discovery primes must be primes >= 5, got {p}")
        pair = None
        if variant in ("half", "both"):
            pair = extract_residue(family, m, p, r, "half")
        if variant in ("full", "both"):
            full_pair = extract_residue(family, m, p, r, "full")
            if pair is not None and pair != full_pair:
                raise InconsistentInput(
                    f"half/full residues disagree at p={p}: {pair} vs {full_pair}"
                )
            pair = full_pair
        evidence.append((p, pair[0], pair[1]))
    constant = _stabilized_lift(evidence)
    consistent = all(constant % mod == res for _, res, mod in evidence)
    return DiscoveryResult(family, m, r, constant, tuple(evidence), consistent)
