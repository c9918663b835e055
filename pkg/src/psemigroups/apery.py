"""Apery sets and the invariants derived from them.

The least member in each residue class modulo a generator determines the
whole membership picture: Frobenius number, genus and arbitrary power sums
of the gaps all follow from the Apery elements, via Bernoulli numbers for
the general power sum.  Every division is exact-rational with a final
integrality assertion; a non-integer outcome signals a bug, never a
rounding decision.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core import (
    GeneratorTuple,
    ModulusNotGeneratorError,
    NonIntegerResultError,
    PSemigroup,
    ValidationError,
)


@dataclass(frozen=True)
class AperySet:
    """Least members per residue class modulo a chosen generator.

    ``by_residue[j]`` is the least member congruent to j, so the set forms a
    complete residue system and each element minus the modulus is a
    non-member.
    """

    gens: GeneratorTuple
    modulus: int
    by_residue: tuple[int, ...]

    @property
    def sorted_elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.by_residue))


def apery_set(semigroup: PSemigroup, modulus: int | None = None) -> AperySet:
    """Apery set of the semigroup with respect to ``modulus`` (default min generator)."""
    a = semigroup.gens.least if modulus is None else modulus
    if a not in semigroup.gens.elements:
        raise ModulusNotGeneratorError(f"{a} is not one of the generators")
    by_residue = []
    for j in range(a):
        n = j
        while not semigroup.contains(n):
            n += a
        by_residue.append(n)
    return AperySet(semigroup.gens, a, tuple(by_residue))


def _require_least_modulus(ap: AperySet) -> None:
    if ap.modulus != ap.gens.least:
        raise ValidationError(
            "derived invariants require the least generator as Apery modulus"
        )


def _exact_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegerResultError(f"{what} evaluated to non-integer {value}")
    return value.numerator


def frobenius_from_apery(ap: AperySet) -> int:
    """Largest non-member: max Apery element minus the modulus."""
    _require_least_modulus(ap)
    return max(ap.by_residue) - ap.modulus


def genus_from_apery(ap: AperySet) -> int:
    """Gap count from the Apery element sum."""
    _require_least_modulus(ap)
    a = ap.modulus
    value = Fraction(sum(ap.by_residue), a) - Fraction(a - 1, 2)
    return _exact_int(value, "genus")


def sylvester_sum_from_apery(ap: AperySet) -> int:
    """Sum of all gaps from the first two Apery power sums."""
    _require_least_modulus(ap)
    a = ap.modulus
    elements = ap.by_residue
    value = (
        Fraction(sum(m * m for m in elements), 2 * a)
        - Fraction(sum(elements), 2)
        + Fraction(a * a - 1, 12)
    )
    return _exact_int(value, "sylvester sum")


_BERNOULLI_CACHE: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n under the convention fixed by x/(e^x - 1).

    Generated by the recurrence sum_{j<=m} C(m+1, j) B_j = 0 (m >= 1), which
    forces B_1 = -1/2.  The cache only ever grows, so concurrent readers see
    a consistent prefix.
    """
    if n < 0:
        raise ValidationError("Bernoulli index must be non-negative")
    with _BERNOULLI_LOCK:
        while len(_BERNOULLI_CACHE) <= n:
            m = len(_BERNOULLI_CACHE)
            acc = Fraction(0)
            for j in range(m):
                acc += comb(m + 1, j) * _BERNOULLI_CACHE[j]
            _BERNOULLI_CACHE.append(-acc / (m + 1))
        return _BERNOULLI_CACHE[n]


def power_sum(semigroup: PSemigroup, mu: int) -> int:
    """Exact sum of n**mu over all gaps, evaluated from the Apery set.

    Uses the Bernoulli-weighted expansion of the power sum; mu = 1 reduces
    algebraically to the Sylvester sum formula.
    """
    if mu < 1:
        raise ValidationError("power-sum exponent must be >= 1")
    ap = apery_set(semigroup)
    a = ap.modulus
    elements = ap.by_residue
    total = Fraction(0)
    for k in range(mu + 1):
        inner = sum(m ** (mu + 1 - k) for m in elements)
        total += comb(mu + 1, k) * bernoulli(k) * Fraction(a) ** (k - 1) * inner
    total /= mu + 1
    total += bernoulli(mu + 1) / (mu + 1) * (a ** (mu + 1) - 1)
    value = _exact_int(total, f"power sum (mu={mu})")
    if value < 0:
        raise NonIntegerResultError(f"power sum (mu={mu}) evaluated negative: {value}")
    return value
