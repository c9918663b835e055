"""Denumerant tables, membership construction, and set-level derived data.

The membership builder extends a saturating representation-count table until
min(gens) consecutive integers all clear the threshold; count monotonicity
under adding a generator makes that run a certificate that every larger
integer is a member.  The loose product bound on the frontier is
astronomically larger for three or more generators, so it is never used.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .core import (
    GeneratorTuple,
    PSemigroup,
    TableLimitError,
    ValidationError,
)

DEFAULT_TABLE_LIMIT = 10**8
TABLE_LIMIT_ENV = "PSG_MAX_TABLE"


def _table_cap() -> int:
    raw = os.environ.get(TABLE_LIMIT_ENV)
    if raw is None:
        return DEFAULT_TABLE_LIMIT
    try:
        cap = int(raw)
    except ValueError:
        raise ValidationError(f"{TABLE_LIMIT_ENV}={raw!r} is not an integer") from None
    if cap < 1:
        raise ValidationError(f"{TABLE_LIMIT_ENV} must be positive")
    return cap


def _count_table(gens: tuple[int, ...], limit: int, cap: int | None = None) -> list[int]:
    """Coin-counting recurrence: counts[n] = #tuples x with sum a_i x_i = n.

    With ``cap`` set, counts saturate at ``cap``; min(true, cap) is preserved
    by the recurrence, which is all the membership comparison d > p needs.
    """
    counts = [0] * (limit + 1)
    counts[0] = 1
    for a in gens:
        if cap is None:
            for n in range(a, limit + 1):
                counts[n] += counts[n - a]
        else:
            for n in range(a, limit + 1):
                c = counts[n] + counts[n - a]
                counts[n] = c if c < cap else cap
    return counts


@dataclass(frozen=True)
class DenumerantTable:
    """Exact representation counts for 0..limit."""

    gens: GeneratorTuple
    limit: int
    counts: tuple[int, ...]


def denumerant_table(gens: GeneratorTuple, limit: int) -> DenumerantTable:
    if limit < 0:
        raise ValidationError("table limit must be non-negative")
    return DenumerantTable(gens, limit, tuple(_count_table(gens.elements, limit)))


def denumerant_oracle(gens: GeneratorTuple, n: int) -> int:
    """Representation count by plain recursive enumeration.

    Structurally independent of the table recurrence (descends over
    generators, largest first, no shared state); intended for tests.
    """
    if n < 0:
        raise ValidationError("n must be non-negative")
    desc = sorted(gens.elements, reverse=True)
    last = len(desc) - 1

    def count(i: int, m: int) -> int:
        a = desc[i]
        if i == last:
            return 1 if m % a == 0 else 0
        total = 0
        for r in range(m, -1, -a):
            total += count(i + 1, r)
        return total

    return count(0, n)


def _member_run_start(counts: list[int], p: int, run: int) -> int | None:
    """First index of ``run`` consecutive entries with count > p, else None."""
    streak = 0
    for n, c in enumerate(counts):
        if c > p:
            streak += 1
            if streak == run:
                return n - run + 1
        else:
            streak = 0
    return None


def build_psemigroup(gens: GeneratorTuple, p: int) -> PSemigroup:
    """Membership table with a certified frontier for threshold ``p``.

    Grows the table geometrically from max(sum(gens), (p+1)*a1*a2) until a
    run of a1 = min(gens) consecutive members appears; the frontier is the
    index one past that run.
    """
    if p < 0:
        raise ValidationError("p must be non-negative")
    elements = gens.elements
    a1, a2 = elements[0], elements[1]
    max_entries = _table_cap()
    limit = max(sum(elements), (p + 1) * a1 * a2, 64)
    while True:
        limit = min(limit, max_entries - 1)
        counts = _count_table(elements, limit, cap=p + 1)
        run_start = _member_run_start(counts, p, a1)
        if run_start is not None:
            break
        if limit >= max_entries - 1:
            raise TableLimitError(
                f"membership table needs more than {max_entries} entries "
                f"(raise {TABLE_LIMIT_ENV} to allow it)"
            )
        limit *= 2
    frontier = run_start + a1
    membership = bytes(1 if counts[n] > p else 0 for n in range(frontier))
    least = membership.index(1)
    frobenius = -1
    for n in range(frontier - 1, -1, -1):
        if not membership[n]:
            frobenius = n
            break
    return PSemigroup(
        gens=gens,
        p=p,
        membership=membership,
        frontier=frontier,
        least_element=least,
        frobenius=frobenius,
    )


def gaps(semigroup: PSemigroup) -> list[int]:
    """Ascending non-members; length, sum and max are the basic invariants."""
    table = semigroup.membership
    return [n for n in range(semigroup.frontier) if not table[n]]


def minimal_generators(semigroup: PSemigroup) -> list[int]:
    """Minimal monoid generators of the members with 0 adjoined.

    A member is minimal iff it is not the sum of two positive members.  All
    minimal generators lie in [m, frobenius + m] for the least positive
    member m, and subtracting m from any of them must leave a non-member,
    which caps the candidate count at m.
    """
    mu = semigroup.least_element
    if mu == 0:
        mu = 1
        while not semigroup.contains(mu):
            mu += 1
    top = max(semigroup.frobenius + mu, mu)
    members = [n for n in range(mu, top + 1) if semigroup.contains(n)]
    out = []
    for m in members:
        if m > mu and semigroup.contains(m - mu):
            continue
        decomposable = False
        for s in members:
            if 2 * s > m:
                break
            if semigroup.contains(m - s):
                decomposable = True
                break
        if not decomposable:
            out.append(m)
    return out
