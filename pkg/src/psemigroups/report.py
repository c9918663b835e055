"""Aggregated invariant report backing the command-line surface.

The report always cross-checks the Apery-formula invariants against the
gap-derived ones (they are cheap and provably equal); ``verify=True`` adds
the heavier re-derivations: brute-force power sums, three-way
pseudo-Frobenius agreement, the Hilbert factorization identity, and the
matching closed forms when the generator tuple has one.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import GeneratorTuple, InternalConsistencyError, PSemigroup
from .enumeration import build_psemigroup, gaps, minimal_generators
from .apery import (
    AperySet,
    apery_set,
    frobenius_from_apery,
    genus_from_apery,
    power_sum,
    sylvester_sum_from_apery,
)
from .symmetry import (
    ClassificationReport,
    classify,
    pf_via_apery_maximals,
    pf_via_gap_maximals,
    pseudo_frobenius,
)
from .hilbert import gaps_series, hilbert_direct, hilbert_from_apery
from .closed_forms import arith_invariants, two_var_invariants


@dataclass(frozen=True)
class InvariantReport:
    gens: GeneratorTuple
    p: int
    least_element: int
    frobenius: int
    genus: int
    sylvester_sum: int
    power_sums: tuple[tuple[int, int], ...]
    apery: AperySet
    classification: ClassificationReport
    embedding_dimension: int


def _mismatch(what: str, formula, enumerated, semigroup: PSemigroup) -> None:
    raise InternalConsistencyError(
        f"{what}: formula value {formula} != enumerated {enumerated} "
        f"for gens={semigroup.gens.elements} p={semigroup.p}"
    )


def _verify_extras(semigroup: PSemigroup, report: InvariantReport, gap_list: list[int]) -> None:
    for mu, value in report.power_sums:
        brute = sum(n**mu for n in gap_list)
        if value != brute:
            _mismatch(f"power sum mu={mu}", value, brute, semigroup)
    pf = list(report.classification.pseudo_frobenius_numbers)
    via_definition = pseudo_frobenius(semigroup)
    via_gaps = pf_via_gap_maximals(semigroup)
    via_apery = pf_via_apery_maximals(semigroup)
    if not (pf == via_definition == via_gaps == via_apery):
        _mismatch(
            "pseudo-Frobenius sets",
            pf,
            (via_definition, via_gaps, via_apery),
            semigroup,
        )
    trunc = 2 * (semigroup.frobenius + 1) + semigroup.gens.least
    direct = hilbert_direct(semigroup, trunc)
    if hilbert_from_apery(report.apery, trunc) != direct:
        _mismatch("Hilbert factorization", "apery series", "direct series", semigroup)
    psi = gaps_series(semigroup, trunc)
    if any(
        direct.coefficients[n] + psi.coefficients[n] != 1 for n in range(trunc + 1)
    ):
        _mismatch("series partition", "H + Psi", "all-ones", semigroup)
    elements = semigroup.gens.elements
    if len(elements) == 2:
        a, b = elements
        if a >= 2 and gcd(a, b) == 1:
            closed = two_var_invariants(a, b, semigroup.p)
            got = (report.frobenius, report.genus, report.sylvester_sum)
            if closed != got:
                _mismatch("two-generator closed forms", closed, got, semigroup)
    if len(elements) == 3:
        a = elements[0]
        d = elements[1] - a
        if (
            d >= 1
            and elements[2] - elements[1] == d
            and a >= 3
            and gcd(a, d) == 1
            and semigroup.p <= a // 2
        ):
            frob, genus, least = arith_invariants(a, d, semigroup.p)
            got = (report.frobenius, report.genus, report.least_element)
            if (frob, genus, least) != got:
                _mismatch("arithmetic-triple closed forms", (frob, genus, least), got, semigroup)


def build_invariant_report(
    gens: GeneratorTuple, p: int, mu_max: int = 3, verify: bool = False
) -> InvariantReport:
    semigroup = build_psemigroup(gens, p)
    ap = apery_set(semigroup)
    gap_list = gaps(semigroup)
    frob = frobenius_from_apery(ap)
    genus = genus_from_apery(ap)
    sylvester = sylvester_sum_from_apery(ap)
    enum_frob = gap_list[-1] if gap_list else -1
    if frob != semigroup.frobenius or frob != enum_frob:
        _mismatch("frobenius", frob, enum_frob, semigroup)
    if genus != len(gap_list):
        _mismatch("genus", genus, len(gap_list), semigroup)
    if sylvester != sum(gap_list):
        _mismatch("sylvester sum", sylvester, sum(gap_list), semigroup)
    power_sums = tuple((mu, power_sum(semigroup, mu)) for mu in range(1, mu_max + 1))
    report = InvariantReport(
        gens=gens,
        p=p,
        least_element=semigroup.least_element,
        frobenius=frob,
        genus=genus,
        sylvester_sum=sylvester,
        power_sums=power_sums,
        apery=ap,
        classification=classify(semigroup),
        embedding_dimension=len(minimal_generators(semigroup)),
    )
    if verify:
        _verify_extras(semigroup, report, gap_list)
    return report
