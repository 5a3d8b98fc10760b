"""
Freeness decisions for degree p extensions with dihedral or cyclic closure.
"""
import logging
from fractions import Fraction
from typing import Any, Dict, Optional

from ..models.ramification import CaseTag, Closure, RamificationData
from ..models.verdict import TensorComparison, Verdict, VerdictCase
from ..utils.exceptions import PreconditionViolated, StructureMismatch
from .assocorder import build_profile
from .cfrac import cf_expand
from .patterns import necessity_check, sufficiency_check
from .ramification import classify, existence_check, validate

logger = logging.getLogger(__name__)

MAX_FREE_LENGTH = 4


def _divisibility_verdict(rd: RamificationData, details: Dict[str, Any]) -> Verdict:
    free = (rd.p - 1) % rd.a == 0
    if free:
        return Verdict(True, VerdictCase.DIVIDES_PM1, 'a_divides_p_minus_1', details)
    return Verdict(False, VerdictCase.DIVIDES_PM1_CONVERSE, 'a_not_dividing_p_minus_1', details)


def _length_verdict(rd: RamificationData, cf_length: int, details: Dict[str, Any]) -> Verdict:
    # a | p-1 means a/p = [0; (p-1)/a, a], so the divisibility criterion never disagrees
    if (rd.p - 1) % rd.a == 0 and cf_length > 2:
        raise StructureMismatch(f"a | p-1 but the expansion has length {cf_length} for {rd!r}")
    free = cf_length <= MAX_FREE_LENGTH
    reason = 'cf_length_at_most_4' if free else 'cf_length_above_4'
    return Verdict(free, VerdictCase.CONTINUED_FRACTION_LEN, reason, details)


def _base_details(rd: RamificationData) -> Dict[str, Any]:
    cf = cf_expand(rd.numerator, rd.p)
    details = rd.to_dict()
    details.update(cf=list(cf.partials), cf_length=cf.length)
    return details


def _pattern_certificate(rd: RamificationData, cf_length: int) -> Optional[Dict[str, Any]]:
    if cf_length < 3:
        return None
    profile = build_profile(rd)
    if cf_length <= MAX_FREE_LENGTH:
        return sufficiency_check(profile).to_dict()
    return necessity_check(profile).to_dict()


def dihedral_verdict(rd: RamificationData, cross_check: bool = False) -> Verdict:
    """
    Decide freeness for totally ramified dihedral data.

    a = 0 gives the maximal order. Otherwise the band is read off
    nu_{p-1}: below e + (p-1)/2 freeness is a | p-1, on it freeness is
    a continued fraction of ell/p of length at most 4.

    Args:
        rd: Validated totally ramified dihedral data
        cross_check: Attach the pattern certificate in the high band

    Raises:
        PreconditionViolated: rd is not totally ramified dihedral
    """
    if not rd.is_dihedral_total:
        raise PreconditionViolated("dihedral_verdict needs totally ramified dihedral data")
    details = _base_details(rd)
    if rd.a == 0:
        return Verdict(True, VerdictCase.MAXIMAL_A0, 'maximal_order', details)

    band = classify(rd)
    details.update(band=band.value, nu_top=rd.a + (rd.p - 1) * rd.a0, top=rd.e + rd.half)
    if band is CaseTag.LOW_BAND:
        return _divisibility_verdict(rd, details)

    verdict = _length_verdict(rd, details['cf_length'], details)
    if cross_check:
        certificate = _pattern_certificate(rd, details['cf_length'])
        verdict = Verdict(verdict.free, verdict.case, verdict.reason, details, certificate)
    logger.debug("dihedral verdict %r: %s (%s)", rd, verdict.free, verdict.reason)
    return verdict


def _cyclic_from_data(rd: RamificationData) -> Verdict:
    details = _base_details(rd)
    if rd.a == 0:
        return Verdict(True, VerdictCase.MAXIMAL_A0, 'maximal_order', details)
    threshold = Fraction(rd.p * rd.e, rd.p - 1) - 1
    details['threshold'] = str(threshold)
    if rd.t >= threshold:
        return _length_verdict(rd, details['cf_length'], details)
    return _divisibility_verdict(rd, details)


def cyclic_verdict(p: int, e: int, t: int) -> Verdict:
    """
    Decide freeness for a totally ramified cyclic degree p extension.

    p | t gives the maximal order; t >= pe/(p-1) - 1 uses the length of
    the expansion of t/p; smaller t uses a | p-1 with a = t mod p.

    Raises:
        OutOfRange: t outside [1, pe/(p-1)]
    """
    return _cyclic_from_data(validate(p, e, t, Closure.CYCLIC, True))


def nontot_verdict(p: int, e: int, t: int) -> Verdict:
    """
    Dihedral data whose closure is not totally ramified.

    Freeness of the degree p extension matches freeness of its cyclic
    closure over the unramified quadratic field, which has the same e and t.
    """
    rd = validate(p, e, t, Closure.DIHEDRAL, False)
    inner = cyclic_verdict(p, e, t)
    details = dict(inner.details)
    details.update(rd.to_dict(), delegated_case=inner.case.value)
    return Verdict(inner.free, VerdictCase.NON_TOT_RAM_DELEGATED, inner.reason, details)


def verdict_for(rd: RamificationData, cross_check: bool = False) -> Verdict:
    """Dispatch on closure and ramification."""
    if rd.closure is Closure.CYCLIC:
        return _cyclic_from_data(rd)
    if not rd.totally_ramified:
        return nontot_verdict(rd.p, rd.e, rd.t)
    return dihedral_verdict(rd, cross_check)


def tensoring_comparison(p: int, e: int, t: int) -> TensorComparison:
    """
    Dihedral verdict for (p, e, t) next to the cyclic verdict of the
    closure over the ramified quadratic field M, where e_M = 2e.
    """
    dihedral = dihedral_verdict(validate(p, e, t, Closure.DIHEDRAL, True))
    e_m = 2 * e
    cyclic = cyclic_verdict(p, e_m, t)
    comparison = TensorComparison(dihedral, cyclic, e_m, existence_check(p, e_m, t, True))
    if comparison.diverges:
        logger.info("verdicts diverge at (p=%d, e=%d, t=%d)", p, e, t)
    return comparison
