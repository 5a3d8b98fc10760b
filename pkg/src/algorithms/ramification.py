"""
Validation and classification of ramification data.
"""
import logging
from fractions import Fraction
from typing import List

from ..models.ramification import CaseTag, Closure, RamificationData
from ..utils.exceptions import (
    DivisibilityViolation,
    NotApplicable,
    OutOfRange,
    ParameterError,
    ParityViolation,
)
from .assocorder import nu_sequence
from .cfrac import check_odd_prime

logger = logging.getLogger(__name__)


def jump_bound(p: int, e: int, closure: Closure, totally_ramified: bool) -> Fraction:
    """Largest admissible jump: 2pe/(p-1) for totally ramified dihedral, pe/(p-1) otherwise."""
    scale = 2 if closure is Closure.DIHEDRAL and totally_ramified else 1
    return Fraction(scale * p * e, p - 1)


def validate(p: int, e: int, t: int, closure: Closure = Closure.DIHEDRAL,
             totally_ramified: bool = True) -> RamificationData:
    """
    Check a raw parameter tuple and derive ell, a and a0.

    Args:
        p: Odd prime degree
        e: Absolute ramification index, at least 1
        t: Ramification jump
        closure: Dihedral or cyclic normal closure
        totally_ramified: Whether the normal closure is totally ramified

    Returns:
        Validated RamificationData

    Raises:
        ParameterError: p not an odd prime, e < 1, or a non-totally-ramified cyclic closure
        OutOfRange: t outside [1, bound]
        ParityViolation: even t for a totally ramified dihedral closure
        DivisibilityViolation: p | t while t is not the bound
    """
    check_odd_prime(p)
    closure = Closure(closure)
    if e < 1:
        raise ParameterError(f"e must be at least 1, got {e}")
    if closure is Closure.CYCLIC and not totally_ramified:
        raise ParameterError("cyclic degree p closures are handled only when totally ramified")

    bound = jump_bound(p, e, closure, totally_ramified)
    if not 1 <= t <= bound:
        raise OutOfRange(f"t = {t} outside [1, {bound}] for p={p}, e={e}")

    dihedral_total = closure is Closure.DIHEDRAL and totally_ramified
    if dihedral_total and t % 2 == 0:
        raise ParityViolation(f"t = {t} must be odd for a totally ramified dihedral closure")
    if t % p == 0 and t != bound:
        raise DivisibilityViolation(f"p = {p} divides t = {t} but t is not maximal ({bound})")

    if dihedral_total:
        ell = (p + t) // 2
        a0, a = divmod(ell, p)
    else:
        ell = None
        a0, a = divmod(t, p)

    rd = RamificationData(p, e, t, closure, totally_ramified, ell, a, a0)
    logger.debug("validated %r: ell=%s a=%d a0=%d", rd, ell, a, a0)
    return rd


def classify(rd: RamificationData) -> CaseTag:
    """Band of a totally ramified dihedral tuple, decided by nu_{p-1} = e + (p-1)/2."""
    if not rd.is_dihedral_total:
        raise NotApplicable("case tags exist only for totally ramified dihedral data")
    if rd.a == 0:
        return CaseTag.MAXIMAL_A0

    nu_top = nu_sequence(rd)[-1]
    return CaseTag.HIGH_BAND if nu_top == rd.e + rd.half else CaseTag.LOW_BAND


def existence_check(p: int, e0: int, t: int, m_ramified: bool) -> bool:
    """
    Whether a cyclic degree p extension of M with jump t exists.

    Args:
        p: Odd prime
        e0: Absolute ramification index of M
        t: Requested jump
        m_ramified: Whether M/K is ramified (forces odd jumps)
    """
    check_odd_prime(p)
    if e0 < 1:
        raise ParameterError(f"e0 must be at least 1, got {e0}")
    bound = Fraction(p * e0, p - 1)
    if t == bound:
        return True
    if not 1 <= t < bound or t % p == 0:
        return False
    return t % 2 == 1 or not m_ramified


def valid_jumps(p: int, e: int, closure: Closure = Closure.DIHEDRAL,
                totally_ramified: bool = True) -> List[int]:
    """Every t accepted by ``validate`` for this (p, e), ascending."""
    bound = jump_bound(p, e, Closure(closure), totally_ramified)
    dihedral_total = Closure(closure) is Closure.DIHEDRAL and totally_ramified
    jumps = []
    for t in range(1, int(bound) + 1):
        if dihedral_total and t % 2 == 0:
            continue
        if t % p == 0 and t != bound:
            continue
        jumps.append(t)
    return jumps


def synthesize(p: int, a: int, a0: int) -> RamificationData:
    """
    Smallest-e totally ramified dihedral tuple with the given (a, a0).

    Raises:
        OutOfRange: when t = (2a0 - 1)p + 2a is below 1
    """
    t = (2 * a0 - 1) * p + 2 * a
    if t < 1:
        raise OutOfRange(f"(a={a}, a0={a0}) gives t = {t} < 1 at p = {p}")
    e = max(1, -(-t * (p - 1) // (2 * p)))
    return validate(p, e, t, Closure.DIHEDRAL, True)


def synthesize_high_band(p: int, a: int, a0: int) -> RamificationData:
    """Tuple with (a, a0) and nu_{p-1} = e + (p-1)/2."""
    e = a + (p - 1) * a0 - (p - 1) // 2
    if e < 1:
        raise OutOfRange(f"(a={a}, a0={a0}) has no high-band e at p = {p}")
    t = (2 * a0 - 1) * p + 2 * a
    return validate(p, e, t, Closure.DIHEDRAL, True)
