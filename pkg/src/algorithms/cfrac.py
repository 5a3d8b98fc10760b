"""
Continued fractions of a/p, fractional parts and the running-minimum set E.
"""
import logging
import math
from fractions import Fraction
from typing import List, Tuple, Union

from sympy import isprime

from ..models.continued_fraction import ContinuedFraction, ESet
from ..utils.exceptions import DomainError, ParameterError

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


def check_odd_prime(p: int) -> None:
    """Raise ParameterError unless p is an odd prime."""
    if not isinstance(p, int) or p == 2 or not isprime(p):
        raise ParameterError(f"p must be an odd prime, got {p!r}")


def cf_expand(a: int, p: int) -> ContinuedFraction:
    """
    Canonical continued fraction of a/p.

    Euclid's algorithm never ends on a partial quotient 1 for n >= 1, so the
    expansion is already canonical.

    Args:
        a: Non-negative numerator
        p: Odd prime denominator

    Returns:
        ContinuedFraction with partials and convergents
    """
    check_odd_prime(p)
    if a < 0:
        raise ParameterError(f"numerator must be non-negative, got {a}")

    partials: List[int] = []
    num, den = a, p
    while den:
        quotient, remainder = divmod(num, den)
        partials.append(quotient)
        num, den = den, remainder

    cf = ContinuedFraction(a, p, tuple(partials), _convergents(partials))
    logger.debug("cf(%d/%d) = %s", a, p, cf)
    return cf


def _convergents(partials: List[int]) -> Tuple[Tuple[int, int], ...]:
    out = []
    p_prev, q_prev = 1, 0
    p_cur, q_cur = partials[0], 1
    out.append((p_cur, q_cur))
    for partial in partials[1:]:
        p_prev, p_cur = p_cur, partial * p_cur + p_prev
        q_prev, q_cur = q_cur, partial * q_cur + q_prev
        out.append((p_cur, q_cur))
    return tuple(out)


def convergents(cf: ContinuedFraction) -> List[Tuple[int, int]]:
    return list(cf.convergents)


def frac_part(x: Rational) -> Fraction:
    """x - floor(x), exactly."""
    x = Fraction(x)
    return x - math.floor(x)


def nearest_dist(x: Rational) -> Fraction:
    """
    Distance from x to the nearest integer.

    Half-integers have two nearest integers and are rejected.
    """
    f = frac_part(x)
    if f.denominator == 2:
        raise DomainError(f"{x} is a half-integer")
    return min(f, 1 - f)


def modular_distance(h: int, k: int, a: int, p: int) -> Fraction:
    """Circle distance between the points h*a/p and k*a/p."""
    return nearest_dist(Fraction((h - k) * a, p))


def _check_unit_numerator(a: int, p: int) -> None:
    check_odd_prime(p)
    if not 1 <= a < p:
        raise ParameterError(f"a must lie in [1, {p - 1}], got {a}")


def e_set_bruteforce(a: int, p: int) -> ESet:
    """Scan h = 1..p-1 keeping the strict running minima of frac(h*a/p)."""
    _check_unit_numerator(a, p)
    members = []
    best = p
    for h in range(1, p):
        residue = h * a % p
        if residue < best:
            best = residue
            members.append(h)
    return ESet(p, a, tuple(members))


def e_set_parametrized(a: int, p: int) -> ESet:
    """
    E from the convergent denominators.

    E = { a' q_{2i+1} + q_{2i} } over 0 <= i < (n-1)/2 and 0 <= a' < a_{2i+2},
    where a' may also reach a_{2i+2} when 2i+2 = n-1.
    """
    _check_unit_numerator(a, p)
    cf = cf_expand(a, p)
    n = cf.length
    if n == 1:
        return ESet(p, a, (1,))

    q = cf.q
    members = set()
    i = 0
    while 2 * i + 2 <= n:
        top = cf.partials[2 * i + 2]
        if 2 * i + 2 == n - 1:
            top += 1
        for a_prime in range(top):
            members.add(a_prime * q[2 * i + 1] + q[2 * i])
        i += 1
    return ESet(p, a, tuple(sorted(members)))


def convergent_violations(cf: ContinuedFraction) -> List[str]:
    """
    Check the best-approximation properties of the convergents of a/p.

    Returns a description of every failing instance; empty when all hold.
    """
    p, a, n = cf.denominator, cf.numerator, cf.length
    q = cf.q
    failures = []

    # p * ||m a/p||, kept integral for the inner scans
    def dist(multiplier: int) -> int:
        residue = multiplier * a % p
        return min(residue, p - residue)

    for i in range(n):
        if q[i + 1] != q[i] and not dist(q[i + 1]) < dist(q[i]):
            failures.append(f"||q_{i + 1} a/p|| < ||q_{i} a/p|| fails")
    for i in range(1, n + 1):
        floor_value = dist(q[i - 1])
        for multiplier in range(1, q[i]):
            if dist(multiplier) < floor_value:
                failures.append(f"||{multiplier} a/p|| below ||q_{i - 1} a/p||")
                break
    for i in range(1, n):
        f = frac_part(Fraction(q[i] * a, p))
        if (i % 2 == 0 and not f < Fraction(1, 2)) or (i % 2 == 1 and not f > Fraction(1, 2)):
            failures.append(f"frac(q_{i} a/p) = {f} on the wrong side of 1/2")
    if n >= 1 and nearest_dist(Fraction(q[n - 1] * a, p)) != Fraction(1, p):
        failures.append(f"||q_{n - 1} a/p|| != 1/p")
    return failures
