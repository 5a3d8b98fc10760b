"""
Identities in Z[sigma]/(sigma^p - 1) behind the expansion of w^p.

With s = sigma - sigma^{-1} and w = z*s, the relation
sum_{j=0}^{(p-1)/2} c_j s^{p-2j} = 0 expresses w^p through lower odd
powers of w; repeated multiplication by w then gives every w^{p-1+m}.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple, Union

from sympy import Matrix, binomial, eye, multiplicity

from ..models.group_ring import GroupRingElement, ValCoeff
from ..utils.exceptions import ParameterError, StructureMismatch
from .cfrac import check_odd_prime

logger = logging.getLogger(__name__)

WPowerTable = Dict[int, Tuple[ValCoeff, ...]]


def _comb(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return int(binomial(n, k))


def gr_arith(x: GroupRingElement, y: Union[GroupRingElement, int], op: str) -> GroupRingElement:
    """Apply ``op`` in {'add', 'mul', 'pow'}; for 'pow' y is the exponent."""
    if op == 'add':
        return x + y
    if op == 'mul':
        return x * y
    if op == 'pow':
        if not isinstance(y, int):
            raise ParameterError("pow needs an integer exponent")
        return x ** y
    raise ParameterError(f"unknown group ring operation {op!r}")


def c_coeffs(p: int) -> List[int]:
    """
    c_1..c_{(p-1)/2} with c_j = (p/j) C(p-j-1, j-1) = C(p-j, j) + C(p-j-1, j-1).

    Raises:
        StructureMismatch: if the two forms differ or v_p(c_j) != 1
    """
    check_odd_prime(p)
    coeffs = []
    for j in range(1, (p - 1) // 2 + 1):
        quotient_form = Fraction(p, j) * _comb(p - j - 1, j - 1)
        sum_form = _comb(p - j, j) + _comb(p - j - 1, j - 1)
        if quotient_form != sum_form:
            raise StructureMismatch(f"c_{j} forms differ at p={p}: {quotient_form} vs {sum_form}")
        if multiplicity(p, sum_form) != 1:
            raise StructureMismatch(f"v_p(c_{j}) != 1 at p={p}")
        coeffs.append(sum_form)
    return coeffs


def wp_relation(p: int) -> GroupRingElement:
    """sum_{j=0}^{(p-1)/2} c_j s^{p-2j} with c_0 = 1, evaluated exactly."""
    s = GroupRingElement.antisymmetric(p)
    total = s ** p
    for j, c in enumerate(c_coeffs(p), start=1):
        total = total + c * (s ** (p - 2 * j))
    return total


def verify_wp_identity(p: int) -> bool:
    """Whether the w^p relation vanishes identically in the group ring."""
    check_odd_prime(p)
    return wp_relation(p).is_zero()


@dataclass(frozen=True)
class ABMatrices:
    """
    Change of basis between odd powers of s and the elements
    T_j = sigma^{2j+1} - sigma^{-(2j+1)}, j = 0..(p-1)/2.

    s^{2i+1} = sum_j a[i, j] T_j and T_j = sum_k b[j, k] s^{2k+1}.
    """
    p: int
    a: Matrix
    b: Matrix

    @property
    def size(self) -> int:
        return self.a.shape[0]


def ab_matrices(p: int) -> ABMatrices:
    """
    Build a from its closed form and b by forward substitution.

    Raises:
        StructureMismatch: if a*b != 1, the expansions fail in the group
            ring, or the last row of b is not (c_{(p-1)/2}, ..., c_1, 1)
    """
    check_odd_prime(p)
    size = (p - 1) // 2 + 1
    a = Matrix(size, size, lambda i, j: (-1) ** (i - j) * _comb(2 * i + 1, i - j) if j <= i else 0)

    # T_i = s^{2i+1} - sum_{j<i} a_ij T_j, expanded in powers of s
    b = Matrix.zeros(size, size)
    for i in range(size):
        b[i, i] = 1
        for j in range(i):
            if a[i, j]:
                for k in range(j + 1):
                    b[i, k] -= a[i, j] * b[j, k]

    if a * b != eye(size):
        raise StructureMismatch(f"sum_j a_ij b_jk != delta_ik at p={p}")

    s = GroupRingElement.antisymmetric(p)
    odd_powers = [s ** (2 * k + 1) for k in range(size)]
    targets = [GroupRingElement.antisymmetric(p, 2 * j + 1) for j in range(size)]
    for j in range(size):
        expansion = GroupRingElement.zero(p)
        for k in range(j + 1):
            expansion = expansion + int(b[j, k]) * odd_powers[k]
        if expansion != targets[j]:
            raise StructureMismatch(f"T_{j} != sum_k b_jk s^(2k+1) at p={p}")
        back = GroupRingElement.zero(p)
        for k in range(j + 1):
            back = back + int(a[j, k]) * targets[k]
        if back != odd_powers[j]:
            raise StructureMismatch(f"s^({2 * j + 1}) != sum_k a_jk T_k at p={p}")

    c = [1] + c_coeffs(p)
    last = size - 1
    if [int(b[last, k]) for k in range(size)] != [c[last - k] for k in range(size)]:
        raise StructureMismatch(f"last row of b does not match c at p={p}")

    logger.debug("ab matrices verified at p=%d", p)
    return ABMatrices(p, a, b)


def b_closed_form(j: int, k: int) -> int:
    """C(j+k+1, 2k+1) + C(j+k, 2k+1)."""
    return _comb(j + k + 1, 2 * k + 1) + _comb(j + k, 2 * k + 1)


def wpower_val_table(p: int, e: int) -> WPowerTable:
    """
    Valuations of the coefficients of w^{p-1+m} on w^0..w^{p-1}, m = 1..p-1.

    The base case is w^p = -sum_j c_j z^{2j} w^{p-2j}, whose coefficient of
    w^{p-2j} has exact valuation e + j (v_K(p) = e, v_K(z^2) = 1). Each
    further power multiplies by w and folds w^p back through the base case.
    """
    check_odd_prime(p)
    if e < 1:
        raise ParameterError(f"e must be at least 1, got {e}")
    half = (p - 1) // 2
    base = [ValCoeff.zero()] * p
    for j in range(1, half + 1):
        base[p - 2 * j] = ValCoeff(e + j, True)

    table: WPowerTable = {1: tuple(base)}
    current = base
    for m in range(2, p):
        shifted = [ValCoeff.zero()] * p
        for power in range(1, p - 1):
            shifted[power + 1] = current[power]
        overflow = current[p - 1]
        if not overflow.is_zero:
            shifted = [s + overflow * b for s, b in zip(shifted, base)]
        current = shifted
        table[m] = tuple(current)
    return table


def staircase_violations(table: WPowerTable, p: int, e: int) -> List[str]:
    """
    Compare the table with the closed description of w^{p-1+m}.

    Odd m = 2m'-1: w^{p-2j} has exact valuation e+m'+j-1 for
    1 <= j <= (p-m)/2. Even m = 2m': the same valuations sit on w^{p+1-2j}
    for 1 <= j <= (p-m+1)/2. Below w^m, the coefficient of w^{m-2i} has
    valuation at least 2e + (p-1)/2 + i. Powers of the wrong parity vanish.
    """
    half = (p - 1) // 2
    failures = []
    for m, coeffs in table.items():
        m_prime = (m + 1) // 2
        offset = 0 if m % 2 == 1 else 1
        for j in range(1, (p - m + offset) // 2 + 1):
            power = p - 2 * j + offset
            expected = ValCoeff(e + m_prime + j - 1, True)
            if coeffs[power] != expected:
                failures.append(f"m={m}: coefficient of w^{power} is {coeffs[power]}, expected {expected}")
        for i in range(1, (m - 1) // 2 + 1 if m % 2 else m // 2):
            power = m - 2 * i
            if power < 1:
                break
            bound = 2 * e + half + i
            if not coeffs[power].is_zero and coeffs[power].val < bound:
                failures.append(f"m={m}: coefficient of w^{power} below {bound}")
        for power in range(p):
            if (power - m) % 2 != 0 or power == 0:
                if not coeffs[power].is_zero:
                    failures.append(f"m={m}: w^{power} should not appear")
    return failures
