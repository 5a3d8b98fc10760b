"""
Reduction method: bring a stacked action matrix to [D; 0] over the
p-local integers and read an associated-order basis off D^{-1}.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ, multiplicity
from sympy.polys.matrices import DomainMatrix

from ..models.action_matrix import (
    ActionMatrix,
    MaximalModel,
    ReducedPair,
    UnimodularCertificate,
)
from ..utils.exceptions import ParameterError, RankDeficient, StructureMismatch
from .cfrac import check_odd_prime

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]


def p_valuation(x: Fraction, p: int) -> float:
    """p-adic valuation of an exact rational; inf for zero."""
    x = Fraction(x)
    if x == 0:
        return float('inf')
    return int(multiplicity(p, abs(x.numerator))) - int(multiplicity(p, x.denominator))


def is_p_integral(x: Fraction, p: int) -> bool:
    return Fraction(x).denominator % p != 0


def _to_domain(rows: Sequence[Sequence[Fraction]]) -> DomainMatrix:
    n_rows, n_cols = len(rows), len(rows[0]) if rows else 0
    data = [[QQ(int(x.numerator), int(x.denominator)) for x in row] for row in rows]
    return DomainMatrix(data, (n_rows, n_cols), QQ)


def _fraction(x) -> Fraction:
    return Fraction(int(QQ.numer(x)), int(QQ.denom(x)))


def _from_domain(matrix: DomainMatrix) -> List[List[Fraction]]:
    return [[_fraction(x) for x in row] for row in matrix.to_dense().rep.to_ddm()]


def _matmul(left: Sequence[Sequence[Fraction]], right: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    product = _to_domain(left) * _to_domain(right)
    return _from_domain(product)


def _identity(size: int) -> List[List[Fraction]]:
    return [[Fraction(int(r == c)) for c in range(size)] for r in range(size)]


def reduce(M: ActionMatrix, p: int) -> ReducedPair:
    """
    Row-reduce the stacked matrix of ``M`` to [D; 0].

    If exactly n rows are non-zero they are moved to the top by row
    exchanges and form D. Otherwise column c takes as pivot the row >= c
    of smallest p-adic valuation (lowest index on ties) and clears the
    rows below with p-integral multiples.

    Raises:
        ParameterError: an entry has a denominator divisible by p
        RankDeficient: the stacked matrix has rank below n
        StructureMismatch: the unimodularity certificate fails
    """
    check_odd_prime(p)
    n = M.n
    rows = M.stacked
    for r, row in enumerate(rows):
        for x in row:
            if not is_p_integral(x, p):
                raise ParameterError(f"row {r} has entry {x} with p in the denominator")

    size = len(rows)
    U = _identity(size)
    nonzero = [r for r in range(size) if any(rows[r])]
    if len(nonzero) < n:
        raise RankDeficient(f"only {len(nonzero)} non-zero rows for n = {n}")

    eliminated = len(nonzero) > n
    if not eliminated:
        order = nonzero + [r for r in range(size) if r not in nonzero]
        rows = [rows[r] for r in order]
        U = [U[r] for r in order]
        if _to_domain(rows[:n]).det() == 0:
            raise RankDeficient("non-zero rows are linearly dependent")
    else:
        rows = [list(row) for row in rows]
        for c in range(n):
            candidates = [(p_valuation(rows[r][c], p), r) for r in range(c, size) if rows[r][c] != 0]
            if not candidates:
                raise RankDeficient(f"no pivot in column {c}")
            valuation, pivot = min(candidates)
            if pivot != c:
                rows[c], rows[pivot] = rows[pivot], rows[c]
                U[c], U[pivot] = U[pivot], U[c]
            logger.debug("column %d: pivot row %d (valuation %s)", c, pivot, valuation)
            for r in range(c + 1, size):
                if rows[r][c] == 0:
                    continue
                factor = rows[r][c] / rows[c][c]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[c])]
                U[r] = [x - factor * y for x, y in zip(U[r], U[c])]

    D = tuple(tuple(row) for row in rows[:n])
    certificate = certify(U, M, D, p)
    if not certificate.verified:
        raise StructureMismatch("reduction produced a non-unimodular transformation")
    return ReducedPair(D, certificate, M, p, eliminated)


def certify(U: Sequence[Sequence[Fraction]], M: ActionMatrix, D: Sequence[Sequence[Fraction]],
            p: int) -> UnimodularCertificate:
    """Check det(U) is a p-local unit, U is p-integral and U*M = [D; 0]."""
    U_dm = _to_domain(U)
    det_u = _fraction(U_dm.det())
    integral = all(is_p_integral(x, p) for row in U for x in row)
    n = M.n
    expected = [list(row) for row in D] + [[Fraction(0)] * n for _ in range(len(U) - n)]
    return UnimodularCertificate(
        u_matrix=tuple(tuple(row) for row in U),
        det_u=det_u,
        det_valuation=int(p_valuation(det_u, p)) if det_u != 0 else -1,
        integral=integral,
        product_matches=U_dm * _to_domain(M.stacked) == _to_domain(expected),
    )


def inverse(rows: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    return _from_domain(_to_domain(rows).inv())


def action_of(M: ActionMatrix, coeffs: Sequence[Fraction]) -> List[List[Fraction]]:
    """
    Matrix of v = sum_l coeffs[l] w_l acting on the field basis.

    Column j holds the coordinates of v acting on gamma_j.
    """
    n = M.n
    out = [[Fraction(0)] * n for _ in range(n)]
    for j, block in enumerate(M.blocks):
        for k in range(n):
            out[k][j] = sum((block[k][i] * coeffs[i] for i in range(n)), Fraction(0))
    return out


def basis_from_reduced(rp: ReducedPair) -> List[Vector]:
    """
    Columns of D^{-1}: coordinates of an O_K-basis of the associated order.

    Raises:
        StructureMismatch: if some basis element acts non-integrally
    """
    D_inv = inverse(rp.D)
    n = rp.n
    basis = [tuple(D_inv[r][i] for r in range(n)) for i in range(n)]
    for i, v in enumerate(basis):
        action = action_of(rp.source, v)
        for row in action:
            for x in row:
                if not is_p_integral(x, rp.p):
                    raise StructureMismatch(f"basis element {i} acts with denominator divisible by p")
    return basis


def delta_action_violations(mm: MaximalModel, basis: Sequence[Vector]) -> List[Tuple[int, int]]:
    """Pairs (i, j) where v_i acting on alpha^j is not delta_ij alpha^j."""
    M = mm.action_matrix()
    failures = []
    for i, v in enumerate(basis):
        action = action_of(M, v)
        for j in range(mm.p):
            expected = [Fraction(int(k == j and i == j)) for k in range(mm.p)]
            if [action[k][j] for k in range(mm.p)] != expected:
                failures.append((i, j))
    return failures


def idempotent_check(mm: MaximalModel, basis: Optional[Sequence[Vector]] = None) -> bool:
    """
    Whether the reduced basis acts as a complete set of orthogonal idempotents:
    (v_i v_j) alpha^k = delta_ik delta_jk alpha^k and sum_i v_i = 1.
    """
    M = mm.action_matrix()
    if basis is None:
        basis = basis_from_reduced(reduce(M, mm.p))
    p = mm.p
    actions = [_to_domain(action_of(M, v)) for v in basis]
    zero = _to_domain([[Fraction(0)] * p for _ in range(p)])
    units = [_to_domain([[Fraction(int(r == c == i)) for c in range(p)] for r in range(p)]) for i in range(p)]
    for i in range(p):
        for j in range(p):
            if actions[i] * actions[j] != (units[i] if i == j else zero):
                return False
    total = zero
    for action in actions:
        total = total + action
    return total == _to_domain(_identity(p))


def lattice_equivalent(first: Sequence[Vector], second: Sequence[Vector], p: int) -> bool:
    """Whether two bases span the same p-local lattice."""
    A = [list(row) for row in zip(*first)]
    B = [list(row) for row in zip(*second)]
    forward = _matmul(inverse(A), B)
    backward = _matmul(inverse(B), A)
    return all(is_p_integral(x, p) for row in forward + backward for x in row)


def random_maximal_model(p: int, rng: np.random.Generator) -> MaximalModel:
    """Eigenvalues 0, then a shuffled set of unit residues shifted by random multiples of p."""
    check_odd_prime(p)
    residues = rng.permutation(np.arange(1, p))
    shifts = rng.integers(-2, 3, size=p - 1)
    lambdas = (0,) + tuple(int(r + p * s) for r, s in zip(residues, shifts))
    return MaximalModel(p, lambdas)


def random_unimodular(size: int, rng: np.random.Generator, spread: int = 3) -> List[List[Fraction]]:
    """Product of a unit lower and a unit upper triangular integer matrix (determinant 1)."""
    lower = np.tril(rng.integers(-spread, spread + 1, size=(size, size)), -1) + np.eye(size, dtype=int)
    upper = np.triu(rng.integers(-spread, spread + 1, size=(size, size)), 1) + np.eye(size, dtype=int)
    product = lower.astype(object).dot(upper.astype(object))
    return [[Fraction(int(x)) for x in row] for row in product]


def transformed(M: ActionMatrix, R: Sequence[Sequence[Fraction]]) -> ActionMatrix:
    """R * stacked(M), re-read as an action matrix."""
    return ActionMatrix.from_stacked(_matmul(R, M.stacked), M.n)
