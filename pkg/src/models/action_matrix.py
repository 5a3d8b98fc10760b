"""
Matrices of the reduction method and the maximal-case eigenvalue model.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..utils.exceptions import ParameterError

Row = Tuple[Fraction, ...]
Block = Tuple[Row, ...]


def _as_rows(rows: Sequence[Sequence[Any]]) -> Tuple[Row, ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


@dataclass(frozen=True)
class ActionMatrix:
    """
    Action of a Hopf algebra basis w_1..w_n on a field basis gamma_1..gamma_n.

    Block j holds, at (k, i), the coordinate on gamma_k of w_i acting on
    gamma_j. The stacked form puts block j at rows j*n .. j*n + n - 1.
    """
    n: int
    blocks: Tuple[Block, ...]

    def __post_init__(self):
        if len(self.blocks) != self.n:
            raise ParameterError(f"expected {self.n} blocks, got {len(self.blocks)}")
        for block in self.blocks:
            if len(block) != self.n or any(len(row) != self.n for row in block):
                raise ParameterError("every block must be n x n")

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[Sequence[Any]]]) -> 'ActionMatrix':
        converted = tuple(_as_rows(block) for block in blocks)
        return cls(len(converted), converted)

    @classmethod
    def from_stacked(cls, rows: Sequence[Sequence[Any]], n: int) -> 'ActionMatrix':
        if len(rows) != n * n:
            raise ParameterError(f"stacked matrix needs {n * n} rows, got {len(rows)}")
        converted = _as_rows(rows)
        return cls(n, tuple(converted[j * n:(j + 1) * n] for j in range(n)))

    @property
    def stacked(self) -> List[List[Fraction]]:
        return [list(row) for block in self.blocks for row in block]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'blocks': [[[str(x) for x in row] for row in block] for block in self.blocks],
        }


@dataclass(frozen=True)
class UnimodularCertificate:
    """
    Evidence that U is invertible over the p-local integers and U*M = [D; 0].

    Attributes:
        u_matrix: The transformation U itself
        det_u: Exact determinant of U
        det_valuation: p-adic valuation of det_u (0 when unimodular)
        integral: Whether every entry of U is p-integral
        product_matches: Whether U*M equals [D; 0] entrywise
    """
    u_matrix: Tuple[Row, ...]
    det_u: Fraction
    det_valuation: int
    integral: bool
    product_matches: bool

    @property
    def verified(self) -> bool:
        return self.det_valuation == 0 and self.integral and self.product_matches


@dataclass(frozen=True)
class ReducedPair:
    """Reduced matrix D together with its certificate and source matrix."""
    D: Tuple[Row, ...]
    certificate: UnimodularCertificate
    source: ActionMatrix
    p: int
    eliminated: bool = False

    @property
    def n(self) -> int:
        return len(self.D)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'p': self.p,
            'D': [[str(x) for x in row] for row in self.D],
            'det_u': str(self.certificate.det_u),
            'certificate_verified': self.certificate.verified,
            'eliminated': self.eliminated,
        }


@dataclass(frozen=True)
class MaximalModel:
    """
    Synthetic eigenvalue model of the maximally ramified case.

    w^i acts on the eigenvector alpha^j as multiplication by lambda_j^i,
    with lambda_0 = 0 and lambda_1..lambda_{p-1} distinct non-zero
    residues modulo p.
    """
    p: int
    lambdas: Tuple[int, ...]

    def __post_init__(self):
        if len(self.lambdas) != self.p:
            raise ParameterError(f"need {self.p} eigenvalues, got {len(self.lambdas)}")
        if self.lambdas[0] != 0:
            raise ParameterError("lambda_0 must be 0")
        residues = [lam % self.p for lam in self.lambdas[1:]]
        if 0 in residues:
            raise ParameterError("lambda_1..lambda_{p-1} must be units modulo p")
        if len(set(residues)) != len(residues):
            raise ParameterError("lambda_1..lambda_{p-1} must be distinct modulo p")

    @property
    def vandermonde(self) -> Tuple[Row, ...]:
        """Lambda with row j equal to (lambda_j^0, ..., lambda_j^{p-1}); 0^0 = 1."""
        return tuple(
            tuple(Fraction(lam) ** i for i in range(self.p)) for lam in self.lambdas
        )

    def action_matrix(self) -> ActionMatrix:
        p = self.p
        blocks = []
        for j, row in enumerate(self.vandermonde):
            block = [[Fraction(0)] * p for _ in range(p)]
            block[j] = list(row)
            blocks.append(block)
        return ActionMatrix.from_blocks(blocks)

    def to_dict(self) -> Dict[str, Any]:
        return {'p': self.p, 'lambdas': list(self.lambdas)}


def rows_to_strings(rows: Optional[Sequence[Sequence[Fraction]]]) -> List[List[str]]:
    if rows is None:
        return []
    return [[str(x) for x in row] for row in rows]
