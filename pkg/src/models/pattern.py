"""
Residue patterns of action matrices modulo the maximal ideal.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Tuple

import numpy as np


class EntryClass(Enum):
    """Residue class of one matrix coefficient."""
    ZERO = 0
    ONE = 1          # non-zero with known residue 1
    NONZERO = 2
    UNKNOWN = 3

    @property
    def is_nonzero(self) -> bool:
        return self in (EntryClass.ONE, EntryClass.NONZERO)

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]


_SYMBOLS = {
    EntryClass.ZERO: '0',
    EntryClass.ONE: '1',
    EntryClass.NONZERO: '*',
    EntryClass.UNKNOWN: '?',
}


@dataclass
class ResiduePatternMatrix:
    """
    p x p grid of residue classes, rows j and columns i.

    Cells listed in ``u_mask`` carry the symbolic unit u (possibly plus
    another term, in which case their class is UNKNOWN).
    """
    p: int
    grid: np.ndarray
    u_mask: FrozenSet[Tuple[int, int]] = frozenset()
    provenance: str = ''

    @classmethod
    def zeros(cls, p: int, provenance: str = '') -> 'ResiduePatternMatrix':
        return cls(p, np.zeros((p, p), dtype=np.int8), frozenset(), provenance)

    def cell(self, j: int, i: int) -> EntryClass:
        return EntryClass(int(self.grid[j, i]))

    def set_cell(self, j: int, i: int, value: EntryClass) -> None:
        self.grid[j, i] = value.value

    def is_u(self, j: int, i: int) -> bool:
        return (j, i) in self.u_mask

    def support(self, i: int) -> List[int]:
        """Rows of column i whose class is not ZERO."""
        return [int(j) for j in np.flatnonzero(self.grid[:, i])]

    def render(self) -> str:
        lines = []
        for j in range(self.p):
            cells = []
            for i in range(self.p):
                if self.is_u(j, i):
                    cells.append('u' if self.cell(j, i) is not EntryClass.UNKNOWN else 'U')
                else:
                    cells.append(self.cell(j, i).symbol)
            lines.append(' '.join(cells))
        return '\n'.join(lines)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'p': self.p,
            'provenance': self.provenance,
            'rows': self.render().splitlines(),
            'u_cells': sorted(list(cell) for cell in self.u_mask),
        }


@dataclass(frozen=True)
class SufficiencyWitness:
    """
    Pattern-level proof that u + pi^{-nu_k} w^k generates for a suitable u.

    Attributes:
        k: q_2 - 1
        matching: Row matched to each column 1..p-1 by the unique u-free term
        poly_degree_bound: Number of u cells in the minor, bounding deg P
        u_cells: Diagonal cells carrying u in the minor
    """
    k: int
    matching: Tuple[int, ...]
    poly_degree_bound: int
    u_cells: Tuple[int, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            'kind': 'sufficiency',
            'k': self.k,
            'matching': {str(i + 1): j for i, j in enumerate(self.matching)},
            'poly_degree_bound': self.poly_degree_bound,
            'u_cells': list(self.u_cells),
        }


@dataclass(frozen=True)
class NecessityCertificate:
    """
    Pattern-level proof that every det(M(alpha)) vanishes modulo the maximal ideal.

    The selected columns are supported on fewer rows than there are columns.
    """
    s: int
    h_values: Tuple[int, ...]
    columns: Tuple[int, ...]
    allowed_rows: Tuple[int, ...]
    cells_checked: int = 0
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def cover_deficit(self) -> int:
        return len(self.columns) - len(self.allowed_rows)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'kind': 'necessity',
            's': self.s,
            'h_values': list(self.h_values),
            'columns': list(self.columns),
            'allowed_rows': list(self.allowed_rows),
            'cover_deficit': self.cover_deficit,
            'cells_checked': self.cells_checked,
        }
