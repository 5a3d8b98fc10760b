"""
Ramification parameter tuple and its case tags.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional


class Closure(Enum):
    """Galois group type of the normal closure."""
    DIHEDRAL = 'dihedral'
    CYCLIC = 'cyclic'


class CaseTag(Enum):
    """Band of a totally ramified dihedral tuple."""
    MAXIMAL_A0 = 'maximal_a0'
    HIGH_BAND = 'high_band'
    LOW_BAND = 'low_band'


@dataclass(frozen=True)
class RamificationData:
    """
    Validated ramification data of a degree p extension.

    Built by ``algorithms.ramification.validate``; constructing it directly
    skips every check.

    Attributes:
        p: Odd prime degree
        e: Absolute ramification index of the base field
        t: Ramification jump
        closure: Dihedral or cyclic normal closure
        totally_ramified: Whether the normal closure is totally ramified
        ell: (p + t) / 2, only for totally ramified dihedral data
        a: Remainder of ell (dihedral, totally ramified) or t modulo p
        a0: Quotient matching ``a``
    """
    p: int
    e: int
    t: int
    closure: Closure
    totally_ramified: bool
    ell: Optional[int]
    a: int
    a0: int

    @property
    def is_dihedral_total(self) -> bool:
        return self.closure is Closure.DIHEDRAL and self.totally_ramified

    @property
    def is_maximal(self) -> bool:
        return self.a == 0

    @property
    def half(self) -> int:
        """(p - 1) / 2."""
        return (self.p - 1) // 2

    @property
    def numerator(self) -> int:
        """Numerator whose expansion over p decides the cf criterion."""
        return self.ell if self.ell is not None else self.t

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'p': self.p,
            'e': self.e,
            't': self.t,
            'closure': self.closure.value,
            'totally_ramified': self.totally_ramified,
            'a': self.a,
            'a0': self.a0,
        }
        if self.ell is not None:
            data['ell'] = self.ell
        return data

    def __repr__(self) -> str:
        kind = self.closure.value + ('' if self.totally_ramified else '/non-total')
        return f"RamificationData(p={self.p}, e={self.e}, t={self.t}, {kind})"
