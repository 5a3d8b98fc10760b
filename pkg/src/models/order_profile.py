"""
Valuation profile of the associated order.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .continued_fraction import ESet
from .ramification import RamificationData


@dataclass(frozen=True)
class RingConditionReport:
    """Outcome of the two closure conditions on the nu sequence."""
    cond1: bool
    cond2: bool
    violations: Tuple[Tuple[int, int], ...] = ()

    @property
    def is_ring(self) -> bool:
        return self.cond1 and self.cond2

    def to_dict(self) -> Dict[str, Any]:
        return {
            'cond1': self.cond1,
            'cond2': self.cond2,
            'violations': [list(pair) for pair in self.violations],
        }


@dataclass(frozen=True)
class OrderProfile:
    """
    Exponent data of the bases {pi^-nu_i w^i} and {pi^-n_i w^i}.

    Attributes:
        rd: Ramification data the profile was computed from
        nu: nu_0..nu_{p-1}
        n: n_0..n_{p-1}
        E: Running-minimum set of a/p
        d_max_table: m -> d_m for 1 <= m <= p-1
        scaffold_c: Scaffold precision (totally ramified dihedral only)
        scaffold_l: l with scaffold_c = l*p + a
    """
    rd: RamificationData
    nu: Tuple[int, ...]
    n: Tuple[int, ...]
    E: ESet
    d_max_table: Dict[int, int] = field(default_factory=dict)
    scaffold_c: Optional[int] = None
    scaffold_l: Optional[int] = None

    @property
    def p(self) -> int:
        return self.rd.p

    @property
    def a(self) -> int:
        return self.rd.a

    @property
    def top(self) -> int:
        """e + (p - 1) / 2, the ceiling for nu_{p-1}."""
        return self.rd.e + self.rd.half

    @property
    def high_band(self) -> bool:
        return self.rd.is_dihedral_total and self.nu[-1] == self.top

    def d_max(self, m: int) -> int:
        return self.d_max_table.get(m, 0)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'nu': list(self.nu),
            'n': list(self.n),
            'E': self.E.to_list(),
            'd_max': {str(m): d for m, d in sorted(self.d_max_table.items())},
        }
        if self.scaffold_c is not None:
            data['scaffold_c'] = self.scaffold_c
            data['scaffold_l'] = self.scaffold_l
        return data

    def gaps(self) -> List[int]:
        """nu_i - n_i for every i."""
        return [v - w for v, w in zip(self.nu, self.n)]
