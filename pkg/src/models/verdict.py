"""
Freeness verdicts.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional


class VerdictCase(Enum):
    MAXIMAL_A0 = 'maximal_a0'
    DIVIDES_PM1 = 'divides_pm1'
    DIVIDES_PM1_CONVERSE = 'divides_pm1_converse'
    CONTINUED_FRACTION_LEN = 'continued_fraction_len'
    NON_TOT_RAM_DELEGATED = 'nontot_ram_delegated'


@dataclass(frozen=True)
class Verdict:
    """
    Freeness decision with the quantities it rests on.

    Attributes:
        free: Whether the ring of integers is free over its associated order
        case: Which clause of the decision procedure applied
        reason: Short machine-readable code
        details: Decisive quantities (a, p, cf_length, band, ...)
        cross_checks: Pattern certificate, when one was requested
    """
    free: bool
    case: VerdictCase
    reason: str
    details: Dict[str, Any] = field(default_factory=dict)
    cross_checks: Optional[Dict[str, Any]] = None

    def recompute(self) -> bool:
        """Re-derive the decision from ``details`` alone."""
        case = self.case
        if case is VerdictCase.NON_TOT_RAM_DELEGATED:
            case = VerdictCase(self.details['delegated_case'])
        if case is VerdictCase.MAXIMAL_A0:
            return self.details['a'] == 0
        if case in (VerdictCase.DIVIDES_PM1, VerdictCase.DIVIDES_PM1_CONVERSE):
            return (self.details['p'] - 1) % self.details['a'] == 0
        return self.details['cf_length'] <= 4

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'free': self.free,
            'case': self.case.value,
            'reason': self.reason,
            'details': dict(self.details),
        }
        if self.cross_checks is not None:
            data['cross_checks'] = self.cross_checks
        return data


@dataclass(frozen=True)
class TensorComparison:
    """Dihedral verdict over K next to the cyclic verdict over the quadratic field M."""
    dihedral: Verdict
    cyclic: Verdict
    e_m: int
    realizable: bool

    @property
    def diverges(self) -> bool:
        return self.dihedral.free != self.cyclic.free

    def to_dict(self) -> Dict[str, Any]:
        return {
            'dihedral': self.dihedral.to_dict(),
            'cyclic_over_m': self.cyclic.to_dict(),
            'e_m': self.e_m,
            'realizable': self.realizable,
            'diverges': self.diverges,
        }
