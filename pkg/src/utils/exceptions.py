"""
Exception hierarchy for the freeness analyzer.
"""
from typing import Any, Dict


class FreenessError(Exception):
    """Base class for all errors raised by the analyzer."""

    @property
    def code(self) -> str:
        return type(self).__name__

    def to_dict(self) -> Dict[str, Any]:
        """Machine-readable form used by the CLI on standard error."""
        return {'error': self.code, 'message': str(self)}


class ParameterError(FreenessError, ValueError):
    """Invalid raw parameters (non-prime p, negative numerator, ...)."""


class OutOfRange(ParameterError):
    """Ramification jump outside its admissible interval."""


class ParityViolation(ParameterError):
    """Even jump for a totally ramified dihedral closure."""


class DivisibilityViolation(ParameterError):
    """p divides t although t is not the maximal jump."""


class NotApplicable(FreenessError):
    """Operation undefined for this data (e.g. a valuation profile when a = 0)."""


class DomainError(FreenessError, ValueError):
    """Input outside the mathematical domain of a function."""


class RankDeficient(FreenessError):
    """Stacked action matrix has rank smaller than its column count."""


class PreconditionViolated(FreenessError):
    """Structural argument invoked outside the range where it applies."""


class StructureMismatch(FreenessError):
    """A computed object contradicts an identity it must satisfy."""
