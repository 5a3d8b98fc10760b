"""
Base classes for the verification suites.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional
import logging
import time

from ..utils.config import Config

logger = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    """
    Container for a suite run.

    Attributes:
        name: Suite name
        success: Whether every recorded check passed
        execution_time: Time taken in seconds
        data: Suite-specific summary (counts, certificates)
        checks: One entry per property instance, with a counterexample on failure
        message: Optional status message
    """
    name: str
    success: bool = True
    execution_time: float = 0.0
    data: Any = None
    checks: List[Dict[str, Any]] = field(default_factory=list)
    message: str = ""

    @property
    def failures(self) -> List[Dict[str, Any]]:
        return [check for check in self.checks if not check['passed']]

    def summary(self) -> Dict[str, Dict[str, int]]:
        """Pass/fail counts per property."""
        counts: Dict[str, Dict[str, int]] = {}
        for check in self.checks:
            entry = counts.setdefault(check['property'], {'passed': 0, 'failed': 0})
            entry['passed' if check['passed'] else 'failed'] += 1
        return counts

    def to_dict(self, include_passed: bool = False) -> Dict[str, Any]:
        """Convert result to dictionary for reporting; passing checks are summarized."""
        return {
            'suite': self.name,
            'success': self.success,
            'execution_time_ms': round(self.execution_time * 1000, 3),
            'message': self.message,
            'properties': self.summary(),
            'failures': self.checks if include_passed else self.failures,
            'data': self.data,
        }


class Suite(ABC):
    """
    Abstract base class for the verification suites.

    Subclasses implement ``execute`` by calling ``_add_check`` once per
    property instance and finishing with ``_create_result``. A failing
    property is recorded, never raised.
    """

    def __init__(self, max_p: int = Config.DEFAULT_MAX_P):
        """
        Args:
            max_p: Upper bound on the primes the suite enumerates
        """
        self.max_p = max_p
        self._checks: List[Dict[str, Any]] = []
        self._start_time: float = 0.0

    @property
    @abstractmethod
    def name(self) -> str:
        """Return the suite name."""
        pass

    @abstractmethod
    def execute(self) -> SuiteResult:
        pass

    def _start_timer(self) -> None:
        self._start_time = time.perf_counter()

    def _get_elapsed_time(self) -> float:
        return time.perf_counter() - self._start_time

    def _add_check(self, prop: str, passed: bool, counterexample: Optional[Any] = None,
                   **details) -> bool:
        """
        Record one property instance.

        Args:
            prop: Property name
            passed: Outcome
            counterexample: Tuple identifying the failing instance
            **details: Extra data kept only on failure
        """
        check: Dict[str, Any] = {'property': prop, 'passed': bool(passed)}
        if not passed:
            check['counterexample'] = counterexample
            check.update(details)
            logger.warning("%s: %s failed at %s", self.name, prop, counterexample)
        self._checks.append(check)
        return bool(passed)

    def _clear_checks(self) -> None:
        self._checks.clear()

    def _create_result(self, data: Any = None, message: str = "") -> SuiteResult:
        """Create a SuiteResult with timing information; success means no recorded failure."""
        success = all(check['passed'] for check in self._checks)
        result = SuiteResult(
            name=self.name,
            success=success,
            execution_time=self._get_elapsed_time(),
            data=data,
            checks=self._checks.copy(),
            message=message or f"{len(self._checks)} checks, {'all passed' if success else 'failures recorded'}",
        )
        logger.debug("suite %s finished in %.3fs", self.name, result.execution_time)
        return result
