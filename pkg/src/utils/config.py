"""
Named defaults shared by the library, the suites and the CLI.

All values can be overridden through command-line flags; nothing is read
from the environment.
"""
from typing import Tuple


class Config:
    """Static configuration constants."""

    # verification defaults
    DEFAULT_MAX_P: int = 50
    DEFAULT_SEED: int = 0
    DEFAULT_TRIALS: int = 100
    DEFAULT_WORKERS: int = 4

    # exact group-ring expansions grow quickly; keep them at desk scale
    WP_IDENTITY_MAX_P: int = 23
    C_COEFF_MAX_P: int = 101
    WPOWER_MAX_E: int = 3
    REDMETHOD_PRIMES: Tuple[int, ...] = (3, 5, 7)
    ORACLE_MAX_P: int = 23

    SUITE_NAMES: Tuple[str, ...] = (
        'cfrac', 'assocorder', 'groupring', 'redmethod', 'patterns', 'verdict'
    )

    CSV_HEADER: Tuple[str, ...] = (
        'p', 'e', 't', 'closure', 'totally_ramified', 'ell', 'a', 'a0',
        'cf', 'cf_length', 'case', 'free', 'reason',
        'scaffold_c', 'scaffold_l',
    )
    CSV_LIST_SEPARATOR: str = ';'

    EXIT_OK: int = 0
    EXIT_VERIFY_FAILED: int = 1
    EXIT_USAGE: int = 2
    EXIT_IO: int = 3
