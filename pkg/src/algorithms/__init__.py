from .base import Suite, SuiteResult
from .cfrac import cf_expand, e_set_bruteforce, e_set_parametrized
from .ramification import classify, validate
from .assocorder import build_profile
from .verdict import cyclic_verdict, dihedral_verdict, nontot_verdict, tensoring_comparison, verdict_for
from .survey import survey
from .suites import SUITES, run_suite

__all__ = [
    'Suite', 'SuiteResult',
    'cf_expand', 'e_set_bruteforce', 'e_set_parametrized',
    'classify', 'validate',
    'build_profile',
    'cyclic_verdict', 'dihedral_verdict', 'nontot_verdict', 'tensoring_comparison', 'verdict_for',
    'survey',
    'SUITES', 'run_suite',
]
