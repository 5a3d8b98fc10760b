"""
Verification suites: each one enumerates its parameter range and records
every property instance through the Suite base class.
"""
import logging
from typing import Dict, Iterator, List, Optional, Type

import numpy as np
from sympy import primerange

from ..models.order_profile import OrderProfile
from ..models.pattern import EntryClass
from ..models.ramification import CaseTag, Closure
from ..utils.config import Config
from ..utils.exceptions import FreenessError, OutOfRange, ParameterError
from .assocorder import build_profile, orders_equal, profile_violations, ring_conditions
from .base import Suite, SuiteResult
from .cfrac import cf_expand, convergent_violations, e_set_bruteforce, e_set_parametrized
from .groupring import (
    ab_matrices,
    b_closed_form,
    c_coeffs,
    staircase_violations,
    verify_wp_identity,
    wpower_val_table,
)
from .patterns import necessity_check, nonzero_rows, sufficiency_check, valuation_class
from .ramification import classify, synthesize, synthesize_high_band, valid_jumps, validate
from .redmethod import (
    basis_from_reduced,
    delta_action_violations,
    idempotent_check,
    lattice_equivalent,
    random_maximal_model,
    random_unimodular,
    reduce,
    transformed,
)
from .verdict import cyclic_verdict, dihedral_verdict, tensoring_comparison

logger = logging.getLogger(__name__)


def odd_primes(upper: int) -> List[int]:
    """Odd primes strictly below ``upper``."""
    return [int(p) for p in primerange(3, upper)]


def high_band_profiles(max_p: int, a0_values=(0, 1)) -> Iterator[OrderProfile]:
    """Profiles with nu_{p-1} = e + (p-1)/2 for every prime below max_p and a != 0."""
    for p in odd_primes(max_p):
        for a0 in a0_values:
            for a in range(1, p):
                try:
                    rd = synthesize_high_band(p, a, a0)
                except ParameterError:
                    continue
                yield build_profile(rd)


class CfracSuite(Suite):
    """Continued fractions of a/p, the E set and the convergent properties."""

    @property
    def name(self) -> str:
        return "cfrac"

    def execute(self) -> SuiteResult:
        self._start_timer()
        self._clear_checks()
        pairs = 0
        for p in odd_primes(self.max_p):
            for a in range(1, p):
                pairs += 1
                cf = cf_expand(a, p)
                self._add_check('reconstruct', cf.reconstruct() == cf.value, (a, p))
                brute, param = e_set_bruteforce(a, p), e_set_parametrized(a, p)
                self._add_check('e_set_equivalence', brute.members == param.members, (a, p),
                                bruteforce=brute.to_list(), parametrized=param.to_list())
                failures = convergent_violations(cf)
                self._add_check('convergent_properties', not failures, (a, p), reasons=failures)
        return self._create_result({'pairs': pairs})


class AssocOrderSuite(Suite):
    """Valuation sequences, ring conditions and the scaffold identity."""

    @property
    def name(self) -> str:
        return "assocorder"

    def execute(self) -> SuiteResult:
        self._start_timer()
        self._clear_checks()
        profiles = 0
        for p in odd_primes(self.max_p):
            for a0 in (0, 1, 2):
                for a in range(1, p):
                    try:
                        rd = synthesize(p, a, a0)
                    except OutOfRange:
                        continue
                    key = (p, rd.e, rd.t)
                    try:
                        profile = build_profile(rd)
                    except FreenessError as exc:
                        self._add_check('n_equivalence', False, key, error=exc.to_dict())
                        continue
                    profiles += 1
                    self._add_check('n_equivalence', True, key)
                    failures = profile_violations(profile)
                    self._add_check('nu_properties', not failures, key, reasons=failures)

                    report = ring_conditions(rd, profile.nu)
                    divides = (p - 1) % a == 0
                    self._add_check('cond1_iff_divides', report.cond1 == divides, key)
                    self._add_check('cond2_unconditional', report.cond2, key)
                    self._add_check('orders_equal', orders_equal(rd) == report.is_ring, key)

                    low = classify(rd) is CaseTag.LOW_BAND
                    self._add_check('scaffold_identity',
                                    profile.scaffold_c == profile.scaffold_l * p + a, key)
                    self._add_check('scaffold_band',
                                    profile.scaffold_l >= 0 and (profile.scaffold_l > 0) == low, key)
        return self._create_result({'profiles': profiles})


class GroupRingSuite(Suite):
    """The w^p relation, its coefficients, the change-of-basis matrices and the w-power staircase."""

    @property
    def name(self) -> str:
        return "groupring"

    def execute(self) -> SuiteResult:
        self._start_timer()
        self._clear_checks()
        for p in odd_primes(min(self.max_p, Config.C_COEFF_MAX_P) + 1):
            try:
                c_coeffs(p)
                self._add_check('c_coefficients', True, (p,))
            except FreenessError as exc:
                self._add_check('c_coefficients', False, (p,), error=exc.to_dict())

        for p in odd_primes(min(self.max_p, Config.WP_IDENTITY_MAX_P) + 1):
            self._add_check('wp_identity', verify_wp_identity(p), (p,))
            try:
                ab = ab_matrices(p)
            except FreenessError as exc:
                self._add_check('ab_matrices', False, (p,), error=exc.to_dict())
                continue
            self._add_check('ab_matrices', True, (p,))
            closed = all(ab.b[j, k] == b_closed_form(j, k)
                         for j in range(ab.size) for k in range(j + 1))
            self._add_check('b_closed_form', closed, (p,))
            for e in range(1, Config.WPOWER_MAX_E + 1):
                failures = staircase_violations(wpower_val_table(p, e), p, e)
                self._add_check('wpower_staircase', not failures, (p, e), reasons=failures[:5])
        return self._create_result()


class RedMethodSuite(Suite):
    """Seeded random maximal models pushed through the reduction method."""

    def __init__(self, max_p: int = Config.DEFAULT_MAX_P, seed: int = Config.DEFAULT_SEED,
                 trials: int = Config.DEFAULT_TRIALS):
        super().__init__(max_p)
        self.seed = seed
        self.trials = trials

    @property
    def name(self) -> str:
        return "redmethod"

    def execute(self) -> SuiteResult:
        self._start_timer()
        self._clear_checks()
        rng = np.random.default_rng(self.seed)
        primes = [p for p in Config.REDMETHOD_PRIMES if p < max(self.max_p, 4)] or [3]
        for trial in range(self.trials):
            p = primes[trial % len(primes)]
            model = random_maximal_model(p, rng)
            key = (p, trial, model.lambdas)
            try:
                direct = reduce(model.action_matrix(), p)
                basis = basis_from_reduced(direct)
                self._add_check('certificate', direct.certificate.verified, key)
                self._add_check('vandermonde', direct.D == model.vandermonde, key)
                self._add_check('delta_action', not delta_action_violations(model, basis), key)
                self._add_check('idempotents', idempotent_check(model, basis), key)

                mixed = transformed(model.action_matrix(), random_unimodular(p * p, rng))
                reduced = reduce(mixed, p)
                self._add_check('certificate', reduced.certificate.verified, key)
                self._add_check('lattice_invariance',
                                lattice_equivalent(basis, basis_from_reduced(reduced), p), key)
            except FreenessError as exc:
                self._add_check('reduction', False, key, error=exc.to_dict())
        return self._create_result({'seed': self.seed, 'trials': self.trials})


class PatternsSuite(Suite):
    """Residue-pattern certificates against the continued fraction criterion."""

    @property
    def name(self) -> str:
        return "patterns"

    def _oracle_agrees(self, profile: OrderProfile) -> Optional[tuple]:
        """First cell where the valuation oracle contradicts the residue classification."""
        p = profile.p
        table = wpower_val_table(p, profile.rd.e)
        for k in range(p):
            for i in range(p):
                live = dict(nonzero_rows(profile, k, i))
                window = k + i - (p - 1)
                for j in range(max(window, 0), p):
                    oracle = valuation_class(profile, table, k, i, j)
                    entry = live.get(j, EntryClass.ZERO)
                    if EntryClass.UNKNOWN in (oracle, entry):
                        continue
                    if oracle.is_nonzero != entry.is_nonzero:
                        return (k, i, j)
        return None

    def execute(self) -> SuiteResult:
        self._start_timer()
        self._clear_checks()
        counts = {'sufficiency': 0, 'necessity': 0, 'short': 0}
        for profile in high_band_profiles(self.max_p):
            rd = profile.rd
            key = (rd.p, rd.e, rd.t)
            length = cf_expand(rd.a, rd.p).length
            if rd.p <= Config.ORACLE_MAX_P:
                cell = self._oracle_agrees(profile)
                self._add_check('valuation_oracle', cell is None, key, cell=cell)
            if length < 3:
                counts['short'] += 1
                continue

            outcomes = {}
            for label, check in (('sufficiency', sufficiency_check), ('necessity', necessity_check)):
                try:
                    check(profile)
                    outcomes[label] = True
                except FreenessError:
                    outcomes[label] = False
            self._add_check('exactly_one_certificate',
                            outcomes['sufficiency'] != outcomes['necessity'], key, outcomes=outcomes)
            self._add_check('certificate_matches_length',
                            outcomes['sufficiency'] == (length <= 4), key, cf_length=length)
            free = dihedral_verdict(rd).free
            self._add_check('certificate_matches_verdict', outcomes['sufficiency'] == free, key)
            counts['sufficiency' if outcomes['sufficiency'] else 'necessity'] += 1

        if self.max_p > 13:
            certificate = necessity_check(build_profile(validate(13, 2, 3)))
            self._add_check('reference_certificate',
                            set(certificate.columns) == {3, 6, 9}
                            and set(certificate.allowed_rows) == {7, 10}
                            and certificate.cover_deficit == 1,
                            (13, 2, 3), certificate=certificate.to_dict())
        return self._create_result(counts)


class VerdictSuite(Suite):
    """Known verdict families and the self-auditing reason records."""

    @property
    def name(self) -> str:
        return "verdict"

    def execute(self) -> SuiteResult:
        self._start_timer()
        self._clear_checks()
        primes = odd_primes(self.max_p)
        for p in primes:
            for t in valid_jumps(p, 1):
                verdict = dihedral_verdict(validate(p, 1, t))
                self._add_check('unramified_base_free', verdict.free, (p, 1, t))
            for e in range(2, 11):
                verdict = dihedral_verdict(validate(p, e, 1))
                self._add_check('weak_ramification', verdict.free == (p == 3), (p, e, 1))

            for e in range(1, 4):
                for closure, total in ((Closure.DIHEDRAL, True), (Closure.DIHEDRAL, False),
                                       (Closure.CYCLIC, True)):
                    for t in valid_jumps(p, e, closure, total):
                        rd = validate(p, e, t, closure, total)
                        verdict = (dihedral_verdict(rd) if rd.is_dihedral_total
                                   else cyclic_verdict(p, e, t))
                        key = (p, e, t, closure.value, total)
                        self._add_check('recompute', verdict.recompute() == verdict.free, key)
                        if rd.a and (p - 1) % rd.a == 0:
                            self._add_check('divides_implies_free', verdict.free, key)

        if self.max_p > 13:
            self._add_check('reference_dihedral', not dihedral_verdict(validate(13, 2, 3)).free, (13, 2, 3))
            self._add_check('reference_cyclic', cyclic_verdict(13, 4, 3).free, (13, 4, 3))
            self._add_check('reference_divergence', tensoring_comparison(13, 2, 3).diverges, (13, 2, 3))
        return self._create_result({'primes': len(primes)})


SUITES: Dict[str, Type[Suite]] = {
    'cfrac': CfracSuite,
    'assocorder': AssocOrderSuite,
    'groupring': GroupRingSuite,
    'redmethod': RedMethodSuite,
    'patterns': PatternsSuite,
    'verdict': VerdictSuite,
}


def run_suite(name: str, max_p: int = Config.DEFAULT_MAX_P, seed: int = Config.DEFAULT_SEED,
              trials: int = Config.DEFAULT_TRIALS) -> List[SuiteResult]:
    """Run one suite, or every suite for ``name == 'all'``."""
    names = list(SUITES) if name == 'all' else [name]
    results = []
    for suite_name in names:
        if suite_name not in SUITES:
            raise ParameterError(f"unknown suite {suite_name!r}")
        cls = SUITES[suite_name]
        suite = cls(max_p, seed, trials) if cls is RedMethodSuite else cls(max_p)
        results.append(suite.execute())
    return results
