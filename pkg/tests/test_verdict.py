"""
Test module for the freeness verdicts.
"""
import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import time

import pytest
from sympy import primerange

from src.algorithms.ramification import valid_jumps, validate
from src.algorithms.verdict import (
    cyclic_verdict, dihedral_verdict, nontot_verdict, tensoring_comparison, verdict_for,
)
from src.models.ramification import Closure
from src.models.verdict import VerdictCase
from src.utils.exceptions import OutOfRange, PreconditionViolated

PRIMES = [int(p) for p in primerange(3, 98)]


def test_reference_example():
    """Degree 13: not free over K, free over the quadratic field."""
    print("\n" + "=" * 50)
    print("TEST: degree 13 reference example")
    print("=" * 50)

    start = time.perf_counter()
    verdict = dihedral_verdict(validate(13, 2, 3))
    cyclic = cyclic_verdict(13, 4, 3)
    elapsed = time.perf_counter() - start
    print(f"dihedral: {verdict.to_dict()}")
    print(f"cyclic:   {cyclic.to_dict()}")
    print(f"Time: {elapsed * 1000:.3f} ms")

    assert not verdict.free
    assert verdict.case is VerdictCase.CONTINUED_FRACTION_LEN
    assert verdict.details['cf'] == [0, 1, 1, 1, 1, 2]
    assert verdict.details['cf_length'] == 5
    assert cyclic.free
    assert cyclic.case is VerdictCase.DIVIDES_PM1

    print("[OK] reference example passed")


def test_dihedral_cases():
    """Maximal, low-band and high-band tuples."""
    print("\n" + "=" * 50)
    print("TEST: dihedral verdict cases")
    print("=" * 50)

    maximal = dihedral_verdict(validate(5, 2, 5))
    assert maximal.free and maximal.case is VerdictCase.MAXIMAL_A0

    low = dihedral_verdict(validate(7, 2, 1))
    assert not low.free and low.case is VerdictCase.DIVIDES_PM1_CONVERSE

    low_free = dihedral_verdict(validate(3, 2, 1))
    assert low_free.free and low_free.case is VerdictCase.DIVIDES_PM1

    for p in (5, 7, 11):
        high = dihedral_verdict(validate(p, 1, 1))
        assert high.free and high.case is VerdictCase.CONTINUED_FRACTION_LEN
        assert high.details['cf_length'] == 3

    with pytest.raises(PreconditionViolated):
        dihedral_verdict(validate(13, 4, 3, Closure.CYCLIC, True))

    print("[OK] dihedral cases passed")


def test_cyclic_and_delegated():
    """Cyclic closure and the non-totally-ramified delegation."""
    print("\n" + "=" * 50)
    print("TEST: cyclic and delegated verdicts")
    print("=" * 50)

    assert cyclic_verdict(5, 4, 5).case is VerdictCase.MAXIMAL_A0
    boundary = cyclic_verdict(5, 4, 4)
    assert boundary.free and boundary.case is VerdictCase.CONTINUED_FRACTION_LEN
    assert boundary.details['cf_length'] == 2
    with pytest.raises(OutOfRange):
        cyclic_verdict(5, 1, 3)

    for p in (5, 7, 11):
        delegated = nontot_verdict(p, 1, 1)
        assert delegated.free
        assert delegated.case is VerdictCase.NON_TOT_RAM_DELEGATED
        assert delegated.details['closure'] == 'dihedral'
    assert nontot_verdict(13, 12, 12).free
    delegated = nontot_verdict(13, 12, 13)
    assert delegated.free and delegated.details['delegated_case'] == 'maximal_a0'

    rd = validate(13, 12, 12, Closure.DIHEDRAL, False)
    assert verdict_for(rd).case is VerdictCase.NON_TOT_RAM_DELEGATED

    print("[OK] cyclic and delegated passed")


def test_unramified_base_always_free():
    """e = 1: every valid totally ramified dihedral jump gives a free ring."""
    print("\n" + "=" * 50)
    print("TEST: e = 1 family, p <= 97")
    print("=" * 50)

    start = time.perf_counter()
    for p in PRIMES:
        for t in valid_jumps(p, 1):
            assert dihedral_verdict(validate(p, 1, t)).free, (p, t)
    print(f"Time: {(time.perf_counter() - start) * 1000:.3f} ms")

    print("[OK] e = 1 family passed")


def test_weak_ramification():
    """t = 1 and 2 <= e <= 10: free only for p = 3."""
    print("\n" + "=" * 50)
    print("TEST: t = 1 family, p <= 97")
    print("=" * 50)

    for p in PRIMES:
        for e in range(2, 11):
            assert dihedral_verdict(validate(p, e, 1)).free == (p == 3), (p, e)

    print("[OK] t = 1 family passed")


def test_reason_records_recompute():
    """Every verdict re-derives from its details; a | p-1 always means free."""
    print("\n" + "=" * 50)
    print("TEST: reason records")
    print("=" * 50)

    for p in PRIMES[:10]:
        for e in range(1, 4):
            for closure, total in ((Closure.DIHEDRAL, True), (Closure.DIHEDRAL, False),
                                   (Closure.CYCLIC, True)):
                for t in valid_jumps(p, e, closure, total):
                    rd = validate(p, e, t, closure, total)
                    verdict = verdict_for(rd)
                    assert verdict.recompute() == verdict.free, rd
                    if rd.a and (p - 1) % rd.a == 0:
                        assert verdict.free, rd

    print("[OK] reason records passed")


def test_cross_check_certificates():
    """High-band verdicts carry the matching pattern certificate."""
    print("\n" + "=" * 50)
    print("TEST: cross-checked verdicts")
    print("=" * 50)

    failing = dihedral_verdict(validate(13, 2, 3), cross_check=True)
    assert failing.cross_checks['kind'] == 'necessity'
    assert failing.cross_checks['columns'] == [3, 6, 9]

    passing = dihedral_verdict(validate(5, 1, 1), cross_check=True)
    assert passing.cross_checks['kind'] == 'sufficiency'

    short = dihedral_verdict(validate(7, 3, 5), cross_check=True)
    assert short.free and short.cross_checks is None

    print("[OK] cross checks passed")


def test_tensoring_comparison():
    """The degree 13 tuple is where the two verdicts part ways."""
    print("\n" + "=" * 50)
    print("TEST: tensoring comparison")
    print("=" * 50)

    comparison = tensoring_comparison(13, 2, 3)
    print(f"comparison: diverges={comparison.diverges}, e_M={comparison.e_m}")
    assert comparison.diverges
    assert comparison.e_m == 4
    assert comparison.realizable
    assert not tensoring_comparison(5, 1, 1).diverges

    print("[OK] tensoring comparison passed")


def main():
    """Run all tests."""
    print("=" * 60)
    print("VERDICT TESTS")
    print("=" * 60)

    test_reference_example()
    test_dihedral_cases()
    test_cyclic_and_delegated()
    test_unramified_base_always_free()
    test_weak_ramification()
    test_reason_records_recompute()
    test_cross_check_certificates()
    test_tensoring_comparison()

    print("\n" + "=" * 60)
    print("ALL TESTS COMPLETED")
    print("=" * 60)


if __name__ == "__main__":
    main()
