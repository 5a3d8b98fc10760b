"""
Test module for continued fractions and the set E.
"""
import sys
import os
from fractions import Fraction

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest
from hypothesis import given, settings, strategies as st
from sympy import primerange

from src.algorithms.cfrac import (
    cf_expand, convergent_violations, e_set_bruteforce, e_set_parametrized,
    frac_part, modular_distance, nearest_dist,
)
from src.utils.exceptions import DomainError, ParameterError

PRIMES = [int(p) for p in primerange(3, 300)]


@st.composite
def unit_fractions(draw):
    p = draw(st.sampled_from(PRIMES))
    a = draw(st.integers(min_value=1, max_value=p - 1))
    return a, p


def test_cf_expand():
    """Partial quotients and convergents of small fractions."""
    print("\n" + "=" * 50)
    print("TEST: Continued fraction expansion")
    print("=" * 50)

    cf = cf_expand(8, 13)
    print(f"8/13 = {cf}")
    assert cf.partials == (0, 1, 1, 1, 1, 2)
    assert cf.length == 5
    assert cf.q == (1, 1, 2, 3, 5, 13)
    assert cf.p_seq == (0, 1, 1, 2, 3, 8)

    assert cf_expand(3, 5).partials == (0, 1, 1, 2)
    assert cf_expand(1, 5).partials == (0, 5)
    assert cf_expand(1, 5).convergents == ((0, 1), (1, 5))
    assert cf_expand(4, 13).q == (1, 3, 13)
    # numerators above p carry the integer part
    assert cf_expand(21, 13).partials == (1, 1, 1, 1, 1, 2)

    print("[OK] cf_expand passed")


def test_cf_rejects_bad_input():
    """Even or composite denominators and negative numerators."""
    print("\n" + "=" * 50)
    print("TEST: Continued fraction input validation")
    print("=" * 50)

    for a, p in [(1, 2), (1, 9), (-1, 5)]:
        with pytest.raises(ParameterError):
            cf_expand(a, p)

    print("[OK] input validation passed")


def test_fractional_distances():
    """frac, nearest-integer distance and the circle metric."""
    print("\n" + "=" * 50)
    print("TEST: Fractional part and distances")
    print("=" * 50)

    assert frac_part(Fraction(96, 13)) == Fraction(5, 13)
    assert frac_part(Fraction(-1, 3)) == Fraction(2, 3)
    assert frac_part(4) == 0
    assert nearest_dist(Fraction(8, 13)) == Fraction(5, 13)
    assert nearest_dist(Fraction(40, 13)) == Fraction(1, 13)
    assert nearest_dist(3) == 0
    with pytest.raises(DomainError):
        nearest_dist(Fraction(1, 2))
    assert modular_distance(5, 0, 8, 13) == Fraction(1, 13)

    print("[OK] distances passed")


def test_modular_distance_metric():
    """Circle distance is symmetric, vanishes only on equal residues and obeys the triangle inequality."""
    print("\n" + "=" * 50)
    print("TEST: modular distance metric, p in (7, 11, 13)")
    print("=" * 50)

    for p in (7, 11, 13):
        for a in range(1, p):
            d = [[modular_distance(h, k, a, p) for k in range(p)] for h in range(p)]
            for h in range(p):
                for k in range(p):
                    assert d[h][k] == d[k][h]
                    assert (d[h][k] == 0) == (h == k)
                    for m in range(p):
                        assert d[h][m] <= d[h][k] + d[k][m], (p, a, h, k, m)
            assert modular_distance(p + 2, 2, a, p) == 0

    print("[OK] metric passed")


def test_e_set_examples():
    """Brute-force and parametrized E on known cases."""
    print("\n" + "=" * 50)
    print("TEST: The set E")
    print("=" * 50)

    assert e_set_bruteforce(8, 13).to_list() == [1, 2, 5]
    assert e_set_parametrized(8, 13).to_list() == [1, 2, 5]
    assert e_set_bruteforce(4, 13).to_list() == [1, 4, 7, 10]
    assert e_set_parametrized(4, 13).to_list() == [1, 4, 7, 10]
    assert e_set_parametrized(1, 7).to_list() == [1]
    assert e_set_bruteforce(10, 11).to_list() == list(range(1, 11))
    assert 5 in e_set_bruteforce(8, 13)
    with pytest.raises(ParameterError):
        e_set_bruteforce(0, 13)

    print("[OK] E examples passed")


def test_e_set_equivalence_exhaustive():
    """Both constructions of E agree for every prime below 300."""
    print("\n" + "=" * 50)
    print("TEST: E oracle equivalence, p < 300")
    print("=" * 50)

    checked = 0
    for p in PRIMES:
        for a in range(1, p):
            assert e_set_bruteforce(a, p).members == e_set_parametrized(a, p).members, (a, p)
            checked += 1

    print(f"[OK] {checked} pairs agree")


def test_convergent_properties_exhaustive():
    """Best-approximation properties of the convergents for p < 200."""
    print("\n" + "=" * 50)
    print("TEST: Convergent properties, p < 200")
    print("=" * 50)

    for p in primerange(3, 200):
        for a in range(1, p):
            cf = cf_expand(a, int(p))
            assert convergent_violations(cf) == [], (a, p)

    print("[OK] convergent properties passed")


@given(unit_fractions())
@settings(max_examples=200, deadline=None)
def test_reconstruct_property(pair):
    a, p = pair
    cf = cf_expand(a, p)
    assert cf.reconstruct() == Fraction(a, p)
    assert cf.q[-1] == p
    # canonical form: last partial quotient exceeds 1 once n >= 1
    assert cf.length == 0 or cf.partials[-1] > 1


@given(unit_fractions())
@settings(max_examples=200, deadline=None)
def test_last_convergent_distance(pair):
    a, p = pair
    cf = cf_expand(a, p)
    assert nearest_dist(Fraction(cf.q[-2] * a, p)) == Fraction(1, p)


def main():
    """Run all tests."""
    print("=" * 60)
    print("CONTINUED FRACTION TESTS")
    print("=" * 60)

    test_cf_expand()
    test_cf_rejects_bad_input()
    test_fractional_distances()
    test_modular_distance_metric()
    test_e_set_examples()
    test_e_set_equivalence_exhaustive()
    test_convergent_properties_exhaustive()
    test_reconstruct_property()
    test_last_convergent_distance()

    print("\n" + "=" * 60)
    print("ALL TESTS COMPLETED")
    print("=" * 60)


if __name__ == "__main__":
    main()
