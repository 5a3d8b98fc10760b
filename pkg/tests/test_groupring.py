"""
Test module for group ring arithmetic and the w-power expansion.
"""
import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest
from hypothesis import given, settings, strategies as st
from sympy import primerange

from src.algorithms.groupring import (
    ab_matrices, b_closed_form, c_coeffs, gr_arith, staircase_violations,
    verify_wp_identity, wp_relation, wpower_val_table,
)
from src.models.group_ring import INF, GroupRingElement, ValCoeff
from src.utils.exceptions import ParameterError


def test_group_ring_arithmetic():
    """Addition, multiplication and powers modulo sigma^p - 1."""
    print("\n" + "=" * 50)
    print("TEST: group ring arithmetic")
    print("=" * 50)

    x = GroupRingElement.sigma(3) - GroupRingElement.sigma(3, 2)
    cube = gr_arith(x, 3, 'pow')
    print(f"(sigma - sigma^2)^3 = {cube!r}")
    assert cube.coeffs == (0, -3, 3)
    assert (cube + 3 * x).is_zero()

    s = GroupRingElement.antisymmetric(5)
    fifth = gr_arith(s, 5, 'pow')
    assert fifth == -5 * (s ** 3) - 5 * s
    assert gr_arith(s, s, 'mul') == s * s
    assert gr_arith(s, GroupRingElement.one(5), 'add')[0] == 1
    assert GroupRingElement.sigma(5, 7) == GroupRingElement.sigma(5, 2)

    with pytest.raises(ParameterError):
        gr_arith(s, GroupRingElement.one(7), 'add')
    with pytest.raises(ParameterError):
        gr_arith(s, s, 'div')

    print("[OK] arithmetic passed")


def test_c_coefficients():
    """Both closed forms of c_j and their p-adic valuation."""
    print("\n" + "=" * 50)
    print("TEST: c coefficients")
    print("=" * 50)

    assert c_coeffs(3) == [3]
    assert c_coeffs(5) == [5, 5]
    assert c_coeffs(7) == [7, 14, 7]
    for p in primerange(3, 102):
        assert len(c_coeffs(int(p))) == (p - 1) // 2

    print("[OK] c coefficients passed")


def test_wp_identity():
    """The w^p relation vanishes exactly for p <= 23."""
    print("\n" + "=" * 50)
    print("TEST: w^p identity")
    print("=" * 50)

    for p in primerange(3, 24):
        assert verify_wp_identity(int(p)), p
    assert wp_relation(3).is_zero()

    print("[OK] w^p identity passed")


def test_ab_matrices():
    """Change of basis between odd powers of s and sigma^k - sigma^-k."""
    print("\n" + "=" * 50)
    print("TEST: a/b matrices")
    print("=" * 50)

    ab = ab_matrices(3)
    assert (ab.a[0, 0], ab.a[1, 0], ab.a[1, 1]) == (1, -3, 1)
    assert (ab.b[0, 0], ab.b[1, 0], ab.b[1, 1]) == (1, 3, 1)
    assert ab.a[1, 0] * ab.b[0, 0] + ab.a[1, 1] * ab.b[1, 0] == 0

    for p in primerange(3, 24):
        ab = ab_matrices(int(p))
        for i in range(ab.size):
            assert ab.a[i, i] == 1 and ab.b[i, i] == 1
            for k in range(i + 1):
                assert ab.b[i, k] == b_closed_form(i, k)

    print("[OK] a/b matrices passed")


def test_val_coeff_rules():
    """Valuation bookkeeping: the smaller valuation wins, ties lose exactness."""
    print("\n" + "=" * 50)
    print("TEST: ValCoeff rules")
    print("=" * 50)

    assert ValCoeff(2) + ValCoeff(3) == ValCoeff(2, True)
    assert ValCoeff(2) + ValCoeff(2) == ValCoeff(2, False)
    assert ValCoeff(2) * ValCoeff(3, False) == ValCoeff(5, False)
    assert (ValCoeff.zero() + ValCoeff(4)) == ValCoeff(4)
    assert (ValCoeff.zero() * ValCoeff(4)).is_zero
    assert ValCoeff.zero().val == INF

    print("[OK] ValCoeff passed")


def test_wpower_table_examples():
    """Known coefficients of w^p, w^{p+1} and w^{p+2}."""
    print("\n" + "=" * 50)
    print("TEST: w-power table")
    print("=" * 50)

    p, e = 7, 2
    half = (p - 1) // 2
    table = wpower_val_table(p, e)
    assert table[1][p - 2] == ValCoeff(e + 1, True)
    assert table[1][1] == ValCoeff(e + half, True)
    assert table[2][p - 1] == ValCoeff(e + 1, True)
    # lowest term of w^{p+2}; the computed flag is exact
    assert table[3][1].val == 2 * e + (p + 1) // 2
    assert table[3][1].exact
    assert sorted(table) == list(range(1, p))

    with pytest.raises(ParameterError):
        wpower_val_table(7, 0)

    print("[OK] table examples passed")


@given(st.sampled_from([int(p) for p in primerange(3, 30)]), st.integers(min_value=1, max_value=4))
@settings(max_examples=40, deadline=None)
def test_staircase_property(p, e):
    assert staircase_violations(wpower_val_table(p, e), p, e) == []


def main():
    """Run all tests."""
    print("=" * 60)
    print("GROUP RING TESTS")
    print("=" * 60)

    test_group_ring_arithmetic()
    test_c_coefficients()
    test_wp_identity()
    test_ab_matrices()
    test_val_coeff_rules()
    test_wpower_table_examples()
    test_staircase_property()

    print("\n" + "=" * 60)
    print("ALL TESTS COMPLETED")
    print("=" * 60)


if __name__ == "__main__":
    main()
