"""
Test module for the reduction method on action matrices.
"""
import sys
import os
from fractions import Fraction
import time

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np
import pytest

from src.algorithms.redmethod import (
    basis_from_reduced, delta_action_violations, idempotent_check, lattice_equivalent,
    p_valuation, random_maximal_model, random_unimodular, reduce, transformed,
)
from src.algorithms.suites import run_suite
from src.models.action_matrix import ActionMatrix, MaximalModel
from src.utils.exceptions import ParameterError, RankDeficient


def identity_blocks(n):
    blocks = []
    for j in range(n):
        block = [[0] * n for _ in range(n)]
        block[j][j] = 1
        blocks.append(block)
    return ActionMatrix.from_blocks(blocks)


def test_p_valuation():
    """p-adic valuation of exact rationals."""
    print("\n" + "=" * 50)
    print("TEST: p-adic valuation")
    print("=" * 50)

    assert p_valuation(Fraction(18, 5), 3) == 2
    assert p_valuation(Fraction(5, 9), 3) == -2
    assert p_valuation(Fraction(0), 3) == float('inf')

    print("[OK] valuation passed")


def test_reduce_maximal_model():
    """Row exchanges bring the eigenvalue model to its Vandermonde matrix."""
    print("\n" + "=" * 50)
    print("TEST: reduce on MaximalModel(3, (0, 1, 2))")
    print("=" * 50)

    model = MaximalModel(3, (0, 1, 2))
    pair = reduce(model.action_matrix(), 3)
    print(f"D = {[[str(x) for x in row] for row in pair.D]}")
    assert [list(row) for row in pair.D] == [[1, 0, 0], [1, 1, 1], [1, 2, 4]]
    assert pair.D == model.vandermonde
    assert not pair.eliminated
    assert pair.certificate.verified

    basis = basis_from_reduced(pair)
    assert delta_action_violations(model, basis) == []
    assert idempotent_check(model, basis)

    print("[OK] maximal model reduction passed")


def test_reduce_identity_and_errors():
    """Identity blocks, rank deficiency and p in a denominator."""
    print("\n" + "=" * 50)
    print("TEST: reduce edge cases")
    print("=" * 50)

    pair = reduce(identity_blocks(3), 3)
    assert [list(row) for row in pair.D] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    basis = basis_from_reduced(pair)
    assert [list(v) for v in basis] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    deficient = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    deficient[0][0] = [1, 0, 0]
    deficient[1][1] = [0, 1, 0]
    with pytest.raises(RankDeficient):
        reduce(ActionMatrix.from_blocks(deficient), 3)

    dependent = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    dependent[0][0] = [1, 0, 0]
    dependent[1][1] = [0, 1, 0]
    dependent[2][2] = [1, 1, 0]
    with pytest.raises(RankDeficient):
        reduce(ActionMatrix.from_blocks(dependent), 3)

    bad = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    bad[0][0] = [Fraction(1, 3), 0, 0]
    with pytest.raises(ParameterError):
        reduce(ActionMatrix.from_blocks(bad), 3)

    print("[OK] edge cases passed")


def test_model_validation():
    """Eigenvalues must start at 0 and be distinct units otherwise."""
    print("\n" + "=" * 50)
    print("TEST: MaximalModel validation")
    print("=" * 50)

    with pytest.raises(ParameterError):
        MaximalModel(5, (0, 1, 1, 2, 3))
    with pytest.raises(ParameterError):
        MaximalModel(5, (1, 0, 2, 3, 4))
    with pytest.raises(ParameterError):
        MaximalModel(5, (0, 1, 2, 3, 5))

    model = MaximalModel(5, (0, 1, 2, 3, 4))
    basis = basis_from_reduced(reduce(model.action_matrix(), 5))
    assert delta_action_violations(model, basis) == []
    assert idempotent_check(model)

    print("[OK] model validation passed")


def test_random_models():
    """100 seeded models over p in {3, 5, 7}, directly and after a unimodular mix."""
    print("\n" + "=" * 50)
    print("TEST: random maximal models")
    print("=" * 50)

    rng = np.random.default_rng(0)
    for trial in range(100):
        p = (3, 5, 7)[trial % 3]
        model = random_maximal_model(p, rng)
        pair = reduce(model.action_matrix(), p)
        basis = basis_from_reduced(pair)
        assert pair.certificate.verified
        assert pair.D == model.vandermonde
        assert delta_action_violations(model, basis) == [], model
        assert idempotent_check(model, basis), model

        mixed = transformed(model.action_matrix(), random_unimodular(p * p, rng))
        reduced = reduce(mixed, p)
        assert reduced.eliminated
        assert reduced.certificate.verified
        assert lattice_equivalent(basis, basis_from_reduced(reduced), p)

    print("[OK] 100 random models passed")


def test_suite_within_budget():
    """The redmethod suite at its default settings finishes in under 5 s."""
    print("\n" + "=" * 50)
    print("TEST: redmethod suite timing")
    print("=" * 50)

    start = time.perf_counter()
    (result,) = run_suite('redmethod')
    elapsed = time.perf_counter() - start
    print(f"{result.message}, Time: {elapsed:.3f} s")
    assert result.success, result.to_dict()
    assert elapsed < 5.0

    print("[OK] suite timing passed")


def main():
    """Run all tests."""
    print("=" * 60)
    print("REDUCTION METHOD TESTS")
    print("=" * 60)

    test_p_valuation()
    test_reduce_maximal_model()
    test_reduce_identity_and_errors()
    test_model_validation()
    test_random_models()
    test_suite_within_budget()

    print("\n" + "=" * 60)
    print("ALL TESTS COMPLETED")
    print("=" * 60)


if __name__ == "__main__":
    main()
