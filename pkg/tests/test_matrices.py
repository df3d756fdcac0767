import math

import numpy as np
import pytest

from icr.errors import (
    AsymmetricMissingError,
    BadDiagonalError,
    NonPositiveEntryError,
    InvalidDimensionsError,
    NonSquareError,
    ReciprocityViolationError,
)
from icr.matrices import (
    SAATY_SCALE,
    consistency_index,
    is_consistent,
    is_scale_value,
    nearest_scale_value,
    perron,
    validate_complete,
    validate_incomplete,
)

from conftest import EXAMPLE1_A2, EXAMPLE1_RAW, random_complete

CONSISTENT_3 = [[1, 2, 6], [1 / 2, 1, 3], [1 / 6, 1 / 3, 1]]


class TestSaatyScale:
    def test_has_17_elements_with_bounds(self):
        assert len(SAATY_SCALE) == 17
        assert SAATY_SCALE[0] == 1 / 9
        assert SAATY_SCALE[-1] == 9
        assert 1.0 in SAATY_SCALE

    def test_closed_under_reciprocal(self):
        for s in SAATY_SCALE:
            assert is_scale_value(1.0 / s)

    def test_nearest_in_log_distance(self):
        assert nearest_scale_value(2.2) == 2
        assert nearest_scale_value(0.14) == 1 / 7


class TestValidateComplete:
    def test_accepts_2x2_reciprocal(self):
        m = validate_complete([[1, 2], [1 / 2, 1]])
        assert m.n == 2

    def test_rejects_reciprocity_violation(self):
        with pytest.raises(ReciprocityViolationError) as exc:
            validate_complete([[1, 2], [2, 1]])
        assert (exc.value.i, exc.value.j) == (0, 1)

    def test_accepts_example1_bounded_completion(self):
        m = validate_complete(EXAMPLE1_A2)
        assert m.n == 4

    def test_rejects_non_square(self):
        with pytest.raises(NonSquareError):
            validate_complete([[1, 2, 3], [1 / 2, 1, 1]])

    def test_rejects_non_positive(self):
        with pytest.raises(NonPositiveEntryError):
            validate_complete([[1, -2], [-1 / 2, 1]])

    def test_rejects_bad_diagonal(self):
        with pytest.raises(BadDiagonalError):
            validate_complete([[2, 2], [1 / 2, 1]])

    def test_size_cap(self):
        n = 16
        with pytest.raises(InvalidDimensionsError):
            validate_complete(np.ones((n, n)))

    def test_decimal_round_trip_tolerated(self):
        # 1/3 printed to 10 decimals and re-read must pass.
        v = float(f"{1/3:.10f}")
        m = validate_complete([[1, 3], [v, 1]])
        assert m.values[1, 0] * m.values[0, 1] == 1.0


class TestValidateIncomplete:
    def test_example1_has_two_missing_pairs(self):
        m = validate_incomplete(EXAMPLE1_RAW)
        assert m.m == 2
        assert m.missing_pairs == ((0, 1), (0, 3))

    def test_asymmetric_missing_rejected(self):
        raw = [[1, None, 2], [2, 1, 3], [1 / 2, 1 / 3, 1]]
        with pytest.raises(AsymmetricMissingError):
            validate_incomplete(raw)

    def test_complete_matrix_is_degenerate_incomplete(self):
        m = validate_incomplete(EXAMPLE1_A2)
        assert m.m == 0
        assert m.is_complete

    def test_minimum_size_is_3(self):
        with pytest.raises(InvalidDimensionsError):
            validate_incomplete([[1, 2], [1 / 2, 1]])


class TestPerron:
    def test_2x2_is_always_consistent(self):
        res = perron(validate_complete([[1, 2], [1 / 2, 1]]))
        assert res.lambda_max == pytest.approx(2, abs=1e-9)

    def test_consistent_3x3(self):
        res = perron(validate_complete(CONSISTENT_3))
        assert res.lambda_max == pytest.approx(3, abs=1e-9)
        assert res.weights == pytest.approx(np.array([6, 3, 1]) / 10, abs=1e-9)

    def test_example1_bounded_completion_lambda(self):
        res = perron(validate_complete(EXAMPLE1_A2))
        assert res.lambda_max == pytest.approx(4.1855, abs=5e-4)

    def test_weights_normalised_and_positive(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            res = perron(random_complete(rng, 6))
            assert res.weights.sum() == pytest.approx(1, abs=1e-12)
            assert (res.weights > 0).all()
            assert res.residual <= 1e-10

    def test_lambda_at_least_n(self):
        rng = np.random.default_rng(4)
        for n in (3, 4, 5, 6):
            for _ in range(20):
                res = perron(random_complete(rng, n))
                assert res.lambda_max >= n - 1e-10


class TestConsistencyIndex:
    def test_zero_for_consistent(self):
        assert consistency_index(validate_complete(CONSISTENT_3)) == \
            pytest.approx(0, abs=1e-9)

    def test_example1_bounded_completion(self):
        ci = consistency_index(validate_complete(EXAMPLE1_A2))
        assert ci == pytest.approx((4.1855 - 4) / 3, abs=5e-4)

    def test_never_negative(self):
        rng = np.random.default_rng(5)
        for _ in range(30):
            assert consistency_index(random_complete(rng, 5)) >= 0


class TestIsConsistent:
    def test_consistent_3x3(self):
        assert is_consistent(validate_complete(CONSISTENT_3))

    def test_inconsistent_3x3(self):
        m = validate_complete([[1, 2, 2], [1 / 2, 1, 2], [1 / 2, 1 / 2, 1]])
        assert not is_consistent(m)

    def test_example1_consistent_completion(self):
        a1 = [[1, 9 / 2, 9, 36], [2 / 9, 1, 2, 8],
              [1 / 9, 1 / 2, 1, 4], [1 / 36, 1 / 8, 1 / 4, 1]]
        assert is_consistent(validate_complete(a1))

    def test_agrees_with_ci_near_zero(self):
        rng = np.random.default_rng(6)
        for _ in range(20):
            m = random_complete(rng, 4)
            ci = consistency_index(m)
            if is_consistent(m, tol=1e-8):
                assert ci < 1e-8
            else:
                assert ci > 0


class TestSpectralProperties:
    """Cross-checks of the power iteration against independent oracles."""

    def test_lambda_equals_n_iff_consistent(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            m = random_complete(rng, 4)
            lam = perron(m).lambda_max
            assert (abs(lam - 4) < 1e-8) == is_consistent(m, tol=1e-8)

    def test_permutation_invariance(self):
        rng = np.random.default_rng(8)
        for n in (3, 4, 5, 6):
            m = random_complete(rng, n)
            p = rng.permutation(n)
            permuted = validate_complete(m.values[np.ix_(p, p)])
            assert consistency_index(permuted) == pytest.approx(
                consistency_index(m), abs=1e-9)

    def test_transpose_same_lambda(self):
        rng = np.random.default_rng(9)
        for _ in range(20):
            m = random_complete(rng, 5)
            mt = validate_complete(m.values.T)
            assert perron(mt, tol=1e-13).lambda_max == pytest.approx(
                perron(m, tol=1e-13).lambda_max, abs=1e-9)

    def test_consistent_weights_reproduce_matrix(self):
        rng = np.random.default_rng(10)
        for _ in range(10):
            # Build a consistent matrix from a random positive vector.
            w = np.exp(rng.normal(size=5))
            a = np.ascontiguousarray(np.outer(w, 1.0 / w))
            m = validate_complete(a)
            res = perron(m)
            ratio = np.outer(res.weights, 1.0 / res.weights)
            assert np.allclose(ratio, m.values, rtol=1e-8)

    def test_3x3_cubic_characteristic_oracle(self):
        # For a 3x3 reciprocal matrix the characteristic polynomial is
        # x^3 - 3x^2 - (t + 1/t - 2) with t = a12 * a23 / a13, so the
        # dominant root can be found independently of power iteration.
        rng = np.random.default_rng(11)
        for _ in range(100):
            a12, a13, a23 = (float(SAATY_SCALE[int(rng.integers(0, 17))])
                             for _ in range(3))
            m = validate_complete([[1, a12, a13],
                                   [1 / a12, 1, a23],
                                   [1 / a13, 1 / a23, 1]])
            t = a12 * a23 / a13
            roots = np.roots([1.0, -3.0, 0.0, -(t + 1.0 / t - 2.0)])
            lam_oracle = max(r.real for r in roots if abs(r.imag) < 1e-9)
            ci_oracle = (lam_oracle - 3) / 2
            assert consistency_index(m) == pytest.approx(ci_oracle, abs=1e-8)
