"""Round sphere spectra: series values, eigenspace dimensions, oracle recount."""

import random
from fractions import Fraction as F
from math import comb

import pytest

from hodgespec.errors import BudgetExceeded, DegreeOutOfRange, NonpositiveScalar
from hodgespec.multiset import Unit, WeightedSpectrum
from hodgespec.sphere import (
    Series,
    SphereOperator,
    coincidences,
    dim_V,
    dim_W,
    eigenvalue_details,
    harmonic_form_dims_oracle,
    harmonic_polynomial_dim,
    lambda_k,
    lambda_series_spectrum,
    mu_k,
    mu_series_spectrum,
    scalar_series_spectrum,
    spectrum,
    spectrum_parts,
)


def spec(pairs, cutoff) -> WeightedSpectrum:
    return WeightedSpectrum.from_pairs(Unit.PLAIN, F(cutoff), pairs)


def test_series_values():
    op = SphereOperator(2, 1, F(1), F(1))
    assert lambda_k(op, 1) == 2
    assert mu_k(op, 0) == 2
    wide = SphereOperator(2, 1, F(1), F(1), r_squared=F(4))
    assert lambda_k(wide, 1) == F(1, 2)
    op3 = SphereOperator(3, 1, F(1), F(1))
    assert mu_k(op3, 0) == 3
    assert lambda_k(op3, 1) == 4
    with pytest.raises(ValueError):
        lambda_k(op, 0)
    with pytest.raises(ValueError):
        mu_k(op, -1)


def test_eigenspace_dimensions():
    assert dim_V(3, 1, 1) == 6
    assert dim_W(3, 1, 0) == 4
    assert dim_V(2, 1, 0) == 0
    for k in range(1, 6):
        assert dim_V(2, 1, k) == 2 * k + 1
    for k in range(6):
        assert dim_W(2, 1, k) == 2 * k + 3
    for n in range(2, 7):
        for p in range(1, n):
            assert dim_V(n, p, 1) == comb(n + 1, p + 1)
            assert dim_W(n, p, 0) == comb(n + 1, p)
    with pytest.raises(DegreeOutOfRange):
        dim_V(3, 0, 1)
    with pytest.raises(DegreeOutOfRange):
        dim_W(3, 3, 1)
    with pytest.raises(ValueError):
        dim_V(3, 1, -1)


def test_harmonic_polynomial_dims():
    assert [harmonic_polynomial_dim(3, k) for k in range(4)] == [1, 3, 5, 7]
    assert harmonic_polynomial_dim(2, 0) == 1
    assert all(harmonic_polynomial_dim(2, k) == 2 for k in range(1, 5))
    with pytest.raises(ValueError):
        harmonic_polynomial_dim(0, 1)
    with pytest.raises(ValueError):
        harmonic_polynomial_dim(3, -1)


def test_round_sphere_first_eigenvalues():
    got = spectrum(SphereOperator(3, 1, F(1), F(1)), 4)
    assert got == spec([(3, 4), (4, 6)], 4)
    first = spectrum(SphereOperator(2, 1, F(1), F(1)), 2)
    assert first == spec([(2, 6)], 2)


def test_interior_spectrum_is_strictly_positive():
    rng = random.Random(41)
    for _ in range(8):
        n = rng.randrange(2, 6)
        p = rng.randrange(1, n)
        op = SphereOperator(n, p, F(rng.randrange(1, 4)), F(rng.randrange(1, 4)))
        alpha_part, beta_part = spectrum_parts(op, 30)
        for part in (alpha_part, beta_part):
            assert all(key > 0 for key, _ in part)
        assert spectrum(op, 30).multiplicity(0) == 0


def test_scalar_series_example():
    got = scalar_series_spectrum(2, 1, 1, 6)
    assert got == spec([(0, 1), (2, 3), (6, 5)], 6)


def test_degree_zero_uses_scalar_series():
    op = SphereOperator(2, 0, F(5), F(3))
    alpha_part, beta_part = spectrum_parts(op, 18)
    assert alpha_part.is_empty()
    assert beta_part == scalar_series_spectrum(2, 3, 1, 18)
    assert op.duality_extension
    assert spectrum(op, 18).multiplicity(0) == 1


def test_top_degree_swaps_coefficient_and_isolates_zero():
    op = SphereOperator(2, 2, F(5), F(3))
    alpha_part, beta_part = spectrum_parts(op, 30)
    assert beta_part == spec([(0, 1)], 30)
    assert alpha_part.multiplicity(0) == 0
    assert spectrum(op, 30) == scalar_series_spectrum(2, 5, 1, 30)
    assert op.duality_extension
    assert not SphereOperator(3, 1, F(1), F(1)).duality_extension


def test_hodge_symmetry_swaps_parameters():
    rng = random.Random(42)
    for _ in range(8):
        n = rng.randrange(2, 6)
        p = rng.randrange(0, n + 1)
        alpha = F(rng.randrange(1, 4))
        beta = F(rng.randrange(1, 4), 2)
        r_squared = F(rng.randrange(1, 3))
        left = SphereOperator(n, p, alpha, beta, r_squared)
        right = SphereOperator(n, n - p, beta, alpha, r_squared)
        assert spectrum(left, 20) == spectrum(right, 20)
        if 1 <= p <= n - 1:
            la, lb = spectrum_parts(left, 20)
            ra, rb = spectrum_parts(right, 20)
            assert la == rb and lb == ra


def test_radius_rescales_keys():
    op1 = SphereOperator(3, 1, F(2), F(3))
    op4 = SphereOperator(3, 1, F(2), F(3), r_squared=F(4))
    assert spectrum(op4, 10) == spectrum(op1, 40).scale(F(1, 4))


def test_parameter_scaling_cancels_against_radius():
    base = SphereOperator(3, 2, F(1), F(2))
    for c in (F(2), F(1, 3)):
        moved = SphereOperator(3, 2, c * c, 2 * c * c, r_squared=c * c)
        assert spectrum(base, 25) == spectrum(moved, 25)


def test_merged_spectrum_equals_union_of_parts():
    op = SphereOperator(4, 2, F(2), F(5), r_squared=F(3, 2))
    alpha_part, beta_part = spectrum_parts(op, 40)
    assert spectrum(op, 40) == alpha_part.union(beta_part)


def test_equal_parameters_on_middle_degree_interleave():
    op = SphereOperator(2, 1, F(1), F(1))
    for k in range(5):
        assert mu_k(op, k) == lambda_k(op, k + 1)
    chain = coincidences(op, 100)
    assert chain[:4] == ((1, 0), (2, 1), (3, 2), (4, 3))
    details = eigenvalue_details(op, 12)
    assert details[0].value == 2
    assert details[0].multiplicity == 6
    assert {t.series for t in details[0].terms} == {Series.LAMBDA, Series.MU}


def test_equal_parameters_off_middle_have_no_coincidences():
    op = SphereOperator(3, 1, F(1), F(1))
    assert coincidences(op, 200) == ()


def test_tuned_ratio_puts_first_values_together():
    # alpha/beta = (p+1)(n-p) / (p(n-p+1)) makes mu_0 land on lambda_1
    op = SphereOperator(3, 1, F(4), F(3))
    assert mu_k(op, 0) == lambda_k(op, 1) == 12
    assert coincidences(op, 12)[0] == (1, 0)


def test_generic_mode_suppresses_merges():
    op = SphereOperator(2, 1, F(1), F(1), generic=True)
    assert coincidences(op, 50) == ()
    with pytest.raises(ValueError):
        spectrum(op, 10)
    with pytest.raises(ValueError):
        eigenvalue_details(op, 10)
    alpha_part, beta_part = spectrum_parts(op, 6)
    assert alpha_part == mu_series_spectrum(2, 1, 1, 1, 6)
    assert beta_part == lambda_series_spectrum(2, 1, 1, 1, 6)


def test_details_bookkeeping_matches_merged_spectrum():
    rng = random.Random(43)
    for _ in range(6):
        n = rng.randrange(2, 5)
        p = rng.randrange(0, n + 1)
        op = SphereOperator(n, p, F(rng.randrange(1, 4)), F(rng.randrange(1, 4)))
        merged = spectrum(op, 30)
        details = eigenvalue_details(op, 30)
        assert [d.value for d in details] == [key for key, _ in merged]
        for detail in details:
            assert merged.multiplicity(detail.value) == detail.multiplicity
            for series in (Series.LAMBDA, Series.MU):
                assert sum(1 for t in detail.terms if t.series is series) <= 1


def test_oracle_recounts_series_dimensions():
    assert harmonic_form_dims_oracle(2, 1, 1) == (3, 5)
    assert harmonic_form_dims_oracle(2, 1, 0) == (0, 3)
    for n, p, kmax in ((2, 1, 3), (3, 1, 2), (3, 2, 2)):
        for k in range(kmax + 1):
            assert harmonic_form_dims_oracle(n, p, k) == (dim_V(n, p, k), dim_W(n, p, k))


def test_oracle_budget_and_validation():
    with pytest.raises(BudgetExceeded):
        harmonic_form_dims_oracle(5, 2, 0)
    with pytest.raises(BudgetExceeded):
        harmonic_form_dims_oracle(2, 1, 5)
    with pytest.raises(DegreeOutOfRange):
        harmonic_form_dims_oracle(3, 0, 1)
    with pytest.raises(ValueError):
        harmonic_form_dims_oracle(3, 1, -2)


def test_operator_validation():
    with pytest.raises(ValueError):
        SphereOperator(0, 0, F(1), F(1))
    with pytest.raises(DegreeOutOfRange):
        SphereOperator(2, 3, F(1), F(1))
    with pytest.raises(NonpositiveScalar):
        SphereOperator(2, 1, F(0), F(1))
    with pytest.raises(NonpositiveScalar):
        SphereOperator(2, 1, F(1), F(1), r_squared=F(0))
    with pytest.raises(ValueError):
        spectrum(SphereOperator(2, 1, F(1), F(1)), -1)
    with pytest.raises(DegreeOutOfRange):
        lambda_k(SphereOperator(2, 0, F(1), F(1)), 1)
