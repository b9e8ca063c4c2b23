"""Spectra of alpha d delta + beta delta d on round spheres S^n of radius r.

For 1 <= p <= n-1 the spectrum on p-forms is two interleaved series with
keys in the PLAIN unit (true eigenvalues; r^2 must be rational):

    lambda_k = beta * (k+p) * (k+n-p-1) / r^2   (k >= 1, dimension dim_V)
    mu_k     = alpha * (k+p) * (k+n-p+1) / r^2  (k >= 0, dimension dim_W)

Both dimension formulas come from spaces of componentwise-harmonic,
co-closed, homogeneous polynomial forms on R^{n+1};
``harmonic_form_dims_oracle`` rebuilds those spaces with exact linear
algebra and recounts the dimensions from scratch.

p = 0 carries beta times the scalar Laplace series k(k+n-1)/r^2 with the
classical harmonic multiplicities (the codifferential kills functions), and
p = n is p = 0 with alpha and beta swapped; both are flagged as duality
extensions on the operator.  ``generic=True`` again means a formally
irrational alpha/beta: parts stay unmerged and coincidences are suppressed.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from . import linalg
from .errors import BudgetExceeded, DegreeOutOfRange, NonpositiveScalar
from .exterior import (
    PolyForm,
    Poly,
    contract_position,
    d_flat,
    delta_flat,
    homogeneous_exponents,
)
from .multiset import Unit, WeightedSpectrum

__all__ = [
    "Series",
    "SeriesTerm",
    "SphereEigenvalue",
    "SphereOperator",
    "lambda_k",
    "mu_k",
    "dim_V",
    "dim_W",
    "harmonic_polynomial_dim",
    "lambda_series_spectrum",
    "mu_series_spectrum",
    "scalar_series_spectrum",
    "spectrum_parts",
    "spectrum",
    "eigenvalue_details",
    "coincidences",
    "harmonic_form_dims_oracle",
]

ORACLE_MAX_AMBIENT_DIM = 5
ORACLE_MAX_POLY_DEGREE = 4


class Series(enum.Enum):
    LAMBDA = "lambda"
    MU = "mu"


@dataclass(frozen=True)
class SphereOperator:
    """alpha d delta + beta delta d on p-forms of S^n with squared radius r_squared."""

    n: int
    p: int
    alpha: Fraction
    beta: Fraction
    r_squared: Fraction = Fraction(1)
    generic: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        object.__setattr__(self, "r_squared", Fraction(self.r_squared))
        if self.n < 1:
            raise ValueError(f"sphere dimension must be at least 1, got {self.n}")
        if not 0 <= self.p <= self.n:
            raise DegreeOutOfRange(f"p={self.p} outside 0..{self.n}")
        if self.alpha <= 0 or self.beta <= 0 or self.r_squared <= 0:
            raise NonpositiveScalar(
                f"alpha, beta, r_squared must be positive, got "
                f"{self.alpha}, {self.beta}, {self.r_squared}"
            )

    @property
    def duality_extension(self) -> bool:
        """True on the degrees handled via duality (p = 0 and p = n)."""
        return self.p == 0 or self.p == self.n

    def _require_interior(self) -> None:
        if not 1 <= self.p <= self.n - 1:
            raise DegreeOutOfRange(
                f"series formulas need 1 <= p <= n-1, got p={self.p}, n={self.n}"
            )


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise AssertionError(f"{what} came out non-integral: {value}")
    return int(value)


def dim_V(n: int, p: int, k: int) -> int:
    """Dimension of the k-th eigenspace on the lambda side (zero at k = 0)."""
    if not 1 <= p <= n - 1:
        raise DegreeOutOfRange(f"dim_V needs 1 <= p <= n-1, got p={p}, n={n}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return 0
    value = Fraction(
        factorial(n + k - 1) * (n + 2 * k - 1),
        factorial(p) * factorial(k - 1) * factorial(n - p - 1) * (n + k - p - 1) * (k + p),
    )
    return _as_int(value, f"dim_V({n},{p},{k})")


def dim_W(n: int, p: int, k: int) -> int:
    """Dimension of the k-th eigenspace on the mu side (defined for k >= 0)."""
    if not 1 <= p <= n - 1:
        raise DegreeOutOfRange(f"dim_W needs 1 <= p <= n-1, got p={p}, n={n}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    value = Fraction(
        factorial(n + k) * (n + 2 * k + 1),
        factorial(p - 1) * factorial(k) * factorial(n - p) * (n + k - p + 1) * (k + p),
    )
    return _as_int(value, f"dim_W({n},{p},{k})")


def harmonic_polynomial_dim(nvars: int, degree: int) -> int:
    """Dimension of harmonic homogeneous polynomials of a given degree."""
    if nvars < 1 or degree < 0:
        raise ValueError("need nvars >= 1 and degree >= 0")
    total = comb(nvars + degree - 1, degree)
    if degree >= 2:
        total -= comb(nvars + degree - 3, degree - 2)
    return total


def lambda_k(op: SphereOperator, k: int) -> Fraction:
    """k-th eigenvalue of the beta series, k >= 1."""
    op._require_interior()
    if k < 1:
        raise ValueError("lambda series starts at k = 1")
    return op.beta * (k + op.p) * (k + op.n - op.p - 1) / op.r_squared


def mu_k(op: SphereOperator, k: int) -> Fraction:
    """k-th eigenvalue of the alpha series, k >= 0."""
    op._require_interior()
    if k < 0:
        raise ValueError("mu series starts at k = 0")
    return op.alpha * (k + op.p) * (k + op.n - op.p + 1) / op.r_squared


def _series_spectrum(unit: Unit, cutoff: Fraction, values) -> WeightedSpectrum:
    pairs = []
    for value, mult in values:
        if value > cutoff:
            break
        if mult:
            pairs.append((value, mult))
    return WeightedSpectrum.from_pairs(unit, cutoff, pairs)


def lambda_series_spectrum(
    n: int, p: int, coefficient, r_squared, cutoff, unit: Unit = Unit.PLAIN
) -> WeightedSpectrum:
    """The beta-scaled series as a weighted set, truncated at ``cutoff``."""
    coefficient, r_squared, cutoff = Fraction(coefficient), Fraction(r_squared), Fraction(cutoff)

    def values():
        k = 1
        while True:
            yield coefficient * (k + p) * (k + n - p - 1) / r_squared, dim_V(n, p, k)
            k += 1

    return _series_spectrum(unit, cutoff, values())


def mu_series_spectrum(
    n: int, p: int, coefficient, r_squared, cutoff, unit: Unit = Unit.PLAIN
) -> WeightedSpectrum:
    """The alpha-scaled series as a weighted set, truncated at ``cutoff``."""
    coefficient, r_squared, cutoff = Fraction(coefficient), Fraction(r_squared), Fraction(cutoff)

    def values():
        k = 0
        while True:
            yield coefficient * (k + p) * (k + n - p + 1) / r_squared, dim_W(n, p, k)
            k += 1

    return _series_spectrum(unit, cutoff, values())


def scalar_series_spectrum(
    n: int, coefficient, r_squared, cutoff, unit: Unit = Unit.PLAIN
) -> WeightedSpectrum:
    """Scaled scalar Laplace series k(k+n-1)/r^2 with harmonic multiplicities."""
    coefficient, r_squared, cutoff = Fraction(coefficient), Fraction(r_squared), Fraction(cutoff)

    def values():
        k = 0
        while True:
            yield coefficient * k * (k + n - 1) / r_squared, harmonic_polynomial_dim(n + 1, k)
            k += 1

    return _series_spectrum(unit, cutoff, values())


def spectrum_parts(
    op: SphereOperator, cutoff
) -> tuple[WeightedSpectrum, WeightedSpectrum]:
    """(alpha part, beta part), each complete up to ``cutoff``, never merged."""
    cutoff = Fraction(cutoff)
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    if op.p == 0:
        alpha_part = WeightedSpectrum.empty(Unit.PLAIN, cutoff)
        beta_part = scalar_series_spectrum(op.n, op.beta, op.r_squared, cutoff)
        return alpha_part, beta_part
    if op.p == op.n:
        # Duality image of p = 0: the alpha-scaled scalar series; its zero
        # eigenvalue (the volume form) sits on the beta side of the split.
        full = scalar_series_spectrum(op.n, op.alpha, op.r_squared, cutoff)
        beta_part = WeightedSpectrum.from_pairs(Unit.PLAIN, cutoff, [(Fraction(0), 1)])
        return full.difference(beta_part), beta_part
    alpha_part = mu_series_spectrum(op.n, op.p, op.alpha, op.r_squared, cutoff)
    beta_part = lambda_series_spectrum(op.n, op.p, op.beta, op.r_squared, cutoff)
    return alpha_part, beta_part


def spectrum(op: SphereOperator, cutoff) -> WeightedSpectrum:
    """Merged spectrum on p-forms, truncated at ``cutoff``."""
    if op.generic:
        raise ValueError("generic-mode operators have no merged spectrum; use spectrum_parts")
    alpha_part, beta_part = spectrum_parts(op, cutoff)
    return alpha_part.union(beta_part)


@dataclass(frozen=True)
class SeriesTerm:
    series: Series
    k: int
    dim: int


@dataclass(frozen=True)
class SphereEigenvalue:
    """One merged eigenvalue with the series terms that meet there."""

    value: Fraction
    terms: tuple[SeriesTerm, ...]

    @property
    def multiplicity(self) -> int:
        return sum(term.dim for term in self.terms)


def eigenvalue_details(op: SphereOperator, cutoff) -> tuple[SphereEigenvalue, ...]:
    """Merged eigenvalues <= cutoff with their series bookkeeping."""
    if op.generic:
        raise ValueError("generic-mode operators do not merge series")
    cutoff = Fraction(cutoff)
    found: dict[Fraction, list[SeriesTerm]] = {}

    def collect(series: Series, start: int, value_at, dim_at) -> None:
        k = start
        while True:
            value = value_at(k)
            if value > cutoff:
                break
            dim = dim_at(k)
            if dim:
                found.setdefault(value, []).append(SeriesTerm(series, k, dim))
            k += 1

    if op.p == 0 or op.p == op.n:
        coefficient = op.beta if op.p == 0 else op.alpha
        collect(
            Series.LAMBDA if op.p == 0 else Series.MU,
            0,
            lambda k: coefficient * k * (k + op.n - 1) / op.r_squared,
            lambda k: harmonic_polynomial_dim(op.n + 1, k),
        )
    else:
        collect(Series.LAMBDA, 1, lambda k: lambda_k(op, k), lambda k: dim_V(op.n, op.p, k))
        collect(Series.MU, 0, lambda k: mu_k(op, k), lambda k: dim_W(op.n, op.p, k))
    return tuple(
        SphereEigenvalue(value, tuple(terms)) for value, terms in sorted(found.items())
    )


def coincidences(op: SphereOperator, cutoff) -> tuple[tuple[int, int], ...]:
    """Pairs (k, l) with lambda_k = mu_l <= cutoff; empty in generic mode."""
    if op.generic:
        return ()
    if not 1 <= op.p <= op.n - 1:
        return ()
    pairs = []
    for detail in eigenvalue_details(op, cutoff):
        lambda_terms = [t for t in detail.terms if t.series is Series.LAMBDA]
        mu_terms = [t for t in detail.terms if t.series is Series.MU]
        # A coincidence inside one series is impossible (values are strictly
        # increasing in k), so each list has at most one element.
        if lambda_terms and mu_terms:
            pairs.append((lambda_terms[0].k, mu_terms[0].k))
    return tuple(pairs)


# -- polynomial-space oracle -------------------------------------------------


def _form_index_tuples(nvars: int, degree: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(nvars), degree))


def _coordinate_layout(
    nvars: int, degree: int, poly_degree: int
) -> tuple[dict[tuple[tuple[int, ...], tuple[int, ...]], int], int]:
    positions: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
    for indices in _form_index_tuples(nvars, degree):
        for exps in homogeneous_exponents(nvars, poly_degree):
            positions[(indices, exps)] = len(positions)
    return positions, len(positions)


def _coords(form: PolyForm, layout: dict, width: int) -> list[Fraction]:
    row = [Fraction(0)] * width
    for indices, poly in form.coeffs.items():
        for exps, coeff in poly.terms.items():
            row[layout[(indices, exps)]] = coeff
    return row


def _space_rows(
    nvars: int, degree: int, poly_degree: int, extra: str | None
) -> tuple[list[list[Fraction]], int, int]:
    """Rows of (laplacian | delta | extra) applied to every basis form.

    ``extra`` is None, "position" (contraction with the position vector) or
    "d" (exterior derivative).  Returns (rows, space dim, prefix width) where
    the prefix covers the laplacian and delta blocks only.
    """
    lap_layout, lap_width = _coordinate_layout(nvars, degree, poly_degree - 2)
    if degree >= 1:
        delta_layout, delta_width = _coordinate_layout(nvars, degree - 1, poly_degree - 1)
    else:
        delta_layout, delta_width = {}, 0
    if extra == "position":
        extra_layout, extra_width = _coordinate_layout(nvars, degree - 1, poly_degree + 1)
    elif extra == "d":
        extra_layout, extra_width = _coordinate_layout(nvars, degree + 1, poly_degree - 1)
    else:
        extra_layout, extra_width = {}, 0

    rows: list[list[Fraction]] = []
    dim = 0
    for indices in _form_index_tuples(nvars, degree):
        for exps in homogeneous_exponents(nvars, poly_degree):
            dim += 1
            form = PolyForm(nvars, degree, {indices: Poly.monomial(nvars, exps, 1)})
            lap_form = PolyForm(
                nvars,
                degree,
                {i: p.laplacian() for i, p in form.coeffs.items() if not p.laplacian().is_zero()},
            )
            row = _coords(lap_form, lap_layout, lap_width)
            if degree >= 1:
                row += _coords(delta_flat(form), delta_layout, delta_width)
            if extra == "position":
                row += _coords(contract_position(form), extra_layout, extra_width)
            elif extra == "d":
                row += _coords(d_flat(form), extra_layout, extra_width)
            rows.append(row)
    return rows, dim, lap_width + delta_width


def harmonic_form_dims_oracle(n: int, p: int, k: int) -> tuple[int, int]:
    """Recount (dim_V, dim_W) from polynomial spaces on R^{n+1}.

    Builds the space of componentwise-harmonic, co-closed, homogeneous
    degree-k p-forms; returns the dimension of its position-contraction
    kernel and the dimension of the image of d on the corresponding
    (p-1)-form space one degree up, checking that the two add up to the
    whole space.
    """
    if not 1 <= p <= n - 1:
        raise DegreeOutOfRange(f"oracle needs 1 <= p <= n-1, got p={p}, n={n}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    nvars = n + 1
    if nvars > ORACLE_MAX_AMBIENT_DIM or k > ORACLE_MAX_POLY_DEGREE:
        raise BudgetExceeded(
            f"oracle instance (n+1={nvars}, k={k}) beyond budget "
            f"(n+1 <= {ORACLE_MAX_AMBIENT_DIM}, k <= {ORACLE_MAX_POLY_DEGREE})"
        )

    rows, space_dim, prefix = _space_rows(nvars, p, k, extra="position")
    rank_constraints = linalg.rank([row[:prefix] for row in rows])
    rank_with_position = linalg.rank(rows)
    dim_whole = space_dim - rank_constraints
    dim_ker_nu = space_dim - rank_with_position

    rows_low, space_dim_low, prefix_low = _space_rows(nvars, p - 1, k + 1, extra="d")
    rank_low = linalg.rank([row[:prefix_low] for row in rows_low])
    rank_low_with_d = linalg.rank(rows_low)
    dim_image_d = rank_low_with_d - rank_low

    if dim_whole != dim_ker_nu + dim_image_d:
        raise AssertionError(
            f"decomposition failed for (n={n}, p={p}, k={k}): "
            f"{dim_whole} != {dim_ker_nu} + {dim_image_d}"
        )
    return dim_ker_nu, dim_image_d
