"""Exact spectra of the operator family alpha d delta + beta delta d.

The package computes truncated eigenvalue multisets of F = alpha d delta +
beta delta d on p-forms of flat tori R^n / Lattice and round spheres S^n,
decides isospectrality up to a cutoff, and runs the constructive inverse
algorithms that read parameters back off a spectrum.  Everything is exact:
rationals throughout, no floating point anywhere.
"""

from __future__ import annotations

from . import exterior, isospec, lattice, linalg, multiset, rationals, sphere, torus
from .errors import (
    BoxTooLarge,
    BranchAmbiguous,
    BudgetExceeded,
    CutoffExceeded,
    CutoffTooSmall,
    DegreeOutOfRange,
    DegreeZero,
    DimensionMismatch,
    EmptyInput,
    EmptySpectrum,
    Error,
    NonpositiveMin,
    NonpositiveScalar,
    NotInImage,
    ParseError,
    SingularBasis,
    UnitMismatch,
    UnrepresentedNorm,
    ZeroCovector,
)
from .exterior import (
    CovectorAction,
    Poly,
    PolyForm,
    contract,
    contract_position,
    d_flat,
    delta_flat,
    hodge_star,
    hodge_star_inverse,
    homogeneous_exponents,
    principal_symbol,
    principal_symbol_inverse,
    wedge,
)
from .isospec import (
    RecoveryResult,
    first_divergence,
    is_isospectral_upto,
    reconstruct_base,
    recover_radius,
    recover_sphere_params,
    recover_torus_params,
    scaling_transfer,
)
from .lattice import (
    BUDGET_ENV_VAR,
    DEFAULT_BUDGET,
    DualData,
    Lattice,
    NormTable,
    brute_force_enumerate,
    count_norm,
    dual,
    enumerate_norms,
    standard_lattice,
)
from .multiset import Unit, WeightedSpectrum, repeated_union
from .rationals import format_rational, parse_rational, sqrt_floor, sqrt_upper_bound
from .sphere import (
    Series,
    SphereEigenvalue,
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
)
from .torus import (
    Branch,
    TorusOperator,
    eigenvalue_multiplicity,
    f_spectrum,
    f_spectrum_parts,
    laplace0_spectrum,
    parallel_kernel_dim,
)

__version__ = "0.1.0"

__all__ = [
    "BUDGET_ENV_VAR",
    "Branch",
    "BoxTooLarge",
    "BranchAmbiguous",
    "BudgetExceeded",
    "CovectorAction",
    "CutoffExceeded",
    "CutoffTooSmall",
    "DEFAULT_BUDGET",
    "DegreeOutOfRange",
    "DegreeZero",
    "DimensionMismatch",
    "DualData",
    "EmptyInput",
    "EmptySpectrum",
    "Error",
    "Lattice",
    "NonpositiveMin",
    "NonpositiveScalar",
    "NormTable",
    "NotInImage",
    "ParseError",
    "Poly",
    "PolyForm",
    "RecoveryResult",
    "Series",
    "SingularBasis",
    "SphereEigenvalue",
    "SphereOperator",
    "TorusOperator",
    "Unit",
    "UnitMismatch",
    "UnrepresentedNorm",
    "WeightedSpectrum",
    "ZeroCovector",
    "brute_force_enumerate",
    "coincidences",
    "contract",
    "contract_position",
    "count_norm",
    "d_flat",
    "delta_flat",
    "dim_V",
    "dim_W",
    "dual",
    "eigenvalue_details",
    "eigenvalue_multiplicity",
    "enumerate_norms",
    "exterior",
    "f_spectrum",
    "f_spectrum_parts",
    "first_divergence",
    "format_rational",
    "harmonic_form_dims_oracle",
    "harmonic_polynomial_dim",
    "hodge_star",
    "hodge_star_inverse",
    "homogeneous_exponents",
    "is_isospectral_upto",
    "isospec",
    "lambda_k",
    "lambda_series_spectrum",
    "laplace0_spectrum",
    "lattice",
    "linalg",
    "mu_k",
    "mu_series_spectrum",
    "multiset",
    "parallel_kernel_dim",
    "parse_rational",
    "principal_symbol",
    "principal_symbol_inverse",
    "rationals",
    "reconstruct_base",
    "recover_radius",
    "recover_sphere_params",
    "recover_torus_params",
    "repeated_union",
    "scalar_series_spectrum",
    "scaling_transfer",
    "sphere",
    "sqrt_floor",
    "sqrt_upper_bound",
    "standard_lattice",
    "torus",
    "wedge",
]
