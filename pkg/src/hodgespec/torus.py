"""Spectra of alpha d delta + beta delta d on flat tori R^n / Lambda.

Keys live in the FOUR_PI_SQUARED unit: the true eigenvalue is 4*pi^2 times
the key.  On p-forms the spectrum is assembled from the scalar Laplace
spectrum A = {|l|^2 : l in the dual lattice} as

    C(n-1, p-1) copies of alpha*A   union   C(n-1, p) copies of beta*A,

with C(n-1, n) = 0 and C(n-1, -1) = 0, so p = n keeps only the alpha side
and p = 0 only the beta side (the codifferential kills functions, leaving
beta * delta d there; p = 0 is flagged as a duality extension).

An operator built with ``generic=True`` models a formally irrational
alpha/beta ratio: the alpha and beta parts are kept as separate weighted
sets and never merged, and cross-terms drop out of multiplicity counts.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DegreeOutOfRange, NonpositiveScalar, UnrepresentedNorm
from .lattice import DualData, Lattice, count_norm, dual, enumerate_norms
from .multiset import Unit, WeightedSpectrum, repeated_union

__all__ = [
    "Branch",
    "TorusOperator",
    "laplace0_spectrum",
    "f_spectrum",
    "f_spectrum_parts",
    "eigenvalue_multiplicity",
    "parallel_kernel_dim",
]


class Branch(enum.Enum):
    """Which family an eigenvalue is read from: alpha*q or beta*q."""

    ALPHA = "alpha"
    BETA = "beta"


@dataclass(frozen=True)
class TorusOperator:
    """alpha d delta + beta delta d on p-forms of R^n / lattice."""

    lattice: Lattice
    p: int
    alpha: Fraction
    beta: Fraction
    generic: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if not 0 <= self.p <= self.lattice.n:
            raise DegreeOutOfRange(f"p={self.p} outside 0..{self.lattice.n}")
        if self.alpha <= 0 or self.beta <= 0:
            raise NonpositiveScalar(f"alpha and beta must be positive, got {self.alpha}, {self.beta}")

    @property
    def n(self) -> int:
        return self.lattice.n

    @property
    def duality_extension(self) -> bool:
        """True on the degree handled beyond the interior statement (p = 0)."""
        return self.p == 0

    @property
    def alpha_copies(self) -> int:
        return comb(self.n - 1, self.p - 1) if self.p >= 1 else 0

    @property
    def beta_copies(self) -> int:
        return comb(self.n - 1, self.p)


def laplace0_spectrum(lattice: Lattice, cutoff, budget: int | None = None) -> WeightedSpectrum:
    """Scalar Laplace spectrum of the torus: keys |l|^2 over the dual lattice."""
    cutoff = Fraction(cutoff)
    table = enumerate_norms(dual(lattice), cutoff, budget=budget)
    return WeightedSpectrum.from_pairs(Unit.FOUR_PI_SQUARED, cutoff, table.counts)


def f_spectrum_parts(
    op: TorusOperator, cutoff, budget: int | None = None
) -> tuple[WeightedSpectrum, WeightedSpectrum]:
    """(alpha part, beta part), each complete up to ``cutoff``, never merged."""
    cutoff = Fraction(cutoff)
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    dual_data = dual(op.lattice)
    table = enumerate_norms(dual_data, cutoff / min(op.alpha, op.beta), budget=budget)
    parts = []
    for scale_factor, copies in ((op.alpha, op.alpha_copies), (op.beta, op.beta_copies)):
        pairs = []
        if copies:
            for norm, count in table.counts:
                key = scale_factor * norm
                if key <= cutoff:
                    pairs.append((key, copies * count))
        parts.append(WeightedSpectrum.from_pairs(Unit.FOUR_PI_SQUARED, cutoff, pairs))
    return parts[0], parts[1]


def f_spectrum(op: TorusOperator, cutoff, budget: int | None = None) -> WeightedSpectrum:
    """Merged spectrum on p-forms, truncated at ``cutoff``."""
    if op.generic:
        raise ValueError("generic-mode operators have no merged spectrum; use f_spectrum_parts")
    alpha_part, beta_part = f_spectrum_parts(op, cutoff, budget=budget)
    return alpha_part.union(beta_part)


def eigenvalue_multiplicity(
    op: TorusOperator, norm, branch: Branch, budget: int | None = None
) -> int:
    """Multiplicity of the eigenvalue read off a dual squared norm ``norm``.

    Branch ALPHA means the eigenvalue key alpha*norm, branch BETA the key
    beta*norm.  The count includes the other family's contribution at the
    same key unless the operator is generic.
    """
    norm = Fraction(norm)
    if norm <= 0:
        raise ValueError("norm must be positive; the zero eigenvalue has its own count")
    dual_data = dual(op.lattice)
    base = count_norm(dual_data, norm, budget=budget)
    if base == 0:
        raise UnrepresentedNorm(f"no dual vector has squared norm {norm}")
    if branch is Branch.ALPHA:
        total = op.alpha_copies * base
        if not op.generic:
            total += op.beta_copies * count_norm(
                dual_data, norm * op.alpha / op.beta, budget=budget
            )
    elif branch is Branch.BETA:
        total = op.beta_copies * base
        if not op.generic:
            total += op.alpha_copies * count_norm(
                dual_data, norm * op.beta / op.alpha, budget=budget
            )
    else:
        raise TypeError(f"branch must be a Branch, got {branch!r}")
    return total


def parallel_kernel_dim(n: int, p: int) -> int:
    """Dimension of the zero eigenspace: the parallel p-forms, C(n, p)."""
    if not 0 <= p <= n:
        raise DegreeOutOfRange(f"p={p} outside 0..{n}")
    return comb(n, p)
