"""Full-rank rational lattices, dual bases, and exact norm enumeration.

A lattice is given by a basis of R^n with rational coordinates.  The dual
basis pairs to the identity against the primal one, so spectra of flat tori
R^n / Lambda reduce to counting dual vectors of a given squared length.

Two enumeration routes are provided.  ``enumerate_norms`` walks coordinate
layers using the LDL^T factorization of the dual Gram matrix: at each layer
the admissible integer range is bracketed by exact integer square roots of
cleared-denominator quantities (rounded outward, then filtered by an exact
comparison), so no float ever decides membership.  ``brute_force_enumerate``
is the deliberately dumb reference: it scans the full integer box given by
the per-coordinate bound x_i^2 <= Q * <b_i, b_i> (from x_i = <l, b_i> and
Cauchy-Schwarz) and rechecks every cell.  Both count the zero vector.

The environment variable HODGESPEC_BUDGET caps enumeration work for both.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import linalg
from .errors import BoxTooLarge, BudgetExceeded, ParseError, SingularBasis
from .rationals import format_rational, parse_rational, sqrt_floor, sqrt_upper_bound

__all__ = [
    "Lattice",
    "DualData",
    "NormTable",
    "standard_lattice",
    "dual",
    "enumerate_norms",
    "count_norm",
    "brute_force_enumerate",
    "DEFAULT_BUDGET",
    "BUDGET_ENV_VAR",
]

DEFAULT_BUDGET = 5_000_000
BUDGET_ENV_VAR = "HODGESPEC_BUDGET"


def _resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return int(budget)
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ParseError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ParseError(f"{BUDGET_ENV_VAR} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Lattice:
    """Full-rank lattice; ``basis[i]`` is the i-th basis vector."""

    basis: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        basis = tuple(tuple(Fraction(x) for x in row) for row in self.basis)
        object.__setattr__(self, "basis", basis)
        n = len(basis)
        if n < 1:
            raise ValueError("lattice needs at least one basis vector")
        if any(len(row) != n for row in basis):
            raise ValueError("basis must be a square matrix")

    @property
    def n(self) -> int:
        return len(self.basis)

    def scaled(self, factor) -> "Lattice":
        factor = Fraction(factor)
        if factor == 0:
            raise ValueError("scale factor must be nonzero")
        return Lattice(tuple(tuple(factor * x for x in row) for row in self.basis))

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "basis": [[format_rational(x) for x in row] for row in self.basis],
            "layout": "row-major",
        }

    @classmethod
    def from_json_dict(cls, payload: Mapping) -> "Lattice":
        try:
            n = payload["n"]
            rows = payload["basis"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"lattice payload needs 'n' and 'basis': {exc}") from None
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ParseError(f"lattice dimension must be a positive int, got {n!r}")
        layout = payload.get("layout", "row-major")
        if layout not in ("row-major", "column-major"):
            raise ParseError(f"unknown basis layout {layout!r}")
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ParseError(f"basis must be {n}x{n}")
        matrix = tuple(tuple(parse_rational(str(x)) for x in row) for row in rows)
        if layout == "column-major":
            matrix = tuple(zip(*matrix))
        return cls(matrix)


def standard_lattice(n: int) -> Lattice:
    """Z^n with the identity basis."""
    return Lattice(linalg.identity(n))


@dataclass(frozen=True)
class DualData:
    """A lattice with its dual basis and certified Gram data.

    ``ldl_lower``/``ldl_diag`` factor the dual Gram matrix as L diag(d) L^T
    with unit lower-triangular L; the strictly positive pivots certify
    positive-definiteness and drive the layered enumeration.
    """

    lattice: Lattice
    dual_basis: tuple[tuple[Fraction, ...], ...]
    gram: tuple[tuple[Fraction, ...], ...]
    dual_gram: tuple[tuple[Fraction, ...], ...]
    ldl_lower: tuple[tuple[Fraction, ...], ...]
    ldl_diag: tuple[Fraction, ...]


def dual(lattice: Lattice) -> DualData:
    """Dual basis (pairing to the identity) plus Gram matrices and LDL^T."""
    inverse = linalg.invert(lattice.basis)
    if inverse is None:
        raise SingularBasis("lattice basis is singular")
    dual_vectors = tuple(tuple(col) for col in zip(*inverse))
    gram = linalg.gram(lattice.basis)
    dual_gram = linalg.gram(dual_vectors)
    lower, diag = linalg.ldlt(dual_gram)
    return DualData(
        lattice=lattice,
        dual_basis=dual_vectors,
        gram=gram,
        dual_gram=dual_gram,
        ldl_lower=lower,
        ldl_diag=diag,
    )


@dataclass(frozen=True)
class NormTable:
    """Counts of dual vectors by squared norm, complete up to ``bound``."""

    bound: Fraction
    counts: tuple[tuple[Fraction, int], ...]

    def count(self, norm) -> int:
        norm = Fraction(norm)
        for value, count in self.counts:
            if value == norm:
                return count
            if value > norm:
                break
        return 0

    def norms(self) -> tuple[Fraction, ...]:
        return tuple(value for value, _ in self.counts)

    def to_json_dict(self) -> dict:
        return {
            "bound": format_rational(self.bound),
            "counts": [[format_rational(value), count] for value, count in self.counts],
        }


def enumerate_norms(dual_data: DualData, bound, budget: int | None = None) -> NormTable:
    """Exact counts of dual vectors with squared norm <= bound (zero included)."""
    bound = Fraction(bound)
    if bound < 0:
        raise ValueError("enumeration bound must be nonnegative")
    limit = _resolve_budget(budget)
    n = dual_data.lattice.n
    lower, diag = dual_data.ldl_lower, dual_data.ldl_diag
    counts: dict[Fraction, int] = {}
    coords = [0] * n
    visited = 0

    def descend(level: int, remaining: Fraction, norm_so_far: Fraction) -> None:
        nonlocal visited
        if level < 0:
            counts[norm_so_far] = counts.get(norm_so_far, 0) + 1
            return
        center = sum(
            (lower[j][level] * coords[j] for j in range(level + 1, n)), Fraction(0)
        )
        radius = sqrt_upper_bound(remaining / diag[level])
        low = math.ceil(-center - radius)
        high = math.floor(-center + radius)
        for x in range(low, high + 1):
            visited += 1
            if visited > limit:
                raise BudgetExceeded(
                    f"norm enumeration exceeded budget of {limit} candidate visits"
                )
            offset = x + center
            contribution = diag[level] * offset * offset
            if contribution <= remaining:
                coords[level] = x
                descend(level - 1, remaining - contribution, norm_so_far + contribution)
        coords[level] = 0

    descend(n - 1, bound, Fraction(0))
    return NormTable(bound=bound, counts=tuple(sorted(counts.items())))


def count_norm(dual_data: DualData, norm, budget: int | None = None) -> int:
    """Number of dual vectors of exactly the given squared norm."""
    norm = Fraction(norm)
    if norm < 0:
        return 0
    return enumerate_norms(dual_data, norm, budget=budget).count(norm)


def brute_force_enumerate(dual_data: DualData, bound, budget: int | None = None) -> NormTable:
    """Reference enumeration: scan the Cauchy-Schwarz box, recheck every cell."""
    bound = Fraction(bound)
    if bound < 0:
        raise ValueError("enumeration bound must be nonnegative")
    limit = _resolve_budget(budget)
    n = dual_data.lattice.n
    radii = [sqrt_floor(bound * dual_data.gram[i][i]) for i in range(n)]
    cells = 1
    for r in radii:
        cells *= 2 * r + 1
    if cells > limit:
        raise BoxTooLarge(f"brute-force box has {cells} cells, budget is {limit}")
    dual_gram = dual_data.dual_gram
    counts: dict[Fraction, int] = {}
    for coords in itertools.product(*(range(-r, r + 1) for r in radii)):
        norm = Fraction(0)
        for i in range(n):
            if coords[i] == 0:
                continue
            row = dual_gram[i]
            norm += row[i] * coords[i] * coords[i]
            for j in range(i + 1, n):
                if coords[j] != 0:
                    norm += 2 * row[j] * coords[i] * coords[j]
        if norm <= bound:
            counts[norm] = counts.get(norm, 0) + 1
    return NormTable(bound=bound, counts=tuple(sorted(counts.items())))
