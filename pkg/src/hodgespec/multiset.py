"""Truncated eigenvalue multisets with exact rational keys.

A :class:`WeightedSpectrum` is a finite map ``eigenvalue key -> multiplicity``
together with a unit tag and a truncation cutoff.  The guarantee a value of
this type carries is: *every* eigenvalue of the underlying operator with key
at most ``cutoff`` appears, with its exact multiplicity.  The cutoff is part
of the value; every binary operation takes the min of the two cutoffs and
drops entries beyond it.

Unit tags keep flat-torus spectra (keys are eigenvalues divided by 4*pi^2)
from being compared with round-sphere spectra (keys are plain eigenvalues)
by accident.  Cross-unit operations are hard errors, never coercions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import CutoffExceeded, EmptySpectrum, NonpositiveScalar, ParseError, UnitMismatch
from .rationals import format_rational, parse_rational

__all__ = ["Unit", "WeightedSpectrum", "repeated_union"]


class Unit(enum.Enum):
    """Scale tag for eigenvalue keys.

    FOUR_PI_SQUARED: keys are true eigenvalues divided by 4*pi^2 (flat tori,
    where everything is 4*pi^2 times a rational).  PLAIN: keys are the true
    eigenvalues (round spheres with rational squared radius).
    """

    FOUR_PI_SQUARED = "four_pi_squared"
    PLAIN = "plain"


def _as_key(value) -> Fraction:
    key = Fraction(value)
    if key < 0:
        raise ValueError(f"negative eigenvalue key: {key}")
    return key


@dataclass(frozen=True)
class WeightedSpectrum:
    """Weighted set of eigenvalue keys, truncated at ``cutoff``."""

    unit: Unit
    cutoff: Fraction
    entries: tuple[tuple[Fraction, int], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.unit, Unit):
            raise TypeError("unit must be a Unit")
        object.__setattr__(self, "cutoff", Fraction(self.cutoff))
        if self.cutoff < 0:
            raise ValueError("cutoff must be nonnegative")
        previous = None
        for key, mult in self.entries:
            if not isinstance(mult, int) or mult < 1:
                raise ValueError(f"multiplicity must be a positive int, got {mult!r}")
            if previous is not None and key <= previous:
                raise ValueError("entries must be strictly increasing in key")
            if key > self.cutoff:
                raise ValueError(f"key {key} exceeds cutoff {self.cutoff}")
            previous = key

    # -- construction ----------------------------------------------------

    @classmethod
    def from_pairs(
        cls,
        unit: Unit,
        cutoff,
        pairs: Iterable[tuple] = (),
    ) -> "WeightedSpectrum":
        """Aggregate (key, multiplicity) pairs; keys beyond cutoff are rejected."""
        cutoff = Fraction(cutoff)
        acc: dict[Fraction, int] = {}
        for raw_key, mult in pairs:
            key = _as_key(raw_key)
            mult = int(mult)
            if mult == 0:
                continue
            if mult < 0:
                raise ValueError(f"negative multiplicity for key {key}")
            acc[key] = acc.get(key, 0) + mult
        entries = tuple(sorted(acc.items()))
        return cls(unit=unit, cutoff=cutoff, entries=entries)

    @classmethod
    def empty(cls, unit: Unit, cutoff) -> "WeightedSpectrum":
        return cls(unit=unit, cutoff=Fraction(cutoff), entries=())

    # -- accessors --------------------------------------------------------

    def multiplicity(self, key) -> int:
        key = Fraction(key)
        for k, mult in self.entries:
            if k == key:
                return mult
            if k > key:
                break
        return 0

    def is_empty(self) -> bool:
        return not self.entries

    def total_multiplicity(self) -> int:
        return sum(mult for _, mult in self.entries)

    def min_entry(self) -> tuple[Fraction, int]:
        """Smallest key with its multiplicity."""
        if not self.entries:
            raise EmptySpectrum("spectrum has no entries")
        return self.entries[0]

    def __iter__(self) -> Iterator[tuple[Fraction, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    # -- algebra ----------------------------------------------------------

    def _require_same_unit(self, other: "WeightedSpectrum") -> None:
        if self.unit is not other.unit:
            raise UnitMismatch(
                f"cannot combine {self.unit.value} spectrum with {other.unit.value} spectrum"
            )

    def union(self, other: "WeightedSpectrum") -> "WeightedSpectrum":
        """Pointwise sum of multiplicities, truncated at the smaller cutoff."""
        return repeated_union(self, 1, other, 1)

    def difference(self, other: "WeightedSpectrum") -> "WeightedSpectrum":
        """Pointwise max(self - other, 0), truncated at the smaller cutoff."""
        self._require_same_unit(other)
        cutoff = min(self.cutoff, other.cutoff)
        acc = {key: mult for key, mult in self.entries if key <= cutoff}
        for key, mult in other.entries:
            if key in acc:
                remaining = acc[key] - mult
                if remaining > 0:
                    acc[key] = remaining
                else:
                    del acc[key]
        return WeightedSpectrum(self.unit, cutoff, tuple(sorted(acc.items())))

    def scale(self, factor) -> "WeightedSpectrum":
        """Multiply every key (and the cutoff) by a positive rational."""
        factor = Fraction(factor)
        if factor <= 0:
            raise NonpositiveScalar(f"scale factor must be positive, got {factor}")
        entries = tuple((key * factor, mult) for key, mult in self.entries)
        return WeightedSpectrum(self.unit, self.cutoff * factor, entries)

    def truncate(self, bound) -> "WeightedSpectrum":
        """Restrict to keys <= bound; bound must not exceed the cutoff."""
        bound = Fraction(bound)
        if bound > self.cutoff:
            raise CutoffExceeded(f"truncation bound {bound} exceeds cutoff {self.cutoff}")
        entries = tuple((key, mult) for key, mult in self.entries if key <= bound)
        return WeightedSpectrum(self.unit, bound, entries)

    def with_unit(self, unit: Unit) -> "WeightedSpectrum":
        """Reinterpret the keys under another unit tag (keys unchanged).

        Deliberate escape hatch for statements that equate a plain-unit
        spectrum with a 4*pi^2-unit one after an irrational radius change;
        never applied implicitly.
        """
        return WeightedSpectrum(unit, self.cutoff, self.entries)

    def equal_upto(self, other: "WeightedSpectrum", bound) -> bool:
        """Exact equality of multiplicity functions on [0, bound]."""
        self._require_same_unit(other)
        bound = Fraction(bound)
        if bound > self.cutoff or bound > other.cutoff:
            raise CutoffExceeded(
                f"comparison bound {bound} exceeds a cutoff "
                f"({self.cutoff}, {other.cutoff})"
            )
        left = [(k, m) for k, m in self.entries if k <= bound]
        right = [(k, m) for k, m in other.entries if k <= bound]
        return left == right

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "unit": self.unit.value,
            "cutoff": format_rational(self.cutoff),
            "entries": [[format_rational(key), mult] for key, mult in self.entries],
        }

    @classmethod
    def from_json_dict(cls, payload: Mapping) -> "WeightedSpectrum":
        try:
            unit = Unit(payload["unit"])
        except (KeyError, ValueError, TypeError) as exc:
            raise ParseError(f"bad or missing spectrum unit: {exc}") from None
        if "cutoff" not in payload or "entries" not in payload:
            raise ParseError("spectrum payload needs 'unit', 'cutoff' and 'entries'")
        cutoff = parse_rational(str(payload["cutoff"]))
        pairs = []
        for item in payload["entries"]:
            try:
                key_text, mult = item
            except (TypeError, ValueError):
                raise ParseError(f"bad spectrum entry: {item!r}") from None
            if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
                raise ParseError(f"multiplicity must be a positive int: {item!r}")
            pairs.append((parse_rational(str(key_text)), mult))
        try:
            return cls.from_pairs(unit, cutoff, pairs)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


def repeated_union(
    left: WeightedSpectrum, left_count: int, right: WeightedSpectrum, right_count: int
) -> WeightedSpectrum:
    """``left_count`` copies of ``left`` plus ``right_count`` copies of ``right``.

    Counts may be zero (but not both); the cutoff is the min of the two.
    """
    left._require_same_unit(right)
    if left_count < 0 or right_count < 0 or left_count + right_count < 1:
        raise ValueError("copy counts must be nonnegative and not both zero")
    cutoff = min(left.cutoff, right.cutoff)
    acc: dict[Fraction, int] = {}
    for spectrum, count in ((left, left_count), (right, right_count)):
        if count == 0:
            continue
        for key, mult in spectrum.entries:
            if key <= cutoff:
                acc[key] = acc.get(key, 0) + count * mult
    return WeightedSpectrum(left.unit, cutoff, tuple(sorted(acc.items())))
