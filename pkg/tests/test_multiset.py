from __future__ import annotations

import random
from fractions import Fraction as F

import pytest

from hodgespec.errors import CutoffExceeded, EmptySpectrum, NonpositiveScalar, ParseError, UnitMismatch
from hodgespec.multiset import Unit, WeightedSpectrum, repeated_union


def spec(pairs, cutoff, unit=Unit.PLAIN):
    return WeightedSpectrum.from_pairs(unit, cutoff, [(F(k), m) for k, m in pairs])


def random_spectrum(rng, cutoff=F(20), unit=Unit.PLAIN):
    pairs = []
    for _ in range(rng.randrange(0, 8)):
        key = F(rng.randrange(0, 40), rng.choice((1, 2, 4)))
        if key <= cutoff:
            pairs.append((key, rng.randrange(1, 5)))
    return WeightedSpectrum.from_pairs(unit, cutoff, pairs)


def test_from_pairs_aggregates_and_sorts():
    w = spec([(3, 1), (0, 2), (3, 2)], 5)
    assert w.entries == ((F(0), 2), (F(3), 3))
    assert w.multiplicity(3) == 3
    assert w.multiplicity(7) == 0
    assert w.total_multiplicity() == 5
    assert len(w) == 2 and list(w) == [(F(0), 2), (F(3), 3)]


def test_construction_rejects_bad_data():
    with pytest.raises(ValueError):
        spec([(6, 1)], 5)  # key beyond cutoff
    with pytest.raises(ValueError):
        spec([(1, -2)], 5)
    with pytest.raises(ValueError):
        WeightedSpectrum.from_pairs(Unit.PLAIN, 5, [(F(-1), 1)])
    with pytest.raises(ValueError):
        WeightedSpectrum(Unit.PLAIN, F(-1), ())
    with pytest.raises(ValueError):
        WeightedSpectrum(Unit.PLAIN, F(5), ((F(2), 1), (F(1), 1)))
    with pytest.raises(TypeError):
        WeightedSpectrum("plain", F(5), ())


def test_zero_multiplicity_pairs_are_dropped():
    w = WeightedSpectrum.from_pairs(Unit.PLAIN, 5, [(F(1), 0), (F(2), 1)])
    assert w.entries == ((F(2), 1),)


def test_union_pointwise_addition():
    left = spec([(0, 1), (1, 2)], 4)
    right = spec([(1, 1), (3, 1)], 4)
    assert left.union(right).entries == ((F(0), 1), (F(1), 3), (F(3), 1))


def test_union_with_empty_is_identity():
    w = spec([(0, 1), (2, 5)], 9)
    assert w.union(WeightedSpectrum.empty(Unit.PLAIN, 9)) == w


def test_union_of_two_scalings():
    # 1*A joined with 2*A for A = {0, 1, 4}
    a = spec([(0, 1), (1, 1), (4, 1)], 8)
    merged = a.scale(1).union(a.scale(2))
    assert merged.entries == ((F(0), 2), (F(1), 1), (F(2), 1), (F(4), 1), (F(8), 1))


def test_union_takes_min_cutoff_and_drops_beyond():
    left = spec([(1, 1), (6, 1)], 8)
    right = spec([(1, 1)], 3)
    merged = left.union(right)
    assert merged.cutoff == 3
    assert merged.entries == ((F(1), 2),)


def test_union_requires_matching_units():
    left = spec([(1, 1)], 4, Unit.PLAIN)
    right = spec([(1, 1)], 4, Unit.FOUR_PI_SQUARED)
    with pytest.raises(UnitMismatch):
        left.union(right)


def test_repeated_union_matches_union_at_count_one():
    rng = random.Random(11)
    for _ in range(30):
        a, b = random_spectrum(rng), random_spectrum(rng)
        assert repeated_union(a, 1, b, 1) == a.union(b)


def test_repeated_union_scales_multiplicities():
    w = spec([(2, 1)], 4)
    empty = WeightedSpectrum.empty(Unit.PLAIN, 4)
    assert repeated_union(w, 3, empty, 0).entries == ((F(2), 3),)
    assert repeated_union(spec([(1, 1)], 4), 2, spec([(1, 1)], 4), 1).entries == ((F(1), 3),)


def test_repeated_union_rejects_bad_counts():
    w = spec([(2, 1)], 4)
    with pytest.raises(ValueError):
        repeated_union(w, 0, w, 0)
    with pytest.raises(ValueError):
        repeated_union(w, -1, w, 2)


def test_difference_clamps_at_zero():
    assert spec([(1, 3)], 4).difference(spec([(1, 1)], 4)).entries == ((F(1), 2),)
    assert spec([(1, 1)], 4).difference(spec([(1, 5)], 4)).is_empty()
    left = spec([(0, 2), (1, 1), (2, 1)], 4)
    assert left.difference(spec([(0, 2)], 4)).entries == ((F(1), 1), (F(2), 1))


def test_difference_undoes_union():
    rng = random.Random(7)
    for _ in range(40):
        a, b = random_spectrum(rng), random_spectrum(rng)
        assert a.union(b).difference(b) == a.truncate(min(a.cutoff, b.cutoff))


def test_scale_moves_keys_and_cutoff():
    w = spec([(1, 4)], 3)
    assert w.scale(1) == w
    doubled = w.scale(2)
    assert doubled.entries == ((F(2), 4),)
    assert doubled.cutoff == 6
    with pytest.raises(NonpositiveScalar):
        w.scale(0)
    with pytest.raises(NonpositiveScalar):
        w.scale(F(-1, 2))


def test_scale_composes_and_preserves_total():
    rng = random.Random(23)
    for _ in range(30):
        w = random_spectrum(rng)
        r = F(rng.randrange(1, 7), rng.randrange(1, 7))
        s = F(rng.randrange(1, 7), rng.randrange(1, 7))
        assert w.scale(r).scale(s) == w.scale(r * s)
        assert w.scale(r).total_multiplicity() == w.total_multiplicity()


def test_min_entry():
    assert spec([(0, 2), (3, 1)], 4).min_entry() == (F(0), 2)
    assert spec([(3, 4)], 4).min_entry() == (F(3), 4)
    with pytest.raises(EmptySpectrum):
        WeightedSpectrum.empty(Unit.PLAIN, 4).min_entry()


def test_min_of_union_is_min_of_mins():
    rng = random.Random(5)
    for _ in range(40):
        a, b = random_spectrum(rng), random_spectrum(rng)
        merged = a.union(b)
        if merged.is_empty():
            continue
        candidates = [w.min_entry()[0] for w in (a, b) if not w.is_empty()]
        assert merged.min_entry()[0] == min(candidates)


def test_union_commutative_associative():
    rng = random.Random(3)
    for _ in range(30):
        a, b, c = (random_spectrum(rng) for _ in range(3))
        assert a.union(b) == b.union(a)
        assert a.union(b).union(c) == a.union(b.union(c))


def test_truncate_restricts_keys():
    w = spec([(1, 1), (9, 2)], 10)
    cut = w.truncate(2)
    assert cut.entries == ((F(1), 1),)
    assert cut.cutoff == 2
    with pytest.raises(CutoffExceeded):
        w.truncate(11)


def test_equal_upto():
    w = spec([(1, 1), (3, 2)], 5)
    assert w.equal_upto(w, 5)
    other = spec([(1, 1), (3, 2), (4, 1)], 5)
    assert w.equal_upto(other, 3)
    assert not w.equal_upto(other, 5)
    with pytest.raises(CutoffExceeded):
        w.equal_upto(other, 6)
    with pytest.raises(UnitMismatch):
        w.equal_upto(spec([(1, 1)], 5, Unit.FOUR_PI_SQUARED), 5)


def test_with_unit_retags_without_touching_keys():
    w = spec([(1, 2)], 4, Unit.PLAIN)
    retagged = w.with_unit(Unit.FOUR_PI_SQUARED)
    assert retagged.unit is Unit.FOUR_PI_SQUARED
    assert retagged.entries == w.entries
    assert retagged.cutoff == w.cutoff


def test_json_round_trip():
    w = spec([(0, 2), (F(1, 4), 1), (8, 3)], F(17, 2), Unit.FOUR_PI_SQUARED)
    payload = w.to_json_dict()
    assert payload == {
        "unit": "four_pi_squared",
        "cutoff": "17/2",
        "entries": [["0", 2], ["1/4", 1], ["8", 3]],
    }
    assert WeightedSpectrum.from_json_dict(payload) == w


def test_from_json_rejects_malformed_payloads():
    good = spec([(1, 1)], 4).to_json_dict()
    for breakage in (
        lambda d: d.pop("unit"),
        lambda d: d.pop("cutoff"),
        lambda d: d.pop("entries"),
        lambda d: d.update(unit="lightyears"),
        lambda d: d.update(cutoff="1.5"),
        lambda d: d.update(entries=[["1", 0]]),
        lambda d: d.update(entries=[["1", True]]),
        lambda d: d.update(entries=[["1"]]),
        lambda d: d.update(entries=[["1", 1], ["9", 1]]),  # key beyond cutoff
        lambda d: d.update(entries=[["-1", 1]]),
    ):
        payload = dict(good)
        breakage(payload)
        with pytest.raises(ParseError):
            WeightedSpectrum.from_json_dict(payload)
