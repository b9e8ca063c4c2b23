from __future__ import annotations

import random
from fractions import Fraction as F

import pytest

from hodgespec import linalg
from hodgespec.errors import ParseError
from hodgespec.rationals import format_rational, parse_rational, sqrt_floor, sqrt_upper_bound


def test_parse_accepts_integers_and_fractions():
    assert parse_rational("3") == 3
    assert parse_rational("-3") == -3
    assert parse_rational("+3/4") == F(3, 4)
    assert parse_rational(" 6/8 ") == F(3, 4)


@pytest.mark.parametrize("bad", ["1.5", "1e3", "", "a", "3/", "/4", "3/0", "1/-2", "1 / 2"])
def test_parse_rejects_non_rationals(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


def test_format_is_lowest_terms():
    assert format_rational(F(6, 8)) == "3/4"
    assert format_rational(F(8, 4)) == "2"
    assert format_rational(F(0)) == "0"
    assert format_rational(F(-1, 3)) == "-1/3"


def test_sqrt_floor_known_values():
    assert sqrt_floor(F(0)) == 0
    assert sqrt_floor(F(15)) == 3
    assert sqrt_floor(F(16)) == 4
    assert sqrt_floor(F(1, 4)) == 0
    assert sqrt_floor(F(9, 4)) == 1
    assert sqrt_floor(F(25, 4)) == 2
    with pytest.raises(ValueError):
        sqrt_floor(F(-1))


def test_sqrt_bounds_bracket_the_root():
    rng = random.Random(41)
    for _ in range(300):
        value = F(rng.randrange(0, 5000), rng.randrange(1, 60))
        lo = sqrt_floor(value)
        hi = sqrt_upper_bound(value)
        assert lo * lo <= value < (lo + 1) * (lo + 1)
        assert hi * hi >= value


def test_invert_known_matrices():
    eye = linalg.identity(3)
    assert linalg.invert(eye) == eye
    m = ((F(1), F(1, 2)), (F(0), F(1)))
    inv = linalg.invert(m)
    assert inv == ((F(1), F(-1, 2)), (F(0), F(1)))
    singular = ((F(1), F(2)), (F(2), F(4)))
    assert linalg.invert(singular) is None


def test_invert_round_trip_random():
    rng = random.Random(13)
    for _ in range(25):
        n = rng.randrange(1, 5)
        m = tuple(
            tuple(F(rng.randrange(-4, 5), rng.choice((1, 2, 3))) for _ in range(n))
            for _ in range(n)
        )
        inv = linalg.invert(m)
        if inv is None:
            continue
        product = tuple(tuple(sum(m[i][k] * inv[k][j] for k in range(n)) for j in range(n)) for i in range(n))
        assert product == linalg.identity(n)


def test_ldlt_reconstructs_and_certifies():
    g = ((F(2), F(1)), (F(1), F(2)))
    lower, diag = linalg.ldlt(g)
    n = 2
    rebuilt = tuple(
        tuple(sum(lower[i][k] * diag[k] * lower[j][k] for k in range(n)) for j in range(n))
        for i in range(n)
    )
    assert rebuilt == g
    assert all(d > 0 for d in diag)
    with pytest.raises(ValueError):
        linalg.ldlt(((F(0), F(0)), (F(0), F(1))))
    with pytest.raises(ValueError):
        linalg.ldlt(((F(1), F(2)), (F(2), F(1))))  # indefinite


def test_rank_examples():
    assert linalg.rank(()) == 0
    assert linalg.rank(((F(0), F(0)),)) == 0
    assert linalg.rank(((F(1), F(2)), (F(2), F(4)))) == 1
    assert linalg.rank(((F(1), F(0)), (F(0), F(1)), (F(1), F(1)))) == 2
    assert linalg.rank(((F(1, 2), F(1, 3)), (F(1, 5), F(1, 7)))) == 2


def test_rank_invariant_under_row_scaling():
    rng = random.Random(29)
    for _ in range(25):
        nrows, ncols = rng.randrange(1, 5), rng.randrange(1, 5)
        m = [
            [F(rng.randrange(-3, 4), rng.choice((1, 2))) for _ in range(ncols)]
            for _ in range(nrows)
        ]
        scaled = [[x * F(3, 7) for x in row] for row in m]
        assert linalg.rank(m) == linalg.rank(scaled)


def test_gram_and_matvec():
    vectors = ((F(1), F(0)), (F(1), F(2)))
    assert linalg.gram(vectors) == ((F(1), F(1)), (F(1), F(5)))
    assert linalg.matvec(vectors, (F(1), F(1))) == (F(1), F(3))
