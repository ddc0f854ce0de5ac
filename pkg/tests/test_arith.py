import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nlrank import discriminant_form, frac_square_sum, gauss_sum, jacobi, square_count
from nlrank.arith import jacobi_bruteforce
from nlrank.errors import BadGenus, EvenDenominator, NonpositiveDenominator, TooLarge
from nlrank.lattices import make_lattice


def test_jacobi_trivial_denominator():
    assert jacobi(5, 1) == 1
    assert jacobi(0, 1) == 1


def test_jacobi_small_values():
    # squares mod 7 are {1,2,4}; squares mod 3 are {1}
    assert jacobi(2, 7) == 1
    assert jacobi(2, 3) == -1


def test_jacobi_zero_and_negatives():
    assert jacobi(0, 3) == 0
    assert jacobi(-1, 3) == jacobi(2, 3)


def test_jacobi_errors():
    with pytest.raises(EvenDenominator):
        jacobi(3, 4)
    with pytest.raises(NonpositiveDenominator):
        jacobi(3, -5)


def test_jacobi_against_euler_oracle_primes():
    for b in [3, 5, 7, 11, 13, 97, 101, 997]:
        for a in range(b):
            assert jacobi(a, b) == jacobi_bruteforce(a, b), (a, b)


@settings(max_examples=200, deadline=None)
@given(
    st.integers(-200, 200),
    st.integers(-200, 200),
    st.integers(1, 249),
)
def test_jacobi_multiplicative_in_numerator(a, a2, half_b):
    b = 2 * half_b + 1
    assert jacobi(a, b) * jacobi(a2, b) == jacobi(a * a2, b)


def test_frac_square_sum_small():
    assert frac_square_sum(2) == Fraction(1, 4)
    assert frac_square_sum(3) == Fraction(5, 8)


def test_frac_square_sum_matches_direct():
    for g in range(2, 60):
        m = 4 * g - 4
        direct = sum(Fraction(k * k, m) - (k * k) // m for k in range(g))
        assert frac_square_sum(g) == direct


def test_frac_square_sum_denominator_divides():
    for g in range(2, 100):
        assert (4 * g - 4) % frac_square_sum(g).denominator == 0


def test_square_count_small():
    assert square_count(2) == 1
    assert square_count(3) == 1
    assert square_count(5) == 2


def test_square_count_bound():
    for g in range(2, 200):
        assert 1 <= square_count(g) <= g


def test_bad_genus():
    with pytest.raises(BadGenus):
        frac_square_sum(1)
    with pytest.raises(BadGenus):
        square_count(0)


def test_gauss_sum_trivial_group():
    df = discriminant_form(make_lattice([[0, 1], [1, 0]]))
    assert gauss_sum(df) == 1


def test_gauss_sum_root_two():
    df = discriminant_form(make_lattice([[2]]))
    assert abs(gauss_sum(df) - (1 + 1j)) < 1e-12


def test_gauss_sum_cap():
    df = discriminant_form(make_lattice([[2]]))
    with pytest.raises(TooLarge):
        gauss_sum(df, cap=1)


def test_milgram_identity(corpus):
    for name, lat in corpus.items():
        df = discriminant_form(lat)
        expected = math.sqrt(df.cardinality) * cmath.exp(
            2j * cmath.pi * df.sig_mod_8 / 8
        )
        assert abs(gauss_sum(df) - expected) < 1e-9, name
