import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dedekind.exact import NotCoprime, ZeroDenominator, egcd, mod_inverse, rat_normalize

import oracles


class TestEgcd:
    def test_pinned(self):
        assert egcd(3, 5) == (1, 2, -1)
        assert egcd(0, 7) == (7, 0, 1)

    def test_bezout_12_18(self):
        g, u, v = egcd(12, 18)
        assert g == 6
        assert 12 * u + 18 * v == 6

    @given(st.integers(-(10**12), 10**12), st.integers(-(10**12), 10**12))
    def test_bezout_identity(self, x, y):
        g, u, v = egcd(x, y)
        assert g == math.gcd(x, y)
        assert u * x + v * y == g

    def test_u_is_minimal(self):
        # among u' = u + k*(y/g), the returned u has the least |u|
        for x in range(-40, 41):
            for y in range(-40, 41):
                if y == 0:
                    continue
                g, u, _ = egcd(x, y)
                step = abs(y) // g
                assert abs(u) <= abs(u - step)
                assert abs(u) <= abs(u + step)

    def test_deterministic(self):
        assert egcd(240, 46) == egcd(240, 46)

    @given(st.integers(-(10**6), 10**6), st.integers(-(10**6), 10**6))
    def test_sign_folding(self, x, y):
        g, u, v = egcd(x, y)
        assert egcd(-x, y) == (g, -u, v)
        assert egcd(x, -y) == (g, u, -v)


class TestModInverse:
    def test_pinned(self):
        assert mod_inverse(3, 5) == 2
        assert mod_inverse(2, 7) == 4
        assert mod_inverse(5, 1) == 0

    def test_matches_brute_force(self):
        for m in range(1, 40):
            for x in range(-m, 2 * m + 1):
                if math.gcd(x, m) == 1:
                    assert mod_inverse(x, m) == oracles.mod_inverse_brute(x, m)

    @given(st.integers(-(10**9), 10**9), st.integers(1, 10**9))
    def test_inverse_property(self, x, m):
        if math.gcd(x, m) != 1:
            with pytest.raises(NotCoprime):
                mod_inverse(x, m)
        else:
            r = mod_inverse(x, m)
            assert 0 <= r < m
            assert x * r % m == 1 % m

    def test_not_coprime(self):
        with pytest.raises(NotCoprime):
            mod_inverse(6, 9)

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            mod_inverse(3, 0)
        with pytest.raises(ValueError):
            mod_inverse(3, -5)


class TestRatNormalize:
    def test_pinned(self):
        assert rat_normalize(2, 4) == Fraction(1, 2)
        assert rat_normalize(3, -6) == Fraction(-1, 2)
        zero = rat_normalize(0, 5)
        assert (zero.numerator, zero.denominator) == (0, 1)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominator):
            rat_normalize(1, 0)

    @given(st.integers(-(10**9), 10**9), st.integers(-(10**9), 10**9).filter(bool))
    def test_invariants(self, num, den):
        r = rat_normalize(num, den)
        assert r.denominator >= 1
        assert math.gcd(abs(r.numerator), r.denominator) == 1
        assert r == Fraction(num, den)
        # idempotent
        assert rat_normalize(r.numerator, r.denominator) == r

    @given(
        st.fractions(max_denominator=10**6),
        st.fractions(max_denominator=10**6),
        st.fractions(max_denominator=10**6),
    )
    def test_field_axioms(self, x, y, z):
        assert x + y == y + x
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z
        assert x + (-x) == 0
