import math

import pytest

from dedekind.admissible import (
    AdmissibleWitness,
    NotAdmissible,
    enumerate_theorem1_instances,
    factorize,
    is_admissible,
    sqrt_minus_one,
)
from dedekind.identities import theorem1_residual

import oracles


class TestFactorize:
    def test_pinned(self):
        assert factorize(1) == []
        assert factorize(10) == [(2, 1), (5, 1)]
        assert factorize(65) == [(5, 1), (13, 1)]
        assert factorize(2**10 * 3**5) == [(2, 10), (3, 5)]

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            factorize(0)

    def test_reconstructs_and_orders(self):
        def is_prime(p):
            return p >= 2 and all(p % q for q in range(2, math.isqrt(p) + 1))

        for n in range(1, 4000):
            fac = factorize(n)
            prod = 1
            for p, e in fac:
                assert e >= 1
                assert is_prime(p)
                prod *= p**e
            assert prod == n
            assert [p for p, _ in fac] == sorted({p for p, _ in fac})

    def test_large_semiprime(self):
        assert factorize(999983 * 999979) == [(999979, 1), (999983, 1)]


class TestIsAdmissible:
    def test_pinned(self):
        ok, witness = is_admissible(1)
        assert ok and witness.roots == (0,) and witness.m == 1 and not witness.doubled
        ok, witness = is_admissible(5)
        assert ok and witness.roots == (2, 3)
        assert is_admissible(4) == (False, None)
        ok, witness = is_admissible(26)
        assert ok and witness.m == 13 and witness.doubled

    def test_matches_brute_force(self):
        for t in range(1, 1500):
            ok, witness = is_admissible(t)
            brute = oracles.minus_one_roots(t)
            assert ok == bool(brute)
            if ok:
                assert witness.roots == brute

    def test_witness_consistency(self):
        for t in (1, 2, 5, 10, 25, 26, 50, 65, 85, 130, 169, 325):
            ok, witness = is_admissible(t)
            assert ok
            prod = 1
            for p, e in witness.factorization:
                prod *= p**e
            assert prod == t
            assert witness.m * (2 if witness.doubled else 1) == t
            assert witness.m % 2 == 1
            assert all((x * x + 1) % t == 0 for x in witness.roots)

    def test_witness_validation(self):
        with pytest.raises(ValueError):
            AdmissibleWitness(t=10, factorization=((2, 1),), m=5, doubled=True, roots=(3, 7))
        with pytest.raises(ValueError):
            AdmissibleWitness(t=10, factorization=((2, 1), (5, 1)), m=5, doubled=True, roots=(4,))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            is_admissible(0)


class TestSqrtMinusOne:
    def test_pinned(self):
        assert sqrt_minus_one(1) == (0,)
        assert sqrt_minus_one(2) == (1,)
        assert sqrt_minus_one(5) == (2, 3)
        assert sqrt_minus_one(25) == (7, 18)
        assert sqrt_minus_one(13) == (5, 8)

    def test_not_admissible(self):
        for t in (3, 4, 7, 12, 15, 100):
            with pytest.raises(NotAdmissible):
                sqrt_minus_one(t)

    def test_matches_brute_force(self):
        for t in range(1, 1500):
            brute = oracles.minus_one_roots(t)
            if brute:
                assert sqrt_minus_one(t) == brute

    def test_deep_prime_power(self):
        # exercises several Hensel lifting steps
        t = 5**6
        assert sqrt_minus_one(t) == oracles.minus_one_roots(t)
        t = 13**3
        assert sqrt_minus_one(t) == oracles.minus_one_roots(t)

    def test_many_factors(self):
        t = 2 * 5 * 13 * 17
        roots = sqrt_minus_one(t)
        assert roots == oracles.minus_one_roots(t)
        assert len(roots) == 2**3

    def test_cardinality(self):
        for t in range(3, 700):
            try:
                roots = sqrt_minus_one(t)
            except NotAdmissible:
                continue
            odd_primes = [p for p, _ in factorize(t) if p != 2]
            assert len(roots) == 2 ** len(odd_primes)
            assert list(roots) == sorted(roots)


class TestEnumerateInstances:
    def test_includes_expected(self):
        small = [(i.t, i.a, i.b) for i in enumerate_theorem1_instances(2, 3)]
        assert (1, 1, 2) in small
        assert (2, 1, 3) in small
        bigger = [(i.t, i.a, i.b) for i in enumerate_theorem1_instances(5, 5)]
        assert (5, 2, 3) in bigger

    def test_skips_inadmissible_moduli(self):
        ts = {i.t for i in enumerate_theorem1_instances(4, 10)}
        assert ts == {1, 2}

    def test_lexicographic_order(self):
        triples = [(i.t, i.a, i.b) for i in enumerate_theorem1_instances(10, 15)]
        assert triples == sorted(triples)
        assert len(triples) == len(set(triples))

    def test_instances_validate_and_hold(self):
        for inst in enumerate_theorem1_instances(12, 25):
            assert (inst.a * inst.a + 1) % inst.t == 0
            assert theorem1_residual(inst) == 0

    def test_multiplier_widening(self):
        a_t1 = [i.a for i in enumerate_theorem1_instances(1, 1, multipliers=4)]
        assert a_t1 == [1, 2, 3, 4]
        a_t5 = sorted({i.a for i in enumerate_theorem1_instances(5, 1, multipliers=2)} - {1})
        assert a_t5 == [2, 3, 7, 8]
        for inst in enumerate_theorem1_instances(5, 10, multipliers=3):
            assert theorem1_residual(inst) == 0

    def test_bad_bounds(self):
        with pytest.raises(ValueError):
            list(enumerate_theorem1_instances(0, 5))
        with pytest.raises(ValueError):
            list(enumerate_theorem1_instances(5, 5, multipliers=0))
