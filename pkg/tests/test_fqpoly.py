import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import ZZ
from sympy.polys.galoistools import gf_factor

from qmg.fqpoly import (
    FqPoly, factor_degrees, factor_mod, gcd_mod, monic_lift, quartic_degree_patterns, reduce_mod, roots_mod,
)
from qmg.intarith import small_primes
from qmg.poly import IntPoly


def F(q, *desc):
    return FqPoly(q, tuple(reversed(desc)))


def all_polys(q, max_degree):
    """Every polynomial over F_q of degree 1..max_degree."""
    for deg in range(1, max_degree + 1):
        for lead in range(1, q):
            for low in itertools.product(range(q), repeat=deg):
                yield FqPoly(q, tuple(low) + (lead,))


def is_irreducible_brute(f: FqPoly) -> bool:
    """No monic factor of degree 1..deg/2, by trial division over all candidates."""
    q = f.modulus
    for d in range(1, f.degree // 2 + 1):
        for low in itertools.product(range(q), repeat=d):
            if (f % FqPoly(q, tuple(low) + (1,))).is_zero():
                return False
    return True


def check_factorization(p: FqPoly) -> None:
    fact = factor_mod(p)
    assert fact.expand() == p.monic()
    keys = [(f.degree, f.coeffs) for f, _ in fact.factors]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    for f, e in fact.factors:
        assert f.is_monic() and e >= 1
        assert is_irreducible_brute(f)
    assert fact.degrees() == factor_degrees(p)


def test_reduce_mod_examples():
    for t in range(-5, 6):
        assert reduce_mod(IntPoly.from_desc([1, 0, 4 * t, 0, 1]), 2) == F(2, 1, 0, 0, 0, 1)
    assert reduce_mod(IntPoly.from_desc([1, 0, -5]), 2) == F(2, 1, 0, 1)
    assert reduce_mod(IntPoly.from_desc([6, 3]), 3).is_zero()
    assert reduce_mod(IntPoly.from_desc([1, -7]), 5).coeffs == (3, 1)
    with pytest.raises(ValueError):
        reduce_mod(IntPoly.from_desc([1, 0]), 4)


def test_gcd_mod_examples():
    assert gcd_mod(F(2, 1, 1), F(2, 1, 1)) == F(2, 1, 1)
    assert gcd_mod(F(2, 1, 1, 1, 1), F(2, 1, 0, 0)).is_one()
    assert gcd_mod(F(2, 1, 0, 1), F(2, 1, 1)) == F(2, 1, 1)
    assert gcd_mod(FqPoly(3, ()), FqPoly(3, ())).is_zero()
    with pytest.raises(ValueError):
        gcd_mod(F(2, 1, 1), F(3, 1, 1))


def test_factor_mod_examples():
    fact = factor_mod(F(2, 1, 0, 0, 0, 1))
    assert fact.factors == ((F(2, 1, 1), 4),)
    fact = factor_mod(F(5, 1, -4, 5))
    assert fact.factors == ((F(5, 1, 0), 1), (F(5, 1, 1), 1))
    assert {r for r in roots_mod(F(5, 1, -4, 5))} == {0, 4}
    fact = factor_mod(F(3, 1, 0, 1))
    assert fact.factors == ((F(3, 1, 0, 1), 1),)


def test_factor_mod_rejects_bad_input():
    with pytest.raises(ValueError):
        factor_mod(F(5, 3))
    with pytest.raises(ValueError):
        factor_mod(F(5, 1, 0, 0, 0, 0, 1))


def test_monic_lift_examples():
    assert monic_lift(F(2, 1, 1)) == IntPoly.from_desc([1, 1])
    assert monic_lift(F(5, 1, 4, 4)) == IntPoly.from_desc([1, 4, 4])
    assert monic_lift(F(2, 1, 1) ** 3) == IntPoly.from_desc([1, 1, 1, 1])
    assert monic_lift(F(7, 1, -1, -3)) == IntPoly.from_desc([1, 6, 4])
    with pytest.raises(ValueError):
        monic_lift(F(5, 2, 1))


@pytest.mark.parametrize("q", [2, 3, 5])
def test_refactoring_exhaustive_small_fields(q):
    for p in all_polys(q, 4):
        check_factorization(p)


@pytest.mark.parametrize("q", [7, 11, 13])
def test_refactoring_random_samples(q):
    rng = random.Random(q)
    for _ in range(10**4):
        deg = rng.randint(1, 4)
        p = FqPoly(q, tuple(rng.randrange(q) for _ in range(deg)) + (rng.randrange(1, q),))
        fact = factor_mod(p, seed=rng.randrange(100))
        assert fact.expand() == p.monic()


def test_factorization_matches_independent_factorizer():
    rng = random.Random(20)
    for q in (2, 3, 7, 101, 65537, 1000003):
        for _ in range(60):
            p = FqPoly(q, tuple(rng.randrange(q) for _ in range(4)) + (1,))
            ours = sorted((f.coeffs, e) for f, e in factor_mod(p).factors)
            _, theirs = gf_factor(list(reversed(p.coeffs)), q, ZZ)
            assert ours == sorted((tuple(int(c) for c in reversed(g)), e) for g, e in theirs)


def test_large_prime_equal_degree_splitting():
    q = 1000003
    roots = [5, 17, 999999, 123456]
    p = FqPoly.one(q)
    for r in roots:
        p = p * F(q, 1, -r)
    fact = factor_mod(p, seed=7)
    assert sorted((-f.coeffs[0]) % q for f, _ in fact.factors) == sorted(roots)
    assert factor_mod(p, seed=7) == fact


def test_root_count_matches_brute_force():
    rng = random.Random(21)
    for q in small_primes(101):
        for _ in range(50):
            deg = rng.randint(1, 4)
            p = FqPoly(q, tuple(rng.randrange(q) for _ in range(deg)) + (rng.randrange(1, q),))
            fact = factor_mod(p)
            linear_with_mult = sum(e for f, e in fact.factors if f.degree == 1)
            brute = 0
            for r in range(q):
                m, g = 0, p
                lin = F(q, 1, -r)
                while not g.is_zero() and g.degree >= 1 and (g % lin).is_zero():
                    g = g // lin
                    m += 1
                brute += m
            assert linear_with_mult == brute


@pytest.mark.parametrize("q", [2, 3])
def test_gcd_divides_and_is_greatest(q):
    polys = list(all_polys(q, 3))
    rng = random.Random(q)
    divisors = [d for d in all_polys(q, 3) if d.is_monic()]
    for _ in range(300):
        a, b = rng.choice(polys), rng.choice(polys)
        g = gcd_mod(a, b)
        assert g.is_monic()
        assert (a % g).is_zero() and (b % g).is_zero()
        for d in divisors:
            if (a % d).is_zero() and (b % d).is_zero():
                assert (g % d).is_zero()


def test_derivative_vanishing_paths():
    # x^4 + 1 = (x + 1)^4 over F_2 and x^3 + 2 = (x + 2)^3 over F_3 both have zero derivative
    assert factor_mod(F(2, 1, 0, 0, 0, 1)).factors == ((F(2, 1, 1), 4),)
    assert factor_mod(F(3, 1, 0, 0, 2)).factors == ((F(3, 1, 2), 3),)
    assert factor_mod(F(2, 1, 0, 1, 0, 1)).factors == ((F(2, 1, 1, 1), 2),)
    assert factor_mod(F(3, 1, 1, 0, 1, 2)).expand() == F(3, 1, 1, 0, 1, 2)


def test_batched_patterns_match_single_prime_path():
    rng = random.Random(22)
    primes = [p for p in small_primes(3000) if p > 2]
    for _ in range(20):
        f = IntPoly.from_desc([1] + [rng.randint(-20, 20) for _ in range(4)])
        good = [p for p in primes if _squarefree_mod(f, p)]
        assert quartic_degree_patterns(f, good) == [tuple(factor_degrees(reduce_mod(f, p))) for p in good]


def _squarefree_mod(f: IntPoly, p: int) -> bool:
    fb = reduce_mod(f, p)
    return gcd_mod(fb, fb.derivative()).is_one()


def test_batched_patterns_large_primes_fall_back():
    f = IntPoly.from_desc([1, 1, 1, 1, 1])
    primes = [40009, 40013]
    assert quartic_degree_patterns(f, primes) == [tuple(factor_degrees(reduce_mod(f, p))) for p in primes]


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([2, 3, 5, 7, 31, 257]), st.lists(st.integers(0, 10**6), min_size=2, max_size=5))
def test_factorization_roundtrip_property(q, coeffs):
    p = FqPoly(q, tuple(coeffs))
    if p.degree < 1:
        return
    assert factor_mod(p).expand() == p.monic()
