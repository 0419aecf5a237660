import itertools
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qmg.irreducible import eisenstein_witness, is_eisenstein, is_irreducible, rational_roots
from qmg.poly import IntPoly, divmod_monic, evaluate

X = sympy.Symbol("x")


def P(*desc):
    return IntPoly.from_desc(desc)


def quadratic_products(u_bound: int, v_bound: int) -> set[tuple[int, ...]]:
    """Descending coefficients of every product of two monic quadratics in the box."""
    quads = [(u, v) for u in range(-u_bound, u_bound + 1) for v in range(-v_bound, v_bound + 1) if v]
    out = set()
    for (u, v), (w, z) in itertools.product(quads, repeat=2):
        out.add((1, u + w, v + z + u * w, u * z + v * w, v * z))
    return out


def perron(p: IntPoly) -> bool:
    """Perron's sufficient condition for irreducibility of a monic polynomial."""
    n = p.degree
    return p[0] != 0 and abs(p[n - 1]) > 1 + sum(abs(p[i]) for i in range(n - 1))


@pytest.mark.parametrize("p, want", [
    (P(1, -12, -4, 48), [-2, 2, 12]),
    (P(1, -1, -3, 2), [2]),
    (P(1, 2, -20, -60), []),
    (P(1, 0, 0, 0), [0, 0, 0]),
    (P(1, -2, 1), [1, 1]),
    (P(1, 0, -1, 0), [-1, 0, 1]),
])
def test_rational_roots_examples(p, want):
    assert rational_roots(p) == want


def test_x2_resolvent_roots():
    for t in range(-300, 301):
        if t == 0:
            assert rational_roots(P(1, 0, -4, 0)) == [-2, 0, 2]
            continue
        assert rational_roots(P(1, -4 * t, -4, 16 * t)) == sorted([-2, 2, 4 * t])


@pytest.mark.parametrize("p, want", [
    (P(1, 0, 4, 0, 1), True),
    (P(1, 0, 0, 0, -1), False),
    (P(1, 2, 2, 4, 22), True),
    (P(1, 0, 0, 0, 4), False),
    (P(1, 0, -5), True),
    (P(1, -1, -1), True),
    (P(1, 0, 0, -2), True),
    (P(1, 0, 0, 0, 0), False),
    (P(1, 0, -2, 0, 1), False),
])
def test_is_irreducible_examples(p, want):
    assert is_irreducible(p) is want


def test_is_irreducible_rejects_bad_input():
    with pytest.raises(ValueError):
        is_irreducible(P(1, 0))
    with pytest.raises(ValueError):
        is_irreducible(P(1, 0, 0, 0, 0, 1))
    with pytest.raises(ValueError):
        is_irreducible(P(2, 0, 1))


def test_is_irreducible_exhaustive_against_factor_pairs():
    # Cauchy: every root has |r| <= 1 + max|a_i| <= 7, so quadratic factor
    # coefficients obey |u| <= 14 and |v| <= 6 (v divides the constant term).
    products = quadratic_products(14, 6)
    for a, b, c, d in itertools.product(range(-6, 7), repeat=4):
        p = P(1, a, b, c, d)
        has_root = any(evaluate(p, r) == 0 for r in range(-7, 8))
        want = not has_root and (1, a, b, c, d) not in products
        assert is_irreducible(p) is want, p


def test_is_irreducible_matches_sympy_on_wide_coefficients():
    rng = random.Random(30)
    for _ in range(300):
        deg = rng.randint(2, 4)
        # build some reducible cases on purpose
        if rng.random() < 0.4 and deg == 4:
            g = P(1, rng.randint(-40, 40), rng.randint(-40, 40))
            h = P(1, rng.randint(-40, 40), rng.randint(-40, 40))
            p = g * h
        else:
            p = IntPoly(tuple(rng.randint(-500, 500) for _ in range(deg)) + (1,))
        want = sympy.Poly(list(p.to_desc()), X).is_irreducible
        assert is_irreducible(p) is want, p


def test_eisenstein_examples():
    assert eisenstein_witness(P(1, 0, 4, 0, 1), range(-2, 3)) == (2, -1)
    assert eisenstein_witness(P(1, 2, 2, 4, 22), range(0, 1)) == (2, 0)
    # x^2 - x - 1 at x - 2 is x^2 - 5x + 5
    assert eisenstein_witness(P(1, -1, -1), range(-3, 4)) == (5, -2)
    assert eisenstein_witness(P(1, -1, -1), range(-1, 2)) is None
    assert is_eisenstein(P(1, 0, -5), 5)
    assert not is_eisenstein(P(1, 0, -4), 2)


def test_eisenstein_implies_irreducible():
    hits = 0
    rng = random.Random(31)
    for _ in range(3000):
        p = P(1, *(rng.randint(-12, 12) for _ in range(4)))
        if p[0] == 0:
            continue
        if eisenstein_witness(p, range(-3, 4)) is not None:
            hits += 1
            assert is_irreducible(p)
    assert hits > 50


def test_perron_implies_irreducible():
    hits = 0
    for a in range(-12, 13):
        for b, c, d in itertools.product(range(-4, 5), repeat=3):
            p = P(1, a, b, c, d)
            if perron(p):
                hits += 1
                assert is_irreducible(p)
    assert hits > 1000


@settings(max_examples=400, deadline=None)
@given(st.lists(st.integers(-60, 60), min_size=1, max_size=4))
def test_rational_roots_are_roots(tail):
    p = P(1, *tail)
    roots = rational_roots(p)
    assert all(evaluate(p, r) == 0 for r in roots)
    assert len(roots) <= p.degree
    cof = p
    for r in roots:
        cof, rem = divmod_monic(cof, IntPoly((-r, 1)))
        assert rem.is_zero()
    assert cof.degree == p.degree - len(roots)
    if cof.degree >= 1:
        assert rational_roots(cof) == []
