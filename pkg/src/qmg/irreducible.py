"""Irreducibility over Q for monic integer polynomials of degree 2 to 4."""

from __future__ import annotations

from typing import Iterable

from .intarith import DEFAULT_BUDGET, divisors, factor, is_perfect_square
from .poly import IntPoly, divmod_monic, evaluate, shift


def _check_monic(p: IntPoly) -> None:
    if not p.is_monic():
        raise ValueError(f"{p} is not monic")


def _signed_divisors(n: int, budget: int = DEFAULT_BUDGET) -> list[int]:
    f = factor(n, budget)
    if not f.complete:
        raise ArithmeticError(f"could not factor {n} within budget")
    pos = divisors(f)
    return pos + [-d for d in pos]


def rational_roots(p: IntPoly) -> list[int]:
    """Integer roots of a monic polynomial, with multiplicity, ascending.

    For monic integer polynomials every rational root is an integer
    dividing the constant term.
    """
    _check_monic(p)
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    roots: list[int] = []
    while p.degree >= 1 and p[0] == 0:
        roots.append(0)
        p = IntPoly(p.coeffs[1:])
    if p.degree >= 1:
        for r in _signed_divisors(p[0]):
            while p.degree >= 1 and evaluate(p, r) == 0:
                roots.append(r)
                p, _ = divmod_monic(p, IntPoly((-r, 1)))
    return sorted(roots)


def _has_quadratic_split(p: IntPoly) -> bool:
    """Does a monic quartic with nonzero constant term factor as two monic quadratics?

    Writes p = (x^2 + u x + v)(x^2 + w x + z) and runs over v*z = d.
    """
    d, c, b, a = p[0], p[1], p[2], p[3]
    for v in _signed_divisors(d):
        z = d // v
        if z != v:
            num = c - a * v
            if num % (z - v):
                continue
            u = num // (z - v)
            w = a - u
            if v + z + u * w == b:
                return True
        else:
            # u*z + w*v = v*(u + w) = v*a must equal c; u, w roots of y^2 - a y + (b - 2v)
            if c != a * v:
                continue
            disc = a * a - 4 * (b - 2 * v)
            if is_perfect_square(disc):
                return True
    return False


def is_irreducible(p: IntPoly) -> bool:
    _check_monic(p)
    if not 2 <= p.degree <= 4:
        raise ValueError(f"degree {p.degree} outside 2..4")
    if p[0] == 0:
        return False
    if rational_roots(p):
        return False
    if p.degree == 4:
        return not _has_quadratic_split(p)
    return True


def is_eisenstein(p: IntPoly, prime: int) -> bool:
    if p.lc % prime == 0 or p[0] % (prime * prime) == 0:
        return False
    return all(c % prime == 0 for c in p.coeffs[:-1])


def eisenstein_witness(p: IntPoly, shifts: Iterable[int]) -> tuple[int, int] | None:
    """First (prime, c) with p(x + c) Eisenstein at prime, scanning c in order."""
    _check_monic(p)
    for c in shifts:
        g = shift(p, c)
        if g[0] == 0:
            continue
        for prime in factor(g[0]).primes():
            if is_eisenstein(g, prime):
                return prime, c
    return None
