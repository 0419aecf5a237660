"""Polynomials over a prime field F_q and their factorization.

Only degrees up to 4 are factored.  The pipeline is the textbook one:
squarefree decomposition (with the q-th root step for when the
derivative vanishes), distinct-degree splitting by gcd with x^(q^d) - x,
then equal-degree splitting of the degree-d parts.  Linear parts are
split by trying every residue when q is small and by Cantor-Zassenhaus
otherwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .intarith import is_probable_prime
from .poly import IntPoly

MAX_FACTOR_DEGREE = 4
# Below this modulus linear factors are split by scanning all residues.
ROOT_SCAN_LIMIT = 64


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _add(a: Sequence[int], b: Sequence[int], q: int) -> list[int]:
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % q for i in range(n)])


def _sub(a: Sequence[int], b: Sequence[int], q: int) -> list[int]:
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % q for i in range(n)])


def _mul(a: Sequence[int], b: Sequence[int], q: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % q for c in out])


def _divmod(a: Sequence[int], b: Sequence[int], q: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], _trim(rem)
    inv = pow(b[-1], -1, q)
    quo = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] * inv % q
        if c:
            quo[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] = (rem[i - db + j] - c * b[j]) % q
    return _trim(quo), _trim(rem[:db])


def _mod(a: Sequence[int], b: Sequence[int], q: int) -> list[int]:
    return _divmod(a, b, q)[1]


def _monic(a: Sequence[int], q: int) -> list[int]:
    if not a:
        return []
    inv = pow(a[-1], -1, q)
    return [c * inv % q for c in a]


def _gcd(a: Sequence[int], b: Sequence[int], q: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _mod(a, b, q)
    return _monic(a, q)


def _mulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], q: int) -> list[int]:
    """a*b reduced modulo a monic m; reduction by q happens once per coefficient."""
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    n = len(m) - 1
    for i in range(len(prod) - 1, n - 1, -1):
        c = prod[i] % q
        if c:
            base = i - n
            for j in range(n):
                prod[base + j] -= c * m[j]
    return _trim([c % q for c in prod[:n]])


def _powmod(base: Sequence[int], e: int, m: Sequence[int], q: int) -> list[int]:
    """base^e modulo a monic m."""
    result = [1]
    base = _mod(base, m, q)
    while e:
        if e & 1:
            result = _mulmod(result, base, m, q)
        e >>= 1
        if e:
            base = _mulmod(base, base, m, q)
    return result


def _deriv(a: Sequence[int], q: int) -> list[int]:
    return _trim([i * c % q for i, c in enumerate(a)][1:])


def _eval(a: Sequence[int], x: int, q: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % q
    return acc


@dataclass(frozen=True)
class FqPoly:
    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        q = self.modulus
        object.__setattr__(self, "coeffs", tuple(_trim([c % q for c in self.coeffs])))

    @classmethod
    def one(cls, q: int) -> FqPoly:
        return cls(q, (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _check(self, other: FqPoly) -> None:
        if other.modulus != self.modulus:
            raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")

    def __add__(self, other: FqPoly) -> FqPoly:
        self._check(other)
        return FqPoly(self.modulus, tuple(_add(self.coeffs, other.coeffs, self.modulus)))

    def __sub__(self, other: FqPoly) -> FqPoly:
        self._check(other)
        return FqPoly(self.modulus, tuple(_sub(self.coeffs, other.coeffs, self.modulus)))

    def __mul__(self, other: FqPoly) -> FqPoly:
        self._check(other)
        return FqPoly(self.modulus, tuple(_mul(self.coeffs, other.coeffs, self.modulus)))

    def __pow__(self, k: int) -> FqPoly:
        out = FqPoly.one(self.modulus)
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: FqPoly) -> tuple[FqPoly, FqPoly]:
        self._check(other)
        quo, rem = _divmod(self.coeffs, other.coeffs, self.modulus)
        return FqPoly(self.modulus, tuple(quo)), FqPoly(self.modulus, tuple(rem))

    def __floordiv__(self, other: FqPoly) -> FqPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: FqPoly) -> FqPoly:
        return divmod(self, other)[1]

    def monic(self) -> FqPoly:
        return FqPoly(self.modulus, tuple(_monic(self.coeffs, self.modulus)))

    def derivative(self) -> FqPoly:
        return FqPoly(self.modulus, tuple(_deriv(self.coeffs, self.modulus)))

    def __call__(self, x: int) -> int:
        return _eval(self.coeffs, x, self.modulus)

    def __str__(self) -> str:
        return f"{IntPoly(self.coeffs)} (mod {self.modulus})"


@dataclass(frozen=True)
class FqFactorization:
    modulus: int
    factors: tuple[tuple[FqPoly, int], ...]

    def expand(self) -> FqPoly:
        out = FqPoly.one(self.modulus)
        for f, e in self.factors:
            out = out * f**e
        return out

    def degrees(self) -> list[int]:
        """Factor degrees repeated by multiplicity, ascending."""
        return sorted(f.degree for f, e in self.factors for _ in range(e))

    def radical(self) -> FqPoly:
        out = FqPoly.one(self.modulus)
        for f, _ in self.factors:
            out = out * f
        return out


def reduce_mod(p: IntPoly, q: int) -> FqPoly:
    if not is_probable_prime(q):
        raise ValueError(f"{q} is not prime")
    return FqPoly(q, p.coeffs)


def gcd_mod(a: FqPoly, b: FqPoly) -> FqPoly:
    a._check(b)
    return FqPoly(a.modulus, tuple(_gcd(a.coeffs, b.coeffs, a.modulus)))


def monic_lift(p: FqPoly) -> IntPoly:
    """Lift with every coefficient in [0, q)."""
    if not p.is_monic():
        raise ValueError(f"{p} is not monic")
    return IntPoly(p.coeffs)


def _qth_root(a: Sequence[int], q: int) -> list[int]:
    # a(x) = b(x^q) with b^q = b(x^q) over F_q
    return [a[i] for i in range(0, len(a), q)]


def _squarefree_decomposition(f: list[int], q: int) -> list[tuple[list[int], int]]:
    """Monic f -> [(g, e)] with f = prod g^e, each g squarefree (not nec. coprime-free of e)."""
    out: list[tuple[list[int], int]] = []
    df = _deriv(f, q)
    if not df:
        return [(g, e * q) for g, e in _squarefree_decomposition(_qth_root(f, q), q)]
    c = _gcd(f, df, q)
    w = _divmod(f, c, q)[0]
    i = 1
    while len(w) > 1:
        y = _gcd(w, c, q)
        z = _divmod(w, y, q)[0]
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = _divmod(c, y, q)[0]
    if len(c) > 1:
        out += [(g, e * q) for g, e in _squarefree_decomposition(_qth_root(c, q), q)]
    return out


def _distinct_degree(f: list[int], q: int) -> list[tuple[list[int], int]]:
    """Squarefree monic f -> [(product of all degree-d factors, d)]."""
    out = []
    x = [0, 1]
    h = x
    d = 0
    rest = f
    while len(rest) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(h, q, rest, q)
        g = _gcd(rest, _sub(h, x, q), q)
        if len(g) > 1:
            out.append((g, d))
            rest = _divmod(rest, g, q)[0]
            h = _mod(h, rest, q)
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def _equal_degree(f: list[int], d: int, q: int, rng: random.Random) -> list[list[int]]:
    """Split a squarefree product of degree-d irreducibles into its factors."""
    n = len(f) - 1
    if n == d:
        return [f]
    if d == 1 and q <= ROOT_SCAN_LIMIT:
        return [[(-r) % q, 1] for r in range(q) if _eval(f, r, q) == 0]
    if q == 2:
        # Over F_2 at degree <= 4 the only splittable case is x(x+1), handled above.
        raise AssertionError("unexpected equal-degree split over F_2")
    e = (q**d - 1) // 2
    while True:
        a = [rng.randrange(q) for _ in range(n)]
        a = _trim(a)
        if len(a) < 2:
            continue
        b = _sub(_powmod(a, e, f, q), [1], q)
        g = _gcd(f, b, q)
        if 1 < len(g) < len(f):
            other = _divmod(f, g, q)[0]
            return _equal_degree(g, d, q, rng) + _equal_degree(other, d, q, rng)


def factor_degrees(p: FqPoly) -> list[int]:
    """Degrees of the irreducible factors of p with multiplicity, ascending.

    Same as ``factor_mod(p).degrees()`` but skips equal-degree splitting,
    which is all a cycle-type count needs.
    """
    q = p.modulus
    if p.degree < 1:
        raise ValueError("cannot factor a constant")
    degs = []
    for g, e in _squarefree_decomposition(_monic(p.coeffs, q), q):
        for part, d in _distinct_degree(g, q):
            degs += [d] * (((len(part) - 1) // d) * e)
    return sorted(degs)


def _sort_key(item: tuple[FqPoly, int]):
    f, _ = item
    return (f.degree, f.coeffs)


def factor_mod(p: FqPoly, seed: int = 0) -> FqFactorization:
    """Complete factorization into monic irreducibles with multiplicities.

    The leading coefficient is dropped, so the product of the factors is
    the monic normalization of p.
    """
    q = p.modulus
    if p.degree < 1:
        raise ValueError("cannot factor a constant")
    if p.degree > MAX_FACTOR_DEGREE:
        raise ValueError(f"degree {p.degree} exceeds {MAX_FACTOR_DEGREE}")
    rng = random.Random(seed)
    mult: dict[tuple[int, ...], int] = {}
    for g, e in _squarefree_decomposition(_monic(p.coeffs, q), q):
        for part, d in _distinct_degree(g, q):
            for irr in _equal_degree(part, d, q, rng):
                key = tuple(irr)
                mult[key] = mult.get(key, 0) + e
    factors = tuple(sorted(((FqPoly(q, k), e) for k, e in mult.items()), key=_sort_key))
    return FqFactorization(q, factors)


def roots_mod(p: FqPoly) -> list[int]:
    """Roots by exhaustive search; a brute-force reference for small q."""
    return [r for r in range(p.modulus) if p(r) == 0]


# Batched degree patterns of one monic quartic modulo many primes.  All
# residues stay below 2**15, so int64 products and their short sums cannot
# overflow.
BATCH_PRIME_LIMIT = 2**15


def _batch_mulmod(a: np.ndarray, b: np.ndarray, low: np.ndarray, ps: np.ndarray) -> np.ndarray:
    """Multiply (4, P) residue arrays modulo the monic quartics x^4 + low."""
    prod = np.zeros((7, a.shape[1]), dtype=np.int64)
    for i in range(4):
        for j in range(4):
            prod[i + j] += a[i] * b[j]
        prod[i:i + 4] %= ps
    for k in range(6, 3, -1):
        c = prod[k] % ps
        prod[k - 4:k] -= c * low
        prod[k - 4:k] %= ps
    return prod[:4] % ps


def _batch_pow(base: np.ndarray, ps: np.ndarray, low: np.ndarray) -> np.ndarray:
    """base ** p modulo x^4 + low, with p varying along the batch axis."""
    result = np.zeros_like(base)
    result[0] = 1
    for bit in range(int(ps.max()).bit_length() - 1, -1, -1):
        result = _batch_mulmod(result, result, low, ps)
        mask = ((ps >> bit) & 1).astype(bool)
        if mask.any():
            stepped = _batch_mulmod(result, base, low, ps)
            result = np.where(mask, stepped, result)
    return result


def quartic_degree_patterns(f: IntPoly, primes: Sequence[int]) -> list[tuple[int, ...]]:
    """Factor-degree pattern of a monic quartic modulo each prime.

    Every prime must leave f squarefree.  Degrees follow from which of
    x^p, x^(p^2), x^(p^3) is congruent to x modulo f; the (1,1,2) versus
    (2,2) split is settled by the degree of gcd(f, x^p - x).
    """
    if f.degree != 4 or not f.is_monic():
        raise ValueError("expected a monic quartic")
    if not primes:
        return []
    if max(primes) >= BATCH_PRIME_LIMIT:
        return [tuple(factor_degrees(reduce_mod(f, p))) for p in primes]
    ps = np.array(primes, dtype=np.int64)
    low = np.array([[c % p for p in primes] for c in f.coeffs[:4]], dtype=np.int64)
    x = np.zeros((4, len(primes)), dtype=np.int64)
    x[1] = 1
    frob1 = _batch_pow(x, ps, low)
    frob2 = _batch_pow(frob1, ps, low)
    frob3 = _batch_pow(frob2, ps, low)
    fixed1 = (frob1 == x).all(axis=0)
    fixed2 = (frob2 == x).all(axis=0)
    fixed3 = (frob3 == x).all(axis=0)
    out: list[tuple[int, ...]] = []
    for k, p in enumerate(primes):
        if fixed1[k]:
            out.append((1, 1, 1, 1))
        elif fixed2[k]:
            h = _trim([int(c) for c in frob1[:, k]])
            roots = len(_gcd(_monic(list(f.coeffs), p), _sub(h, [0, 1], p), p)) - 1
            out.append((1, 1, 2) if roots == 2 else (2, 2))
        elif fixed3[k]:
            out.append((1, 3))
        else:
            out.append((4,))
    return out
