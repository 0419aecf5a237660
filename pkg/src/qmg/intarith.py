"""Primality, factorization and squarefree analysis of integers.

Factoring is trial division by primes below 10**6 followed by Pollard rho
with Brent's cycle detection.  Rho work is capped by an iteration budget;
when the budget runs out the unfactored part is kept as a cofactor and
the result is marked incomplete.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

DEFAULT_BUDGET = 2**26
TRIAL_BOUND = 10**6

# Deterministic Miller-Rabin for n < 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981
_MR_RANDOM_ROUNDS = 64


class Tristate(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, flag: bool) -> Tristate:
        return cls.TRUE if flag else cls.FALSE

    def __bool__(self):
        raise TypeError("Tristate has no truth value; compare against Tristate.TRUE")


class Unknown:
    """Result placeholder for values that depend on an incomplete factorization."""

    def __init__(self, cofactor: int):
        self.cofactor = cofactor

    def __repr__(self):
        return f"Unknown(cofactor={self.cofactor})"

    def __eq__(self, other):
        return isinstance(other, Unknown) and other.cofactor == self.cofactor

    def __hash__(self):
        return hash(("Unknown", self.cofactor))


@dataclass(frozen=True)
class FactoredInt:
    sign: int
    prime_powers: tuple[tuple[int, int], ...]
    cofactor: int = 1
    complete: bool = True

    def value(self) -> int:
        v = self.sign * self.cofactor
        for p, e in self.prime_powers:
            v *= p**e
        return v

    def primes(self) -> list[int]:
        return [p for p, _ in self.prime_powers]

    def __str__(self) -> str:
        parts = [str(p) if e == 1 else f"{p}^{e}" for p, e in self.prime_powers]
        if self.cofactor != 1:
            parts.append(f"({self.cofactor})")
        body = "*".join(parts) if parts else "1"
        return ("-" if self.sign < 0 else "") + body


@lru_cache(maxsize=1)
def small_primes(limit: int = TRIAL_BOUND) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _mr_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int, rng: random.Random | None = None) -> bool:
    """Miller-Rabin.

    Deterministic below 3.3e24 using the first thirteen prime bases.  Larger
    inputs get 64 random bases, so a composite slips through with
    probability at most 4**-64.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _MR_LIMIT:
        return all(_mr_round(n, d, s, a) for a in _MR_BASES)
    rng = rng or random.Random(n)
    return all(_mr_round(n, d, s, rng.randrange(2, n - 1)) for _ in range(_MR_RANDOM_ROUNDS))


class BudgetExhausted(Exception):
    pass


def _brent(n: int, c: int, y: int, budget: list[int]) -> int:
    """One Pollard-Brent attempt; returns a divisor of n (possibly n itself)."""
    m = 128
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            steps = min(m, r - k)
            budget[0] -= steps
            if budget[0] < 0:
                raise BudgetExhausted
            for _ in range(steps):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    return g


def _split(n: int, budget: list[int], rng: random.Random) -> int:
    while True:
        d = _brent(n, rng.randrange(1, n), rng.randrange(0, n), budget)
        if d != n:
            return d


def factor(n: int, budget: int = DEFAULT_BUDGET, seed: int = 0) -> FactoredInt:
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    found: dict[int, int] = {}
    n = _trial_divide(n, found)
    cofactor = 1
    if n > 1:
        rng = random.Random(seed)
        left = [budget]
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if is_probable_prime(m):
                found[m] = found.get(m, 0) + 1
                continue
            r = isqrt(m)
            if r * r == m:
                stack += [r, r]
                continue
            try:
                d = _split(m, left, rng)
            except BudgetExhausted:
                cofactor *= m
                continue
            stack += [d, m // d]
    return FactoredInt(sign, tuple(sorted(found.items())), cofactor, cofactor == 1)


def _trial_divide(n: int, found: dict[int, int], stop_on_square: bool = False) -> int:
    """Strip primes below TRIAL_BOUND from n, recording exponents in found.

    Returns the remaining cofactor (1 when done).  With stop_on_square,
    returns -1 as soon as some exponent reaches 2.
    """
    if n > 1 and is_probable_prime(n):
        found[n] = found.get(n, 0) + 1
        return 1
    for p in small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
            if stop_on_square and e >= 2:
                return -1
            if n > 1 and is_probable_prime(n):
                break
    else:
        return n
    # n is now 1 or a prime larger than every prime stripped so far
    if n > 1:
        found[n] = 1
    return 1


def is_squarefree(n: int, budget: int = DEFAULT_BUDGET) -> Tristate:
    if n == 0:
        raise ValueError("squarefree test of 0")
    found: dict[int, int] = {}
    rest = _trial_divide(abs(n), found, stop_on_square=True)
    if rest == -1:
        return Tristate.FALSE
    if rest == 1:
        return Tristate.TRUE
    f = factor(rest, budget)
    if any(e >= 2 for _, e in f.prime_powers):
        return Tristate.FALSE
    if f.complete:
        return Tristate.TRUE
    if is_perfect_square(f.cofactor):
        return Tristate.FALSE
    return Tristate.UNKNOWN


def squarefree_part(n: int, budget: int = DEFAULT_BUDGET) -> int | Unknown:
    if n == 0:
        raise ValueError("squarefree part of 0")
    f = factor(n, budget)
    if not f.complete:
        return Unknown(f.cofactor)
    core = f.sign
    for p, e in f.prime_powers:
        if e % 2:
            core *= p
    return core


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def divisors(f: FactoredInt) -> list[int]:
    """Positive divisors of a completely factored integer, ascending."""
    if not f.complete:
        raise ValueError("divisors need a complete factorization")
    divs = [1]
    for p, e in f.prime_powers:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)
