"""Dense integer polynomials with exact arithmetic.

Coefficients are stored in ascending degree order.  Text I/O (see
:meth:`IntPoly.from_text` / :meth:`IntPoly.to_text`) uses descending order,
which is the only place the two conventions meet.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd
from typing import Iterable, Sequence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def from_desc(cls, coeffs: Sequence[int]) -> IntPoly:
        return cls(tuple(reversed(list(coeffs))))

    @classmethod
    def from_text(cls, text: str) -> IntPoly:
        """Parse whitespace-separated coefficients, highest degree first."""
        parts = text.replace(",", " ").split()
        if not parts:
            raise ValueError("empty polynomial text")
        try:
            return cls.from_desc([int(p) for p in parts])
        except ValueError as exc:
            raise ValueError(f"cannot parse polynomial {text!r}") from exc

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    def to_desc(self) -> list[int]:
        return list(reversed(self.coeffs)) if self.coeffs else [0]

    def to_text(self) -> str:
        return " ".join(str(c) for c in self.to_desc())

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self[i] + other[i] for i in range(n)))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        out = IntPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def exact_div_scalar(self, q: int) -> IntPoly:
        if any(c % q for c in self.coeffs):
            raise ValueError(f"{self} is not divisible by {q}")
        return IntPoly(tuple(c // q for c in self.coeffs))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def evaluate(p: IntPoly, x: int) -> int:
    """Horner evaluation."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def derivative(p: IntPoly) -> IntPoly:
    return IntPoly(tuple(i * c for i, c in enumerate(p.coeffs))[1:])


def shift(p: IntPoly, c: int) -> IntPoly:
    """Return p(x + c)."""
    n = len(p.coeffs)
    out = [0] * n
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        # a * (x + c)^i
        for k in range(i + 1):
            out[k] += a * comb(i, k) * c ** (i - k)
    return IntPoly(tuple(out))


def divmod_monic(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Quotient and remainder of a by a monic divisor b."""
    if not b.is_monic():
        raise ValueError("divisor must be monic")
    rem = list(a.coeffs)
    db = b.degree
    if len(rem) - 1 < db:
        return IntPoly(), a
    quo = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            quo[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] -= c * b.coeffs[j]
    return IntPoly(tuple(quo)), IntPoly(tuple(rem[:db]))


def bareiss_det(matrix: list[list[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def sylvester_matrix(p: IntPoly, q: IntPoly) -> list[list[int]]:
    m, n = p.degree, q.degree
    size = m + n
    pd = list(reversed(p.coeffs))
    qd = list(reversed(q.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + pd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qd + [0] * (size - n - 1 - i))
    return rows


def resultant(p: IntPoly, q: IntPoly) -> int:
    """Sylvester resultant, equal to lc(p)^deg(q) * prod q(alpha) over roots alpha of p."""
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    return bareiss_det(sylvester_matrix(p, q))


def discriminant(p: IntPoly) -> int:
    n = p.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    res = resultant(p, derivative(p))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, r = divmod(sign * res, p.lc)
    assert r == 0
    return q


def pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """Remainder of |lc(b)|^k * a by b, k = deg a - deg b + 1.

    Scaling by the absolute leading coefficient keeps the sign of the true
    remainder, which is what a Sturm chain needs.
    """
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    lb = b.lc
    db = b.degree
    rem = list(a.coeffs)
    k = len(rem) - db
    if k <= 0:
        return a
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        rem = [x * lb for x in rem]
        for j in range(db + 1):
            rem[i - db + j] -= c * b.coeffs[j]
    out = IntPoly(tuple(rem[:db]))
    # lb^k and |lb|^k differ only when lb < 0 and k is odd
    if lb < 0 and k % 2 == 1:
        out = -out
    return out


def _primitive(p: IntPoly) -> IntPoly:
    g = p.content()
    return p.exact_div_scalar(g) if g > 1 else p


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Q[x], normalized to positive leading coefficient."""
    a, b = _primitive(a) if not a.is_zero() else a, _primitive(b) if not b.is_zero() else b
    while not b.is_zero():
        r = pseudo_remainder(a, b)
        a, b = b, (_primitive(r) if not r.is_zero() else r)
    if a.is_zero():
        return a
    a = _primitive(a)
    return -a if a.lc < 0 else a


def sturm_sequence(p: IntPoly) -> list[IntPoly]:
    seq = [p, derivative(p)]
    while True:
        r = pseudo_remainder(seq[-2], seq[-1])
        if r.is_zero():
            break
        seq.append(_primitive(-r))
    return seq


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _sign_changes(signs: Iterable[int]) -> int:
    s = [v for v in signs if v]
    return sum(1 for u, v in zip(s, s[1:]) if u != v)


def sturm_real_root_count(p: IntPoly) -> int:
    """Number of distinct real roots of a squarefree polynomial."""
    if p.degree < 1:
        return 0
    if poly_gcd(p, derivative(p)).degree > 0:
        raise ValueError(f"{p} is not squarefree")
    seq = sturm_sequence(p)
    at_pos = [_sign(s.lc) for s in seq]
    at_neg = [_sign(s.lc) * (-1 if s.degree % 2 else 1) for s in seq]
    return _sign_changes(at_neg) - _sign_changes(at_pos)
