"""Parametrized quartic families, their discriminants and monogenicity conditions.

X2..X5 are the one-parameter families with Galois groups 4T2..4T5.  The
LIT_* ids are earlier families from the literature, kept for the
discriminant-collision scans in :func:`overlap_scan`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable

from .galois import GaloisLabel
from .intarith import DEFAULT_BUDGET, Tristate, is_probable_prime, is_squarefree
from .poly import IntPoly, discriminant, sturm_real_root_count


class FamilyId(enum.Enum):
    X2 = "X2"
    X3 = "X3"
    X4 = "X4"
    X5 = "X5"
    LIT_JonesC2C2 = "LIT_JonesC2C2"
    LIT_JonesD4plus = "LIT_JonesD4plus"
    LIT_JonesD4minus = "LIT_JonesD4minus"
    LIT_SpearmanA4 = "LIT_SpearmanA4"
    LIT_SmithB = "LIT_SmithB"
    LIT_SmithD = "LIT_SmithD"
    LIT_GSS = "LIT_GSS"

    @property
    def arity(self) -> int:
        return 2 if self in _TWO_PARAM else 1

    @classmethod
    def parse(cls, name: str) -> FamilyId:
        try:
            return cls(name)
        except ValueError:
            raise ValueError(f"unknown family {name!r}") from None


_TWO_PARAM = {FamilyId.LIT_JonesC2C2, FamilyId.LIT_JonesD4plus, FamilyId.LIT_JonesD4minus}

MAIN_FAMILIES = (FamilyId.X2, FamilyId.X3, FamilyId.X4, FamilyId.X5)

FAMILY_GROUP = {
    FamilyId.X2: GaloisLabel.T2,
    FamilyId.X3: GaloisLabel.T3,
    FamilyId.X4: GaloisLabel.T4,
    FamilyId.X5: GaloisLabel.T5,
    FamilyId.LIT_JonesC2C2: GaloisLabel.T2,
    FamilyId.LIT_JonesD4plus: GaloisLabel.T3,
    FamilyId.LIT_JonesD4minus: GaloisLabel.T3,
    FamilyId.LIT_SpearmanA4: GaloisLabel.T4,
    FamilyId.LIT_SmithB: GaloisLabel.T5,
    FamilyId.LIT_SmithD: GaloisLabel.T5,
    FamilyId.LIT_GSS: GaloisLabel.T5,
}


def _q(*desc: int) -> IntPoly:
    return IntPoly.from_desc(desc)


# Descending coefficients of each family member.
_GENERATORS: dict[FamilyId, Callable[..., IntPoly]] = {
    FamilyId.X2: lambda t: _q(1, 0, 4 * t, 0, 1),
    FamilyId.X3: lambda t: _q(1, 24 * t, 12 * t + 4, 4, 1),
    FamilyId.X4: lambda t: _q(1, 2, 2, 4 * t, 36 * t * t - 16 * t + 2),
    FamilyId.X5: lambda t: _q(1, -2, -2, 6, 4 * t - 2),
    FamilyId.LIT_JonesC2C2: lambda r, p: _q(1, 0, 36 * r * p - 1, 0, 1),
    FamilyId.LIT_JonesD4plus: lambda r, p: _q(1, 1, 100 * r * p + 1, 1, 1),
    FamilyId.LIT_JonesD4minus: lambda r, p: _q(1, -1, 100 * r * p + 1, -1, 1),
    FamilyId.LIT_SpearmanA4: lambda m: _q(1, 0, 18, -4 * m, m * m + 81),
    FamilyId.LIT_SmithB: lambda b: _q(1, 0, 0, b, b),
    FamilyId.LIT_SmithD: lambda d: _q(1, 1, 0, 0, d),
    FamilyId.LIT_GSS: lambda m: _q(1, 0, -6, -m, -3),
}


def _jones_d4_disc(r: int, p: int) -> int:
    n = r * p
    return 5**3 * (20 * n + 1) * (100 * n + 1) * (80 * n - 1) ** 2


_CLOSED_FORMS: dict[FamilyId, Callable[..., int]] = {
    FamilyId.X2: lambda t: 2**8 * (4 * t * t - 1) ** 2,
    FamilyId.X3: lambda t: -(2**9) * (6 * t - 1) ** 3 * (6 * t + 1) ** 2,
    FamilyId.X4: lambda t: 2**6 * (4 * t - 1) ** 2 * (108 * t * t - 54 * t + 7) ** 2,
    FamilyId.X5: lambda t: 16 * (4 * t + 1) * (4 * t - 7) * (64 * t + 13),
    FamilyId.LIT_JonesC2C2: lambda r, p: 144 * (36 * r * p + 1) ** 2 * (12 * r * p - 1) ** 2,
    FamilyId.LIT_JonesD4plus: _jones_d4_disc,
    FamilyId.LIT_JonesD4minus: _jones_d4_disc,
    FamilyId.LIT_SpearmanA4: lambda m: 2**8 * m * m * (m * m + 108) ** 2,
    FamilyId.LIT_SmithB: lambda b: (256 - 27 * b) * b**3,
    FamilyId.LIT_SmithD: lambda d: (256 * d - 27) * d * d,
    FamilyId.LIT_GSS: lambda m: -27 * (m - 8) ** 2 * (m + 8) ** 2,
}

# Quantities that must all be squarefree for a member of X2..X5 to be monogenic.
_SQUAREFREE_TERMS: dict[FamilyId, Callable[[int], tuple[int, ...]]] = {
    FamilyId.X2: lambda t: ((2 * t - 1) * (2 * t + 1),),
    FamilyId.X3: lambda t: ((6 * t - 1) * (6 * t + 1),),
    FamilyId.X4: lambda t: ((4 * t - 1) * (108 * t * t - 54 * t + 7),),
    FamilyId.X5: lambda t: (4 * t + 1, 4 * t - 7, 64 * t + 13),
}


def _check_arity(fid: FamilyId, params: tuple[int, ...]) -> None:
    if len(params) != fid.arity:
        raise TypeError(f"{fid.value} takes {fid.arity} parameter(s), got {len(params)}")


def gen(fid: FamilyId, *params: int) -> IntPoly:
    _check_arity(fid, params)
    return _GENERATORS[fid](*params)


def closed_form_disc(fid: FamilyId, *params: int) -> int:
    _check_arity(fid, params)
    try:
        formula = _CLOSED_FORMS[fid]
    except KeyError:
        raise KeyError(f"no discriminant formula registered for {fid.value}") from None
    return formula(*params)


def tristate_all(values: Iterable[Tristate]) -> Tristate:
    out = Tristate.TRUE
    for v in values:
        if v is Tristate.FALSE:
            return Tristate.FALSE
        if v is Tristate.UNKNOWN:
            out = Tristate.UNKNOWN
    return out


def condition_holds(fid: FamilyId, t: int, budget: int = DEFAULT_BUDGET) -> Tristate:
    """The squarefree condition equivalent to monogenicity of gen(fid, t)."""
    if fid not in _SQUAREFREE_TERMS:
        raise ValueError(f"no monogenicity condition for {fid.value}")
    return tristate_all(is_squarefree(n, budget) for n in _SQUAREFREE_TERMS[fid](t))


def is_primitive_root(g: int, n: int) -> bool:
    """Whether g generates (Z/nZ)^*; brute force, meant for small n."""
    if n < 2 or _gcd(g, n) != 1:
        return False
    phi = sum(1 for k in range(1, n) if _gcd(k, n) == 1)
    x, order = g % n, 1
    while x != 1:
        x = x * g % n
        order += 1
    return order == phi


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _sf(*ns: int) -> bool:
    return all(n != 0 and is_squarefree(n) is Tristate.TRUE for n in ns)


def literature_condition(fid: FamilyId, *params: int) -> bool:
    """Parameter constraints under which a literature family member is monogenic.

    GSS carries no stated constraint beyond a nonzero discriminant.
    """
    _check_arity(fid, params)
    if fid is FamilyId.LIT_JonesC2C2:
        r, p = params
        n = r * p
        return (r >= 3 and is_probable_prime(r) and is_probable_prime(p) and is_primitive_root(r, 9)
                and _sf((12 * n - 1) * (12 * n + 1) * (36 * n - 1) * (36 * n + 1)))
    if fid in (FamilyId.LIT_JonesD4plus, FamilyId.LIT_JonesD4minus):
        r, p = params
        n = r * p
        return (r >= 3 and is_probable_prime(r) and is_probable_prime(p) and is_primitive_root(r, 25)
                and _sf((20 * n + 1) * (100 * n + 1) * (80 * n - 1)))
    (k,) = params
    if fid is FamilyId.LIT_SpearmanA4:
        return _sf(k * (k * k + 108))
    if fid is FamilyId.LIT_SmithB:
        return k not in (3, 5) and _sf(k, 256 - 27 * k)
    if fid is FamilyId.LIT_SmithD:
        return k != -2 and _sf(k, 256 * k - 27)
    if fid is FamilyId.LIT_GSS:
        return closed_form_disc(fid, k) != 0
    raise ValueError(f"{fid.value} is not a literature family")


@dataclass(frozen=True)
class Exemplar:
    name: str
    poly: IntPoly
    expected_group: GaloisLabel
    expected_disc: int
    source: str


_EXEMPLARS = (
    Exemplar("f_2", _q(1, -10, 25, -20, 5), GaloisLabel.T1, 2**4 * 5**3, "real cyclic, k=2"),
    Exemplar("f_4", _q(1, -8, 16, -8, -2), GaloisLabel.T1, 2**11, "real cyclic, k=4"),
    Exemplar("g_1", _q(1, 9, 19, 9, 1), GaloisLabel.T1, 3**2 * 13**3, "real cyclic"),
    Exemplar("g_2", _q(1, 5, 5, -5, -5), GaloisLabel.T1, 3**2 * 5**3, "real cyclic"),
    Exemplar("g_3", _q(1, 11, 31, 11, 1), GaloisLabel.T1, 5**3 * 11**2, "real cyclic"),
    Exemplar("g_4", _q(1, 7, 9, -7, 1), GaloisLabel.T1, 5**3 * 7**2, "real cyclic"),
    # Discriminants of the two imaginary fields come from the resultant.
    Exemplar("Phi5", _q(1, 1, 1, 1, 1), GaloisLabel.T1, 125, "imaginary cyclic, Q(zeta_5)"),
    Exemplar("x4+4x2+2", _q(1, 0, 4, 0, 2), GaloisLabel.T1, 2**11, "imaginary cyclic, Q(zeta_16 - zeta_16^-1)"),
)


def exemplars() -> list[Exemplar]:
    return list(_EXEMPLARS)


@dataclass(frozen=True)
class Distinctness:
    same_discriminant: bool
    resolved_by_signature: bool = False

    def __str__(self) -> str:
        if not self.same_discriminant:
            return "Distinct"
        return f"SameDiscriminant(resolved_by_signature={self.resolved_by_signature})"


def distinctness_check(fid: FamilyId, t1: int, t2: int, budget: int = DEFAULT_BUDGET) -> Distinctness:
    """Decide whether two monogenic members provably generate different fields.

    Monogenic members of the same field share a discriminant, so different
    discriminants settle it; equal ones fall back to comparing real-root counts.
    """
    if t1 == t2:
        raise ValueError("parameters must differ")
    for t in (t1, t2):
        if condition_holds(fid, t, budget) is not Tristate.TRUE:
            raise ValueError(f"{fid.value} member at t={t} is not known to be monogenic")
    f1, f2 = gen(fid, t1), gen(fid, t2)
    if discriminant(f1) != discriminant(f2):
        return Distinctness(False)
    return Distinctness(True, sturm_real_root_count(f1) != sturm_real_root_count(f2))


def two_adic_valuation(n: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    n = abs(n)
    return (n & -n).bit_length() - 1


@dataclass
class OverlapReport:
    pair: str
    left_count: int
    right_count: int
    collisions: list[tuple[tuple[int, ...], tuple[int, ...], int]]
    reason: str = ""
    left_valuations: frozenset[int] = frozenset()
    right_valuations: frozenset[int] = frozenset()


@dataclass(frozen=True)
class OverlapPair:
    left: FamilyId
    right: FamilyId


OVERLAP_PAIRS = {
    "X2-vs-JonesC2C2": OverlapPair(FamilyId.X2, FamilyId.LIT_JonesC2C2),
    "X3-vs-JonesD4": OverlapPair(FamilyId.X3, FamilyId.LIT_JonesD4plus),
    "X4-vs-SpearmanA4": OverlapPair(FamilyId.X4, FamilyId.LIT_SpearmanA4),
    "X5-vs-SmithB": OverlapPair(FamilyId.X5, FamilyId.LIT_SmithB),
    "X5-vs-SmithD": OverlapPair(FamilyId.X5, FamilyId.LIT_SmithD),
    "X5-vs-GSS": OverlapPair(FamilyId.X5, FamilyId.LIT_GSS),
}


def _primes_up_to(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_probable_prime(p)]


def _param_grid(fid: FamilyId, bound: int) -> Iterable[tuple[int, ...]]:
    if fid.arity == 2:
        ps = _primes_up_to(bound)
        return ((r, p) for r in ps for p in ps)
    return ((k,) for k in range(-bound, bound + 1))


def overlap_scan(pair: str, t_bound: int, param_bound: int, budget: int = DEFAULT_BUDGET) -> OverlapReport:
    """Look for equal discriminants between monogenic members of two families.

    Monogenic polynomials defining the same field have equal discriminants,
    so an empty collision list shows the two families share no field within
    the scanned ranges.  Discriminants come from the closed forms.
    """
    if pair not in OVERLAP_PAIRS:
        raise KeyError(f"unknown overlap pair {pair!r}; choose from {sorted(OVERLAP_PAIRS)}")
    left, right = OVERLAP_PAIRS[pair].left, OVERLAP_PAIRS[pair].right
    left_discs: dict[int, list[tuple[int, ...]]] = {}
    for t in range(-t_bound, t_bound + 1):
        if condition_holds(left, t, budget) is Tristate.TRUE:
            left_discs.setdefault(closed_form_disc(left, t), []).append((t,))
    right_discs: dict[int, list[tuple[int, ...]]] = {}
    for params in _param_grid(right, param_bound):
        if literature_condition(right, *params):
            right_discs.setdefault(closed_form_disc(right, *params), []).append(params)
    collisions = [
        (lp, rp, d)
        for d in sorted(set(left_discs) & set(right_discs))
        for lp in left_discs[d]
        for rp in right_discs[d]
    ]
    lv = frozenset(two_adic_valuation(d) for d in left_discs)
    rv = frozenset(two_adic_valuation(d) for d in right_discs)
    if collisions:
        reason = "discriminant collision"
    elif lv.isdisjoint(rv):
        reason = "2-adic valuation mismatch"
    else:
        reason = "no equal discriminants"
    return OverlapReport(
        pair, sum(map(len, left_discs.values())), sum(map(len, right_discs.values())),
        collisions, reason, lv, rv,
    )
