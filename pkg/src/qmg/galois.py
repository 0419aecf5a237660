"""Galois groups of irreducible monic quartics.

The main route is the cubic resolvent test: the rational roots of the
resolvent cubic, whether the discriminant is a square, and in the
one-root case whether an auxiliary quartic g splits over the quadratic
splitting field of the resolvent.  ``frobenius_cycle_types`` is an
independent statistical check based on factoring f modulo many primes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .fqpoly import quartic_degree_patterns
from .intarith import Unknown, is_perfect_square, is_probable_prime, small_primes, squarefree_part
from .irreducible import is_irreducible, rational_roots
from .poly import IntPoly, discriminant, divmod_monic


class GaloisLabel(enum.Enum):
    T1 = "4T1"
    T2 = "4T2"
    T3 = "4T3"
    T4 = "4T4"
    T5 = "4T5"

    @property
    def group_name(self) -> str:
        return _GROUP_NAMES[self]

    def __str__(self) -> str:
        return self.value


_GROUP_NAMES = {
    GaloisLabel.T1: "C4",
    GaloisLabel.T2: "C2xC2",
    GaloisLabel.T3: "D4",
    GaloisLabel.T4: "A4",
    GaloisLabel.T5: "S4",
}

# Cycle types that occur in each transitive subgroup of S4.
CYCLE_TYPES = ("1111", "112", "22", "13", "4")
GROUP_CYCLE_TYPES = {
    GaloisLabel.T1: frozenset({"1111", "22", "4"}),
    GaloisLabel.T2: frozenset({"1111", "22"}),
    GaloisLabel.T3: frozenset({"1111", "112", "22", "4"}),
    GaloisLabel.T4: frozenset({"1111", "22", "13"}),
    GaloisLabel.T5: frozenset(CYCLE_TYPES),
}

# Each separating cycle type has density >= 1/4 in every group containing
# it, so after 40 unramified primes the chance of missing one is < (3/4)**40.
MIN_PRIMES_FOR_INFERENCE = 40


@dataclass(frozen=True)
class ClassificationEvidence:
    resolvent: IntPoly
    rational_roots_of_resolvent: tuple[int, ...]
    disc_is_square: bool
    chosen_s: int | None = None
    splitting_core_m: int | None = None
    g_factors: tuple[IntPoly, IntPoly] | None = None


@dataclass(frozen=True)
class CycleTypeProfile:
    observed: frozenset[str]
    primes_used: int
    counts: dict[str, int] = field(default_factory=dict, compare=False)
    inferred: GaloisLabel | None = None


def _quartic_coeffs(f: IntPoly) -> tuple[int, int, int, int]:
    if f.degree != 4 or not f.is_monic():
        raise ValueError(f"expected a monic quartic, got {f}")
    return f[3], f[2], f[1], f[0]


def resolvent_cubic(f: IntPoly) -> IntPoly:
    """x^3 - b x^2 + (ac - 4d) x - (a^2 d - 4bd + c^2) for f = x^4 + a x^3 + b x^2 + c x + d."""
    a, b, c, d = _quartic_coeffs(f)
    return IntPoly.from_desc([1, -b, a * c - 4 * d, -(a * a * d - 4 * b * d + c * c)])


def g_factors(f: IntPoly, s: int) -> tuple[IntPoly, IntPoly]:
    a, b, _, d = _quartic_coeffs(f)
    return IntPoly.from_desc([1, -s, d]), IntPoly.from_desc([1, a, b - s])


def _quadratic_disc(p: IntPoly) -> int:
    return p[1] * p[1] - 4 * p[2] * p[0]


def _splits_over(disc: int, m: int) -> bool:
    if disc == 0 or is_perfect_square(disc):
        return True
    core = squarefree_part(disc)
    if isinstance(core, Unknown):
        raise ArithmeticError(f"could not factor {disc}")
    return core == m


def g_splits_over_L(f: IntPoly, s: int, m: int) -> bool:
    """Whether both quadratic factors of g split over Q(sqrt(m))."""
    return all(_splits_over(_quadratic_disc(h), m) for h in g_factors(f, s))


def classify(f: IntPoly) -> tuple[GaloisLabel, ClassificationEvidence]:
    _quartic_coeffs(f)
    if not is_irreducible(f):
        raise ValueError(f"{f} is reducible over Q")
    r = resolvent_cubic(f)
    roots = tuple(rational_roots(r))
    disc_square = is_perfect_square(discriminant(f))
    distinct = sorted(set(roots))
    if len(distinct) >= 2:
        # two rational roots force the third
        return GaloisLabel.T2, ClassificationEvidence(r, roots, disc_square)
    if not distinct:
        label = GaloisLabel.T4 if disc_square else GaloisLabel.T5
        return label, ClassificationEvidence(r, roots, disc_square)
    s = distinct[0]
    residual, rem = divmod_monic(r, IntPoly((-s, 1)))
    assert rem.is_zero()
    m = squarefree_part(_quadratic_disc(residual))
    if isinstance(m, Unknown):
        raise ArithmeticError(f"could not factor the resolvent discriminant {_quadratic_disc(residual)}")
    evidence = ClassificationEvidence(r, roots, disc_square, s, m, g_factors(f, s))
    return (GaloisLabel.T1 if g_splits_over_L(f, s, m) else GaloisLabel.T3), evidence


def cycle_type_name(degrees: tuple[int, ...]) -> str:
    return "".join(str(d) for d in sorted(degrees))


def infer_group(observed: frozenset[str] | set[str]) -> GaloisLabel:
    """Group whose cycle types are exactly separated by the presence of 112, 13 and 4."""
    if "13" in observed:
        return GaloisLabel.T5 if ("112" in observed or "4" in observed) else GaloisLabel.T4
    if "112" in observed:
        return GaloisLabel.T3
    if "4" in observed:
        return GaloisLabel.T1
    return GaloisLabel.T2


def frobenius_cycle_types(f: IntPoly, prime_bound: int) -> CycleTypeProfile:
    """Cycle types of Frobenius at the unramified primes up to prime_bound."""
    _quartic_coeffs(f)
    disc = discriminant(f)
    if disc == 0:
        raise ValueError(f"{f} has a repeated root")
    if prime_bound <= small_primes()[-1]:
        primes = [p for p in small_primes() if p <= prime_bound and disc % p]
    else:
        primes = [p for p in range(2, prime_bound + 1) if disc % p and is_probable_prime(p)]
    counts: dict[str, int] = {}
    for degs in quartic_degree_patterns(f, primes):
        name = cycle_type_name(degs)
        counts[name] = counts.get(name, 0) + 1
    observed = frozenset(counts)
    inferred = infer_group(observed) if len(primes) >= MIN_PRIMES_FOR_INFERENCE else None
    return CycleTypeProfile(observed, len(primes), counts, inferred)
