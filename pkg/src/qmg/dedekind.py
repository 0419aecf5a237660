"""Dedekind's index criterion and the monogenicity decision built on it.

A prime q can divide the index [Z_K : Z[theta]] only if q^2 divides the
polynomial discriminant, so the decision factors the discriminant and
runs the criterion at each such prime.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .fqpoly import FqPoly, factor_mod, gcd_mod, monic_lift, reduce_mod
from .intarith import DEFAULT_BUDGET, FactoredInt, Unknown, factor
from .irreducible import is_irreducible
from .poly import IntPoly, discriminant


class Status(enum.Enum):
    MONOGENIC = "monogenic"
    NOT_MONOGENIC = "not_monogenic"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class DedekindWitness:
    prime: int
    h1: IntPoly
    h2: IntPoly
    F: IntPoly
    gcd_mod_q: FqPoly
    divides_index: bool


@dataclass(frozen=True)
class MonogenicityVerdict:
    status: Status
    disc: int
    disc_factored: FactoredInt
    witness_prime: int | None = None
    unfactored_cofactor: int | None = None
    checked_primes: tuple[tuple[int, bool], ...] = ()
    witnesses: tuple[DedekindWitness, ...] = field(default=(), compare=False)
    field_disc_if_monogenic: int | None = None


def _check_input(T: IntPoly) -> None:
    if not T.is_monic():
        raise ValueError(f"{T} is not monic")
    if not 2 <= T.degree <= 4:
        raise ValueError(f"degree {T.degree} outside 2..4")
    if not is_irreducible(T):
        raise ValueError(f"{T} is reducible over Q")


def criterion_from_lifts(T: IntPoly, q: int, h1: IntPoly, h2: IntPoly) -> DedekindWitness:
    """Evaluate the criterion for caller-chosen monic lifts h1, h2.

    h1 must lift the radical of T mod q and h2 the cofactor T / h1 mod q;
    the outcome does not depend on which lifts are chosen.
    """
    if reduce_mod(h1 * h2 - T, q).coeffs:
        raise ValueError(f"h1*h2 is not congruent to T modulo {q}")
    F = (h1 * h2 - T).exact_div_scalar(q)
    g = gcd_mod(gcd_mod(reduce_mod(h1, q), reduce_mod(h2, q)), reduce_mod(F, q))
    return DedekindWitness(q, h1, h2, F, g, not g.is_one())


def _dedekind(T: IntPoly, q: int, seed: int = 0) -> DedekindWitness:
    Tbar = reduce_mod(T, q)
    h1bar = factor_mod(Tbar, seed=seed).radical()
    h2bar, rem = divmod(Tbar, h1bar)
    assert rem.is_zero()
    return criterion_from_lifts(T, q, monic_lift(h1bar), monic_lift(h2bar))


def dedekind_at_prime(T: IntPoly, q: int, seed: int = 0) -> DedekindWitness:
    """Run the criterion at q using lifts with coefficients in [0, q)."""
    _check_input(T)
    return _dedekind(T, q, seed)


def index_prime_candidates(T: IntPoly, budget: int = DEFAULT_BUDGET) -> list[int] | Unknown:
    """Primes whose square divides disc(T), or Unknown when factoring stalls."""
    disc = discriminant(T)
    if disc == 0:
        raise ArithmeticError(f"{T} has zero discriminant but was expected to be irreducible")
    f = factor(disc, budget)
    if not f.complete:
        return Unknown(f.cofactor)
    return [p for p, e in f.prime_powers if e >= 2]


def is_monogenic(T: IntPoly, budget: int = DEFAULT_BUDGET, seed: int = 0) -> MonogenicityVerdict:
    _check_input(T)
    disc = discriminant(T)
    if disc == 0:
        raise ArithmeticError(f"{T} has zero discriminant but was expected to be irreducible")
    fd = factor(disc, budget, seed)
    checked = []
    witnesses = []
    for p, e in fd.prime_powers:
        if e < 2:
            continue
        w = _dedekind(T, p, seed)
        checked.append((p, w.divides_index))
        witnesses.append(w)
        if w.divides_index:
            return MonogenicityVerdict(
                Status.NOT_MONOGENIC, disc, fd, witness_prime=p,
                checked_primes=tuple(checked), witnesses=tuple(witnesses),
            )
    if not fd.complete:
        return MonogenicityVerdict(
            Status.UNKNOWN, disc, fd, unfactored_cofactor=fd.cofactor,
            checked_primes=tuple(checked), witnesses=tuple(witnesses),
        )
    return MonogenicityVerdict(
        Status.MONOGENIC, disc, fd, checked_primes=tuple(checked),
        witnesses=tuple(witnesses), field_disc_if_monogenic=disc,
    )
