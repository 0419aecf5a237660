"""Galois groups and monogenicity of integer quartics, in exact arithmetic."""

from .dedekind import MonogenicityVerdict, Status, dedekind_at_prime, is_monogenic
from .galois import GaloisLabel, classify, frobenius_cycle_types, resolvent_cubic
from .poly import IntPoly, discriminant

__all__ = [
    "GaloisLabel",
    "IntPoly",
    "MonogenicityVerdict",
    "Status",
    "classify",
    "dedekind_at_prime",
    "discriminant",
    "frobenius_cycle_types",
    "is_monogenic",
    "resolvent_cubic",
]
