"""Row and report builders behind the command-line tool.

Everything here returns plain dicts ready for JSON serialization, so the
CLI layer only deals with argument parsing, output and exit codes.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .dedekind import MonogenicityVerdict, Status, is_monogenic
from .families import (
    FAMILY_GROUP, Exemplar, FamilyId, MAIN_FAMILIES, closed_form_disc, condition_holds, gen,
)
from .galois import classify
from .intarith import DEFAULT_BUDGET, Tristate
from .poly import discriminant

SCAN_FIELDS = (
    "family", "t", "poly", "group", "group_ok", "disc", "disc_factored",
    "disc_matches_formula", "condition", "verdict", "witness_prime", "agree",
)


@dataclass(frozen=True)
class ScanConfig:
    budget: int = DEFAULT_BUDGET
    seed: int = 0


def factored_text(v: MonogenicityVerdict) -> str | None:
    return str(v.disc_factored) if v.disc_factored.complete else None


def verdict_dict(v: MonogenicityVerdict) -> dict:
    return {
        "status": v.status.value,
        "disc": v.disc,
        "disc_factored": factored_text(v),
        "witness_prime": v.witness_prime,
        "unfactored_cofactor": v.unfactored_cofactor,
        "field_disc": v.field_disc_if_monogenic,
        "checked_primes": [
            {
                "q": w.prime,
                "h1": w.h1.to_text(),
                "h2": w.h2.to_text(),
                "F": w.F.to_text(),
                "gcd": " ".join(str(c) for c in reversed(w.gcd_mod_q.coeffs)),
                "divides_index": w.divides_index,
            }
            for w in v.witnesses
        ],
    }


def scan_row(fid: FamilyId, t: int, config: ScanConfig = ScanConfig()) -> dict:
    f = gen(fid, t)
    label, _ = classify(f)
    disc = discriminant(f)
    cond = condition_holds(fid, t, config.budget)
    verdict = is_monogenic(f, config.budget, config.seed)
    if cond is Tristate.UNKNOWN or verdict.status is Status.UNKNOWN:
        agree = None
    else:
        agree = (cond is Tristate.TRUE) == (verdict.status is Status.MONOGENIC)
    return {
        "family": fid.value,
        "t": t,
        "poly": f.to_text(),
        "group": label.value,
        "group_ok": label is FAMILY_GROUP[fid],
        "disc": disc,
        "disc_factored": factored_text(verdict),
        "disc_matches_formula": disc == closed_form_disc(fid, t),
        "condition": cond.value,
        "verdict": verdict.status.value,
        "witness_prime": verdict.witness_prime,
        "agree": agree,
    }


def row_failed(row: dict) -> bool:
    return row["agree"] is False or not row["disc_matches_formula"] or not row["group_ok"]


def _scan_chunk(args: tuple[str, int, int, ScanConfig]) -> list[dict]:
    name, lo, hi, config = args
    fid = FamilyId(name)
    return [scan_row(fid, t, config) for t in range(lo, hi + 1)]


def scan_rows(fid: FamilyId, t_min: int, t_max: int, workers: int = 1,
              config: ScanConfig = ScanConfig(), chunk: int = 64) -> list[dict]:
    """One row per t in [t_min, t_max], ascending, independent of worker count."""
    if fid not in MAIN_FAMILIES:
        raise ValueError(f"scan supports {[f.value for f in MAIN_FAMILIES]}, not {fid.value}")
    if t_min > t_max:
        raise ValueError("t_min must not exceed t_max")
    jobs = [(fid.value, lo, min(lo + chunk - 1, t_max), config) for lo in range(t_min, t_max + 1, chunk)]
    if workers <= 1:
        parts = map(_scan_chunk, jobs)
        return [row for part in parts for row in part]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_scan_chunk, jobs))
    rows = [row for part in parts for row in part]
    rows.sort(key=lambda r: r["t"])
    return rows


def scan_summary(rows: list[dict]) -> dict:
    return {
        "summary": True,
        "rows": len(rows),
        "monogenic": sum(r["verdict"] == Status.MONOGENIC.value for r in rows),
        "not_monogenic": sum(r["verdict"] == Status.NOT_MONOGENIC.value for r in rows),
        "unknown": sum(r["agree"] is None for r in rows),
        "agreement_failures": sum(r["agree"] is False for r in rows),
        "formula_mismatches": sum(not r["disc_matches_formula"] for r in rows),
        "group_mismatches": sum(not r["group_ok"] for r in rows),
    }


def check_exemplar(ex: Exemplar, config: ScanConfig = ScanConfig()) -> dict:
    reasons = []
    disc = discriminant(ex.poly)
    if disc != ex.expected_disc:
        reasons.append(f"disc {disc} != expected {ex.expected_disc}")
    try:
        label, _ = classify(ex.poly)
        group = label.value
        if label is not ex.expected_group:
            reasons.append(f"group {group} != expected {ex.expected_group.value}")
        status = is_monogenic(ex.poly, config.budget, config.seed).status.value
        if status != Status.MONOGENIC.value:
            reasons.append(f"verdict {status}")
    except ValueError as exc:
        group = status = None
        reasons.append(str(exc))
    return {
        "name": ex.name,
        "poly": ex.poly.to_text(),
        "pass": not reasons,
        "group": group,
        "disc": disc,
        "expected_disc": ex.expected_disc,
        "verdict": status,
        "reasons": reasons,
    }
