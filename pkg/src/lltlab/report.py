"""Verification reports returned by every ``verify_*`` / ``check_*`` routine."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any

from lltlab.symfunc import SymPoly


@dataclass
class VerificationReport:
    claim: str
    params: dict
    holds: bool
    witness: dict | None = None
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError("a failing report must carry a witness")

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "params": self.params,
            "verdict": self.verdict,
            "witness": self.witness,
            "elapsed": round(self.elapsed, 6),
            "details": _jsonable(self.details),
        }

    def to_json(self, timing: bool = True) -> str:
        d = self.to_dict()
        if not timing:
            d.pop("elapsed")
        return json.dumps(d, sort_keys=True)

    def line(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"[{'PASS' if self.holds else 'FAIL'}] {self.claim}({args}) {self.elapsed:.3f}s"


def _jsonable(obj: Any):
    if isinstance(obj, SymPoly):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return obj


def compare(claim: str, params: dict, lhs: SymPoly, rhs: SymPoly, started: float, **details) -> VerificationReport:
    """Structural comparison of two sides; the witness holds both sides and their difference."""
    holds = lhs == rhs
    witness = None
    if not holds:
        if lhs.num_vars == rhs.num_vars:
            diff = (lhs - rhs).to_json()
        else:
            diff = {"num_vars_mismatch": [lhs.num_vars, rhs.num_vars]}
        witness = {"lhs": lhs.to_json(), "rhs": rhs.to_json(), "difference": diff}
    return VerificationReport(claim, params, holds, witness, time.perf_counter() - started, details)


def combine(claim: str, params: dict, reports: list[VerificationReport], started: float, **details) -> VerificationReport:
    """Aggregate sub-reports; the witness lists the failing ones."""
    failing = [r for r in reports if not r.holds]
    witness = {"failures": [r.to_dict() for r in failing]} if failing else None
    details.setdefault("checks", len(reports))
    return VerificationReport(claim, params, not failing, witness, time.perf_counter() - started, details)
