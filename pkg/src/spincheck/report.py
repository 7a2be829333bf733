"""Check reports and their JSON form."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

__all__ = ["CheckReport", "EXACT_ZERO", "reports_to_json"]

EXACT_ZERO = "exact-zero"

_RESERVED = {"check", "status", "max_abs_residual", "params", "elapsed_ms"}


@dataclass
class CheckReport:
    """Outcome of one verification.

    ``max_abs_residual`` is :data:`EXACT_ZERO` for a passing exact check, a
    float for numeric checks, or a count of offending items for a failing
    exact check.  ``details`` carries check-specific fields; they are
    written next to the fixed keys in JSON.
    """

    check_name: str
    passed: bool
    max_abs_residual: Any
    params: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        out = {
            "check": self.check_name,
            "status": self.status,
            "max_abs_residual": self.max_abs_residual,
            "params": self.params,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        for k, v in self.details.items():
            if k in _RESERVED:
                raise KeyError(f"detail key {k!r} collides with a report field")
            out[k] = v
        return out

    def summary(self) -> str:
        res = self.max_abs_residual
        res = f"{res:.3e}" if isinstance(res, float) else str(res)
        return f"[{self.status.upper()}] {self.check_name}: residual={res} ({self.elapsed_ms:.0f} ms)"


def reports_to_json(reports: list[CheckReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, ensure_ascii=False) + "\n"
