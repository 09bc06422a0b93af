"""Shared pass/fail reporting for recurrence and brute-force check suites."""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named identity check at one parameter point."""

    check: str
    ell: int
    n: int | None
    params: dict
    status: str  # "pass" | "fail"
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        d = {
            "check": self.check,
            "ell": self.ell,
            "n": self.n,
            "params": self.params,
            "status": self.status,
        }
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


def report_json(results: list[CheckResult]) -> str:
    """Canonical JSON rendering: a list of check objects, key-sorted."""
    return json.dumps([r.as_dict() for r in results], indent=2, sort_keys=True)
