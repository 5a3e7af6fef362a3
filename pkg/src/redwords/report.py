"""Pass/fail reporting shared by the verification entry points."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str | None = None

    def line(self) -> str:
        """Render as ``CHECK <name>: PASS|FAIL [detail]``."""
        status = "PASS" if self.passed else "FAIL"
        suffix = f" {self.detail}" if self.detail else ""
        return f"CHECK {self.name}: {status}{suffix}"


def all_passed(results: list[CheckResult]) -> bool:
    return all(r.passed for r in results)
