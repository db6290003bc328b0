"""Verification results shared by the checking modules and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class Report:
    claim: str
    n: Optional[int]
    status: str
    witness: Optional[str] = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        out = {"claim": self.claim, "n": self.n, "status": self.status, "witness": self.witness}
        if self.details:
            out["details"] = self.details
        return out


def status_of(ok: bool) -> str:
    return PASS if ok else FAIL
