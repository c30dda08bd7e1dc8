"""Check results and suite reports, with the published JSON shape."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field


@dataclass
class CheckResult:
    id: str
    description: str
    paper_eq: str
    status: str  # pass | fail | error
    residual: str | None = None
    duration_ms: float = 0.0

    @property
    def passed(self):
        return self.status == "pass"

    def as_dict(self):
        return {
            "id": self.id,
            "description": self.description,
            "paper_eq": self.paper_eq,
            "status": self.status,
            "residual": self.residual,
            "duration_ms": round(self.duration_ms, 3),
        }


def timed_check(check_id, description, paper_eq, fn):
    """Run fn() -> residual text or None; build a CheckResult from it."""
    t0 = time.perf_counter()
    try:
        residual = fn()
        status = "pass" if residual is None else "fail"
    except Exception as exc:  # a crashed check is an error, not a silent skip
        residual = f"{type(exc).__name__}: {exc}"
        status = "error"
    ms = (time.perf_counter() - t0) * 1000.0
    return CheckResult(check_id, description, paper_eq, status, residual, ms)


@dataclass
class SuiteReport:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def summary(self):
        out = {"pass": 0, "fail": 0, "error": 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def ok(self):
        s = self.summary
        return s["fail"] == 0 and s["error"] == 0

    def sorted(self):
        rep = SuiteReport(self.suite, sorted(self.checks, key=lambda c: c.id))
        return rep

    def as_dict(self):
        return {
            "suite": self.suite,
            "checks": [c.as_dict() for c in self.checks],
            "summary": self.summary,
        }

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2)

    def to_text(self):
        lines = []
        for c in self.checks:
            line = f"[{c.status.upper():5s}] {c.id}: {c.description}"
            if c.paper_eq:
                line += f"  [{c.paper_eq}]"
            if c.residual and c.status != "pass":
                line += f"\n        residual: {c.residual}"
            lines.append(line)
        s = self.summary
        lines.append(
            f"suite {self.suite}: {s['pass']} passed, {s['fail']} failed, "
            f"{s['error']} errors"
        )
        return "\n".join(lines)


JSON_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["suite", "checks", "summary"],
    "properties": {
        "suite": {"type": "string"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "id", "description", "paper_eq", "status",
                    "residual", "duration_ms",
                ],
                "properties": {
                    "id": {"type": "string"},
                    "description": {"type": "string"},
                    "paper_eq": {"type": "string"},
                    "status": {"enum": ["pass", "fail", "error"]},
                    "residual": {"type": ["string", "null"]},
                    "duration_ms": {"type": "number"},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["pass", "fail", "error"],
            "properties": {
                "pass": {"type": "integer"},
                "fail": {"type": "integer"},
                "error": {"type": "integer"},
            },
        },
    },
}
