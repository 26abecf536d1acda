"""Certificate data model: named checks with status and evidence, and a verdict."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .. import __version__
from ..exactalg.integers import BudgetExceeded

SCHEMA = 1
PASS, FAIL, CONDITIONAL = "pass", "fail", "conditional"

VERDICT_LABELS = {
    PASS: "all checked hypotheses hold; existence of the unramified extension rests on the "
    "local-global criterion for central embedding problems",
    CONDITIONAL: "no check failed; some checks are pending an integer factorization",
    FAIL: "at least one checked hypothesis failed",
}


@dataclass(frozen=True)
class CheckSpec:
    ident: str
    description: str
    binding: str
    severity: str = "required"


@dataclass
class Check:
    spec: CheckSpec
    status: str
    evidence: dict

    def to_json(self):
        return {
            "id": self.spec.ident,
            "description": self.spec.description,
            "binding": self.spec.binding,
            "status": self.status,
            "evidence": self.evidence,
        }


@dataclass
class Certificate:
    kind: str
    parameter: str
    d: int | None = None
    checks: list = field(default_factory=list)
    auxiliary: dict = field(default_factory=dict)
    wall_clock: float = 0.0

    @property
    def verdict(self):
        statuses = {c.status for c in self.checks}
        if FAIL in statuses or not self.checks:
            return FAIL
        if CONDITIONAL in statuses:
            return CONDITIONAL
        return PASS

    def status_of(self, ident):
        for c in self.checks:
            if c.spec.ident == ident:
                return c.status
        raise KeyError(ident)

    def check(self, ident):
        return next(c for c in self.checks if c.spec.ident == ident)

    def to_json(self, with_timing=True):
        out = {
            "schema": SCHEMA,
            "kind": self.kind,
            "parameter": self.parameter,
            "d": self.d,
            "checks": [c.to_json() for c in self.checks],
            "auxiliary": self.auxiliary,
            "toolkit_version": __version__,
            "verdict": self.verdict,
            "verdict_label": VERDICT_LABELS[self.verdict],
        }
        if with_timing:
            out["wall_clock_seconds"] = round(self.wall_clock, 3)
        return out

    def dumps(self, with_timing=True):
        return json.dumps(self.to_json(with_timing), sort_keys=True, indent=2)

    def summary(self):
        lines = [f"{self.kind} certificate for {self.parameter}: {self.verdict.upper()}"]
        if self.d is not None:
            lines.append(f"  quadratic field square class d = {self.d}")
        for c in self.checks:
            lines.append(f"  [{c.status:>11}] {c.spec.ident}: {c.spec.description}")
        lines.append(f"  {VERDICT_LABELS[self.verdict]}")
        return "\n".join(lines)


def run_check(cert, spec, fn):
    """Run fn() -> (ok, evidence); budget exhaustion makes the check conditional."""
    try:
        ok, evidence = fn()
        status = PASS if ok else FAIL
    except BudgetExceeded as exc:
        status = CONDITIONAL
        evidence = {
            "reason": "factorization budget exhausted",
            "number": str(exc.n),
            "cofactor": str(exc.cofactor),
        }
    except Exception as exc:  # a crash is recorded, never silently passed
        status = FAIL
        evidence = {"error": f"{type(exc).__name__}: {exc}"}
    cert.checks.append(Check(spec, status, evidence))
    return status


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
