"""Structured outcomes of scans and certificates, and the JSON report schema."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Iterator

SCHEMA_VERSION = "1.0"

#: Failures and undecided points listed per check in JSON output.
MAX_LISTED = 50

BOUNDED_NOTE = (
    "bounded lattice verification: holds at every integer point checked, "
    "not a proof for all n"
)


class Status(str, Enum):
    VERIFIED = "verified"
    UNDECIDED = "undecided"
    VIOLATION = "violation"

    @property
    def rank(self) -> int:
        return {"verified": 0, "undecided": 1, "violation": 2}[self.value]


def worst(statuses: Iterable[Status]) -> Status:
    return max(statuses, key=lambda s: s.rank, default=Status.VERIFIED)


@dataclass
class VerificationReport:
    """One check: what region was scanned, how, and what went wrong.

    ``violations`` are counterexamples; ``undecided`` are points that stayed
    open at the precision cap. Status is derived, never set by hand.
    Scans of signs (``SignScanReport``) and of recurrence residuals
    (``ResidualReport``) use this same shape.
    """

    id: str
    region: str
    method: str = "exact-pointwise"
    points_checked: int = 0
    violations: list = field(default_factory=list)
    undecided: list = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)
    duration_ms: float = 0.0

    @property
    def status(self) -> Status:
        if self.violations:
            return Status.VIOLATION
        if self.undecided:
            return Status.UNDECIDED
        return Status.VERIFIED

    @property
    def ok(self) -> bool:
        return self.status is Status.VERIFIED

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "region": self.region,
            "method": self.method,
            "status": self.status.value,
            "points_checked": self.points_checked,
            "failures": len(self.violations),
            "failure_examples": [_jsonable(v) for v in self.violations[:MAX_LISTED]],
            "undecided": len(self.undecided),
            "undecided_examples": [_jsonable(v) for v in self.undecided[:MAX_LISTED]],
            "notes": list(self.notes),
            "info": _jsonable(self.info),
            "duration_ms": round(self.duration_ms, 3),
        }

    def summary(self) -> str:
        extra = ""
        if self.violations:
            extra = f"  first failure: {self.violations[0]}"
        elif self.undecided:
            extra = f"  first undecided: {self.undecided[0]}"
        return (f"[{self.status.value:>9}] {self.id:<28} {self.points_checked:>8} pts "
                f"{self.method:<20} {self.region}{extra}")


SignScanReport = VerificationReport
ResidualReport = VerificationReport


@dataclass
class CertReport:
    """Aggregate of checks; its status is the worst of theirs."""

    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    checks: list[VerificationReport] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def status(self) -> Status:
        return worst(c.status for c in self.checks)

    def add(self, check: VerificationReport) -> VerificationReport:
        self.checks.append(check)
        return check

    def extend(self, other: "CertReport") -> None:
        self.checks.extend(other.checks)
        self.notes.extend(n for n in other.notes if n not in self.notes)

    def get(self, check_id: str) -> VerificationReport:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def to_document(self) -> dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "parameters": _jsonable(self.parameters),
            "status": self.status.value,
            "notes": list(self.notes),
            "checks": [c.to_dict() for c in self.checks],
        }

    def summary(self) -> str:
        lines = [c.summary() for c in self.checks]
        lines += [f"note: {n}" for n in self.notes]
        lines.append(f"overall: {self.status.value}")
        return "\n".join(lines)


@contextmanager
def stopwatch(report: VerificationReport) -> Iterator[VerificationReport]:
    t0 = time.perf_counter()
    try:
        yield report
    finally:
        report.duration_ms = (time.perf_counter() - t0) * 1000.0


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Enum):
        return x.value
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, str, float)) or x is None:
        return x
    if isinstance(x, int):
        # keep huge integers exact for non-Python readers
        return x if abs(x) < 2**53 else str(x)
    return str(x)
