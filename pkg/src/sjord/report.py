"""Structured outcomes of verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .superlinalg import GradedMatrix

PASS = "pass"
VARIANT_PASS = "variant-pass"
FAIL = "fail"


@dataclass
class Witness:
    row: int
    col: int
    lhs: str
    rhs: str

    def as_dict(self):
        return {"row": self.row, "col": self.col, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class Check:
    id: str
    status: str
    variant: Optional[str] = None
    witness: Optional[Witness] = None
    note: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status in (PASS, VARIANT_PASS)

    def as_dict(self):
        return {
            "id": self.id,
            "status": self.status,
            "variant": self.variant,
            "witness": self.witness.as_dict() if self.witness else None,
        }


@dataclass
class CheckReport:
    suite: str
    n: int
    rep: str = ""
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    def variants(self):
        return [c for c in self.checks if c.status == VARIANT_PASS]

    def get(self, check_id: str) -> Check:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def compare(self, check_id: str, lhs: GradedMatrix, rhs: GradedMatrix,
                note: Optional[str] = None) -> Check:
        """Record a plain equality check between two matrices."""
        return self.add(matrix_check(check_id, lhs, rhs, note=note))

    def extend(self, other: "CheckReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.id, c.status, c.variant, c.witness, c.note))
        self.notes.extend(other.notes)

    def as_dict(self):
        return {
            "suite": self.suite,
            "n": self.n,
            "rep": self.rep,
            "checks": [c.as_dict() for c in self.checks],
        }

    def summary(self) -> str:
        n_pass = sum(c.status == PASS for c in self.checks)
        n_var = len(self.variants())
        n_fail = len(self.failures())
        return (f"{self.suite} n={self.n} rep={self.rep}: {n_pass} pass, "
                f"{n_var} variant-pass, {n_fail} fail")

    def to_text(self) -> str:
        lines = [self.summary()]
        lines.extend(f"  note: {n}" for n in self.notes)
        for c in self.checks:
            line = f"  [{c.status}] {c.id}"
            if c.variant:
                line += f"  (variant: {c.variant})"
            if c.witness:
                w = c.witness
                line += f"  witness ({w.row},{w.col}): lhs={w.lhs} rhs={w.rhs}"
            lines.append(line)
        return "\n".join(lines)


def witness_of(lhs: GradedMatrix, rhs: GradedMatrix) -> Optional[Witness]:
    diff = lhs.first_difference(rhs)
    if diff is None:
        return None
    r, c, a, b = diff
    return Witness(r, c, str(a), str(b))


def matrix_check(check_id: str, lhs: GradedMatrix, rhs: GradedMatrix,
                 note: Optional[str] = None) -> Check:
    w = witness_of(lhs, rhs)
    return Check(check_id, PASS if w is None else FAIL, None, w, note)
