"""Shared check report: named law violations with witnessing cells.

Every check_* function returns a Report.  Violations are split into a
structural section (well-formedness of the underlying tables and functors)
and a law section (the axioms proper).  Each law caps at VIOLATION_CAP
stored instances; anything beyond is counted in `suppressed`.
"""
from __future__ import annotations

from dataclasses import dataclass, field

VIOLATION_CAP = 100


@dataclass(frozen=True)
class Violation:
    law: str
    at: tuple[str, ...]
    detail: str = ""

    def __str__(self) -> str:
        loc = ", ".join(self.at)
        msg = f"{self.law} at ({loc})"
        return f"{msg}: {self.detail}" if self.detail else msg


@dataclass(eq=False)
class Report:
    subject: str
    structural: tuple[Violation, ...] = ()
    violations: tuple[Violation, ...] = ()
    suppressed: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.structural and not self.violations and not self.suppressed

    def to_text(self) -> str:
        lines = []
        status = "PASS" if self.ok else "FAIL"
        lines.append(f"{status} {self.subject}")
        for v in self.structural:
            lines.append(f"  structural: {v}")
        for v in self.violations:
            lines.append(f"  violation: {v}")
        for law, n in sorted(self.suppressed.items()):
            lines.append(f"  ({n} further {law} violations suppressed)")
        return "\n".join(lines)

    def to_tree(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "structural": [
                {"law": v.law, "at": list(v.at), "detail": v.detail}
                for v in self.structural
            ],
            "violations": [
                {"law": v.law, "at": list(v.at), "detail": v.detail}
                for v in self.violations
            ],
            "suppressed": dict(sorted(self.suppressed.items())),
        }


class ReportBuilder:
    """Collects violations with a per-law cap."""

    def __init__(self, subject: str, cap: int = VIOLATION_CAP):
        self.subject = subject
        self.cap = cap
        self._structural: list[Violation] = []
        self._violations: list[Violation] = []
        self._law_counts: dict[str, int] = {}
        self._suppressed: dict[str, int] = {}

    def _put(self, bucket: list[Violation], law: str, at, detail: str) -> None:
        n = self._law_counts.get(law, 0)
        self._law_counts[law] = n + 1
        if n >= self.cap:
            self._suppressed[law] = self._suppressed.get(law, 0) + 1
            return
        bucket.append(Violation(law, tuple(str(x) for x in at), detail))

    def structural(self, law: str, at=(), detail: str = "") -> None:
        self._put(self._structural, law, at, detail)

    def violation(self, law: str, at=(), detail: str = "") -> None:
        self._put(self._violations, law, at, detail)

    def merge(self, other: Report, prefix_at: tuple[str, ...] = ()) -> None:
        for v in other.structural:
            self._put(self._structural, v.law, prefix_at + v.at, v.detail)
        for v in other.violations:
            self._put(self._violations, v.law, prefix_at + v.at, v.detail)
        for law, n in other.suppressed.items():
            self._suppressed[law] = self._suppressed.get(law, 0) + n
            self._law_counts[law] = self._law_counts.get(law, 0) + n

    def suppress(self, law: str, count: int) -> None:
        """Record `count` violations of `law` beyond the stored ones."""
        if count > 0:
            self._suppressed[law] = self._suppressed.get(law, 0) + count
            self._law_counts[law] = self._law_counts.get(law, 0) + count

    def build(self) -> Report:
        return Report(
            subject=self.subject,
            structural=tuple(self._structural),
            violations=tuple(self._violations),
            suppressed=dict(self._suppressed),
        )
