"""Validation reports and the error types shared by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable


class StructuralError(ValueError):
    """Input tables are malformed (dangling ids, missing entries).

    Kept separate from axiom failures: a structural error means the data
    does not even describe a candidate structure.
    """


class SearchTooLarge(RuntimeError):
    """An exhaustive search would exceed its configured cap."""


@dataclass(frozen=True)
class Violation:
    law: str
    location: tuple
    detail: str = ""

    def __str__(self) -> str:
        loc = ", ".join(map(str, self.location))
        text = f"{self.law} at ({loc})"
        return f"{text}: {self.detail}" if self.detail else text


@dataclass
class ValidationReport:
    """Outcome of an exhaustive law check.

    ``checked`` counts instances examined; an empty violation list means
    every instance passed.
    """

    subject: str = ""
    violations: list[Violation] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def add(self, law: str, location: Iterable[Any], detail: str = "") -> None:
        self.violations.append(Violation(law, tuple(location), detail))

    def expect(self, cond: bool, law: str, location: Iterable[Any], detail: str = "") -> None:
        self.checked += 1
        if not cond:
            self.add(law, location, detail)

    def extend(self, other: "ValidationReport", prefix: str = "") -> None:
        for v in other.violations:
            law = f"{prefix}{v.law}" if prefix else v.law
            self.violations.append(Violation(law, v.location, v.detail))
        self.checked += other.checked

    def laws(self) -> set[str]:
        return {v.law for v in self.violations}

    def count(self, law: str) -> int:
        return sum(1 for v in self.violations if v.law == law)

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checked": self.checked,
            "violations": [
                {"law": v.law, "location": [str(x) for x in v.location], "detail": v.detail}
                for v in self.violations
            ],
        }

    def __str__(self) -> str:
        head = f"{self.subject or 'report'}: {'PASS' if self.ok else 'FAIL'} ({self.checked} checked"
        head += f", {len(self.violations)} violations)"
        lines = [head] + [f"  - {v}" for v in self.violations[:20]]
        if len(self.violations) > 20:
            lines.append(f"  ... {len(self.violations) - 20} more")
        return "\n".join(lines)
