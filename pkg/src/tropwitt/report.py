"""Violation reports returned by the structural validators.

Validators never raise on bad structures; they collect every failed axiom
instance together with a witness so callers (and the CLI) can show exactly
which triple or partition broke.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple
    detail: str

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "witness": [str(w) for w in self.witness],
            "detail": self.detail,
        }


@dataclass
class Report:
    subject: str
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, witness: tuple, detail: str) -> None:
        self.violations.append(Violation(kind, witness, detail))

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "violations": [v.to_json() for v in self.violations],
        }

    def __bool__(self) -> bool:
        return self.ok
