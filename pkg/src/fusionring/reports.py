"""Report containers shared by the validators and structure verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    """A single axiom failure: which axiom, at which indices, what vs what."""

    axiom: str
    where: tuple[int, ...]
    expected: int
    found: int

    def __str__(self):
        idx = ",".join(str(i) for i in self.where)
        return f"{self.axiom} at ({idx}): expected {self.expected}, found {self.found}"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()

    @classmethod
    def from_violations(cls, violations) -> "ValidationReport":
        vs = tuple(violations)
        return cls(ok=not vs, violations=vs)

    def __str__(self):
        if self.ok:
            return "valid: all axioms hold"
        lines = [f"invalid: {len(self.violations)} violation(s)"]
        lines += [f"  {v}" for v in self.violations]
        return "\n".join(lines)


@dataclass(frozen=True)
class Check:
    """One named statement with its outcome and a witness/counterexample note."""

    name: str
    passed: bool
    detail: str = ""

    def __str__(self):
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __str__(self):
        return "\n".join(str(c) for c in self.checks)

    def __add__(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.checks + other.checks)
