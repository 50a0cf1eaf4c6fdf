from collections.abc import Sequence
from typing import Self

from pydantic import BaseModel, ConfigDict


class CheckResult(BaseModel):
    """The outcome of one property check of a verification suite."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    suite: str
    name: str
    passed: bool
    detail: str = ""

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.suite}: {self.name}"
        return f"{line} ({self.detail})" if self.detail else line


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    suite: str
    passed: int
    failed: int
    checks: list[CheckResult]

    @classmethod
    def build(cls, suite: str, checks: Sequence[CheckResult]) -> Self:
        passed = sum(1 for check in checks if check.passed)
        return cls(
            suite=suite,
            passed=passed,
            failed=len(checks) - passed,
            checks=list(checks),
        )

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def to_text(self) -> str:
        lines = [check.to_text() for check in self.checks]
        lines.append(f"{self.passed} passed, {self.failed} failed")
        return "\n".join(lines) + "\n"
