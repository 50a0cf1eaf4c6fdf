from .check_result import CheckResult, VerificationReport
from .suites import SUITES, run_suite, suite_names

__all__ = [
    "SUITES",
    "CheckResult",
    "VerificationReport",
    "run_suite",
    "suite_names",
]
