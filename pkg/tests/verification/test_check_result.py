from qtangle.verification.check_result import CheckResult, VerificationReport


class TestCheckResult:
    def test_write_passed_check(self) -> None:
        check = CheckResult(suite="braids", name="s1 s3 = s3 s1", passed=True)

        assert check.to_text() == "PASS braids: s1 s3 = s3 s1"

    def test_write_failed_check_with_detail(self) -> None:
        check = CheckResult(
            suite="counts", name="trefoil", passed=False, detail="3 vs 9"
        )

        assert check.to_text() == "FAIL counts: trefoil (3 vs 9)"


class TestVerificationReport:
    def test_tally_checks(self) -> None:
        checks = [
            CheckResult(suite="counts", name="unknot", passed=True),
            CheckResult(suite="counts", name="trefoil", passed=False, detail="3 vs 9"),
        ]

        report = VerificationReport.build("counts", checks)

        assert report.passed == 1
        assert report.failed == 1
        assert not report.all_passed
        assert report.to_text() == (
            "PASS counts: unknot\nFAIL counts: trefoil (3 vs 9)\n1 passed, 1 failed\n"
        )

    def test_empty_report_passes(self) -> None:
        report = VerificationReport.build("all", [])

        assert report.all_passed
        assert report.to_text() == "0 passed, 0 failed\n"
