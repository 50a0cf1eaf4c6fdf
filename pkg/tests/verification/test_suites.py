import pytest

from qtangle.configuration.qtangle_settings import QtangleSettings
from qtangle.verification.check_result import CheckResult
from qtangle.verification.suites import (
    MAX_CHECKED_ORDER,
    MUTATION_COUNT,
    SUITES,
    run_suite,
    suite_names,
)

SETTINGS = QtangleSettings(random_pairs=5)


def _named(results: list[CheckResult], prefix: str) -> CheckResult:
    return next(result for result in results if result.name.startswith(prefix))


class TestSuites:
    def test_list_suite_names(self) -> None:
        assert suite_names() == (*SUITES, "all")
        assert {"functoriality", "reidemeister", "routes", "laws"} <= set(suite_names())

    def test_reject_unknown_suite(self) -> None:
        with pytest.raises(KeyError):
            run_suite("knots", SETTINGS)

    def test_axioms_accept_builtins_and_reject_mutations(self) -> None:
        results = run_suite("axioms", SETTINGS)

        assert len(results) == MAX_CHECKED_ORDER + 1 + MUTATION_COUNT
        assert all(result.passed for result in results)
        assert sum("is rejected" in result.name for result in results) == MUTATION_COUNT

    def test_axioms_depend_on_seed_only_through_mutations(self) -> None:
        first = run_suite("axioms", SETTINGS)
        second = run_suite("axioms", SETTINGS.model_copy(update={"seed": 7}))

        assert first[: MAX_CHECKED_ORDER + 1] == second[: MAX_CHECKED_ORDER + 1]

    def test_braids_report_random_pairs(self) -> None:
        results = run_suite("braids", SETTINGS)
        homomorphism = _named(results, "action of a product")

        assert homomorphism.detail == "5/5 random pairs"

    def test_laws_report_random_triples(self) -> None:
        results = run_suite("laws", SETTINGS)
        axioms = _named(results, "free quandle")
        stacks = _named(results, "random slice stacks")

        assert axioms.detail == "5/5 random triples"
        assert stacks.passed
        assert stacks.detail.endswith(" rejected")

    @pytest.mark.parametrize(argnames="suite", argvalues=list(SUITES))
    def test_suite_passes(self, suite: str) -> None:
        results = run_suite(suite, SETTINGS)

        assert results
        assert all(result.suite == suite for result in results)
        assert [result.to_text() for result in results if not result.passed] == []

    def test_run_is_deterministic(self) -> None:
        assert run_suite("braids", SETTINGS) == run_suite("braids", SETTINGS)
