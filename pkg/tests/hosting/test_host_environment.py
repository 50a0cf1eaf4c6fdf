import os
from pathlib import Path

from pytest_mock import MockerFixture

from qtangle.hosting.environment import Environment, EnvironmentVariable
from qtangle.hosting.host_environment import HostEnvironment


class TestHostEnvironment:
    def test_return_default_environment_name_when_environment_variable_is_not_set(
        self, mocker: MockerFixture
    ) -> None:
        mocker.patch.dict(os.environ, {}, clear=True)

        environment = HostEnvironment(content_root_path="")

        assert environment.environment_name == Environment.LOCAL.value
        assert environment.is_local()

    def test_return_updated_environment_name_when_environment_variable_is_set(
        self, mocker: MockerFixture
    ) -> None:
        mocker.patch.dict(
            os.environ, {EnvironmentVariable.QTANGLE_ENVIRONMENT.value: "nightly"}
        )

        environment = HostEnvironment(content_root_path="")

        assert environment.environment_name == "nightly"
        assert environment.is_environment("nightly")
        assert not environment.is_local()

    def test_recognize_ci_environment(self, mocker: MockerFixture) -> None:
        mocker.patch.dict(
            os.environ,
            {EnvironmentVariable.QTANGLE_ENVIRONMENT.value: Environment.CI.value},
        )

        environment = HostEnvironment(content_root_path="configs")

        assert environment.is_ci()
        assert environment.content_root_path == Path("configs")
