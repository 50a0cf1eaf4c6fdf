import os
from pathlib import Path
from typing import Final, final

from qtangle.hosting.environment import Environment, EnvironmentVariable


@final
class HostEnvironment:
    """The environment name and content root the command line runs with."""

    _environment_name: Final[str]
    _content_root_path: Final[Path]

    def __init__(self, content_root_path: str | Path) -> None:
        self._environment_name = os.getenv(
            EnvironmentVariable.QTANGLE_ENVIRONMENT.value, Environment.LOCAL.value
        )
        self._content_root_path = Path(content_root_path)

    @property
    def environment_name(self) -> str:
        """Value of `QTANGLE_ENVIRONMENT`, `local` when unset."""
        return self._environment_name

    @property
    def content_root_path(self) -> Path:
        """Directory holding `qtangle.json` and its per-environment variants."""
        return self._content_root_path

    def is_environment(self, environment_name: str) -> bool:
        return self._environment_name == environment_name

    def is_local(self) -> bool:
        return self.is_environment(Environment.LOCAL.value)

    def is_ci(self) -> bool:
        return self.is_environment(Environment.CI.value)
