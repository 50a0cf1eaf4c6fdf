import os
from typing import Final, final, override

from qtangle.configuration.configuration_path import KEY_DELIMITER
from qtangle.configuration.configuration_provider import ConfigurationProvider


@final
class EnvironmentVariablesConfigurationProvider(ConfigurationProvider):
    """Read the environment variables starting with `prefix`, prefix removed and `__` read as `:`."""

    _prefix: Final[str]

    def __init__(self, prefix: str = "") -> None:
        super().__init__()
        self._prefix = prefix

    @override
    def read(self) -> dict[str, str | None]:
        return {
            key.removeprefix(self._prefix).replace("__", KEY_DELIMITER): value
            for key, value in os.environ.items()
            if key.startswith(self._prefix) and len(key) > len(self._prefix)
        }
