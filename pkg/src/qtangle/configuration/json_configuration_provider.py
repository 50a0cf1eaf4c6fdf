import json
from pathlib import Path
from typing import Any, Final, cast, final, override

from qtangle.configuration.configuration_path import join_path
from qtangle.configuration.configuration_provider import ConfigurationProvider


@final
class JsonConfigurationProvider(ConfigurationProvider):
    """Read a JSON object, flattening nested objects and arrays into `a:b:0` keys."""

    _path: Final[Path]
    _optional: Final[bool]

    def __init__(self, path: Path, *, optional: bool) -> None:
        super().__init__()
        self._path = path
        self._optional = optional

    @property
    def path(self) -> Path:
        return self._path

    @override
    def read(self) -> dict[str, str | None]:
        if not self._path.exists():
            if self._optional:
                return {}

            error_message = f"Configuration file '{self._path}' was not found"
            raise FileNotFoundError(error_message)

        with self._path.open(encoding="utf-8") as file:
            document: Any = json.load(file)

        if not isinstance(document, dict):
            error_message = (
                f"Configuration file '{self._path}' must contain a JSON object"
            )
            raise ValueError(error_message)  # noqa: TRY004

        flattened: dict[str, str | None] = {}
        _flatten(cast("dict[str, Any]", document), "", flattened)
        return flattened


def _flatten(value: Any, path: str, into: dict[str, str | None]) -> None:  # noqa: ANN401
    if isinstance(value, dict):
        entries = cast("dict[str, Any]", value)

        if not entries and path:
            into[path] = None

        for key, item in entries.items():
            _flatten(item, join_path(path, key), into)
        return

    if isinstance(value, list):
        items = cast("list[Any]", value)

        if not items:
            into[path] = ""

        for index, item in enumerate(items):
            _flatten(item, join_path(path, str(index)), into)
        return

    folded = path.casefold()

    if any(existing.casefold() == folded for existing in into):
        error_message = f"A duplicate key '{path}' was found"
        raise ValueError(error_message)

    if value is None:
        into[path] = None
    elif isinstance(value, bool):
        into[path] = "true" if value else "false"
    else:
        into[path] = str(value)
