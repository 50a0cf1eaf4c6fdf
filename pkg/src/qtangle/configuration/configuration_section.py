from typing import Final, final, overload

from pydantic import BaseModel

from qtangle.configuration.configuration_manager import ConfigurationManager
from qtangle.configuration.configuration_path import join_path, section_key


@final
class ConfigurationSection:
    """The configuration values sharing the key prefix `path`."""

    _manager: Final[ConfigurationManager]
    _path: Final[str]

    def __init__(self, manager: ConfigurationManager, path: str) -> None:
        self._manager = manager
        self._path = path

    @property
    def path(self) -> str:
        return self._path

    @property
    def key(self) -> str:
        """The last segment of the path."""
        return section_key(self._path)

    @overload
    def get_value(self, key: str) -> str | None: ...

    @overload
    def get_value[TField](
        self, key: str, value_type: type[TField]
    ) -> TField | None: ...

    def get_value[TField](
        self, key: str, value_type: type[TField] | None = None
    ) -> str | None | TField:
        path = join_path(self._path, key)

        if value_type is None:
            return self._manager.get_value(path)

        return self._manager.get_value(path, value_type)

    def get_model[TModel: BaseModel](self, model_type: type[TModel]) -> TModel:
        return self._manager.get_model(model_type, self._path)

    def get_section(self, key: str) -> "ConfigurationSection":
        return ConfigurationSection(self._manager, join_path(self._path, key))
