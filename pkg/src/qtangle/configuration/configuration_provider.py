from abc import ABC, abstractmethod
from typing import override

from qtangle._undefined import Undefined
from qtangle.configuration.configuration_path import to_snake_case


class ConfigurationProvider(ABC):
    """A source of configuration key/values, read once by `load`."""

    _data: dict[str, str | None]

    def __init__(self) -> None:
        self._data = {}

    @property
    def data(self) -> dict[str, str | None]:
        return self._data

    @abstractmethod
    def read(self) -> dict[str, str | None]:
        """Return the raw key/values of the source, keys delimited by `:`."""

    def load(self) -> None:
        self._data = {to_snake_case(key): value for key, value in self.read().items()}

    def try_get(self, key: str) -> str | None | Undefined:
        return self._data.get(key, Undefined.INSTANCE)

    @override
    def __str__(self) -> str:
        return self.__class__.__name__
