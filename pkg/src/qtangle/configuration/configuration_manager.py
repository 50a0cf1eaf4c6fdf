import logging
from pathlib import Path
from typing import TYPE_CHECKING, Any, final, overload

from pydantic import BaseModel, TypeAdapter

from qtangle._undefined import Undefined
from qtangle.configuration.configuration_path import join_path
from qtangle.configuration.configuration_provider import ConfigurationProvider
from qtangle.configuration.environment_variables_configuration_provider import (
    EnvironmentVariablesConfigurationProvider,
)
from qtangle.configuration.json_configuration_provider import JsonConfigurationProvider

if TYPE_CHECKING:
    from qtangle.configuration.configuration_section import ConfigurationSection

logger = logging.getLogger(__name__)


@final
class ConfigurationManager:
    """Layered configuration: providers added later override earlier ones."""

    _providers: list[ConfigurationProvider]

    def __init__(self, content_root_path: str | Path) -> None:
        self._content_root_path = Path(content_root_path)
        self._providers = []

    @property
    def providers(self) -> list[ConfigurationProvider]:
        return self._providers

    def add(self, provider: ConfigurationProvider) -> None:
        provider.load()
        self._providers.append(provider)
        logger.debug(
            "Loaded %d configuration values from %s", len(provider.data), provider
        )

    def add_environment_variables(self, prefix: str = "") -> None:
        """Add the environment variables whose names start with `prefix`."""
        self.add(EnvironmentVariablesConfigurationProvider(prefix))

    def add_json_file(self, path: str, *, optional: bool) -> None:
        """Add a JSON file, relative to the content root."""
        final_path = (self._content_root_path / path).resolve()
        self.add(JsonConfigurationProvider(final_path, optional=optional))

    @overload
    def get_required_value(self, key: str) -> str: ...

    @overload
    def get_required_value[TField](
        self, key: str, value_type: type[TField]
    ) -> TField: ...

    def get_required_value[TField](
        self, key: str, value_type: type[TField] | None = None
    ) -> str | TField:
        """Get a value, failing when no provider defines it or it is `None`.

        Raises:
            KeyError: No provider defines the key.
            ValueError: The value is `None` or does not validate as `value_type`.

        """
        value = self._try_get(key)

        if isinstance(value, Undefined):
            error_message = f"Missing configuration value for key '{key}'"
            raise KeyError(error_message)

        if value is None:
            error_message = f"Configuration value for key '{key}' is None"
            raise ValueError(error_message)

        if value_type is None:
            return value

        return TypeAdapter(value_type).validate_python(value)

    @overload
    def get_value(self, key: str) -> str | None: ...

    @overload
    def get_value[TField](
        self, key: str, value_type: type[TField]
    ) -> TField | None: ...

    def get_value[TField](
        self, key: str, value_type: type[TField] | None = None
    ) -> str | None | TField:
        value = self._try_get(key)

        if isinstance(value, Undefined) or value is None:
            return None

        if value_type is None:
            return value

        return TypeAdapter(value_type).validate_python(value)

    def get_model[TModel: BaseModel](
        self, model_type: type[TModel], section: str = ""
    ) -> TModel:
        """Build a model from the values named after its fields, under an optional section.

        Fields without a value keep their defaults; list fields are read from `field:0`, `field:1`, ...

        Raises:
            KeyError: A required field has no value.
            pydantic.ValidationError: A value does not validate.

        """
        values: dict[str, Any] = {}

        for field_name, field_info in model_type.model_fields.items():
            key = join_path(section, field_name)
            value = self._try_get(key)

            if not isinstance(value, Undefined):
                values[field_name] = value
                continue

            array_values = self._try_get_array(key)

            if array_values:
                values[field_name] = array_values
            elif field_info.is_required():
                error_message = f"Missing configuration value for key '{key}'"
                raise KeyError(error_message)

        return model_type.model_validate(values)

    def get_section(self, key: str) -> "ConfigurationSection":
        from qtangle.configuration.configuration_section import (  # noqa: PLC0415
            ConfigurationSection,
        )

        return ConfigurationSection(self, key)

    def _try_get_array(self, key: str) -> list[str | None]:
        values: list[str | None] = []

        while not isinstance(
            value := self._try_get(join_path(key, str(len(values)))), Undefined
        ):
            values.append(value)

        return values

    def _try_get(self, key: str) -> str | None | Undefined:
        for provider in reversed(self._providers):
            value = provider.try_get(key)

            if not isinstance(value, Undefined):
                return value

        return Undefined.INSTANCE
