from .configuration_manager import ConfigurationManager
from .configuration_path import KEY_DELIMITER, to_snake_case
from .configuration_provider import ConfigurationProvider
from .configuration_section import ConfigurationSection
from .environment_variables_configuration_provider import (
    EnvironmentVariablesConfigurationProvider,
)
from .json_configuration_provider import JsonConfigurationProvider
from .qtangle_settings import (
    DEFAULT_SEED,
    ENVIRONMENT_VARIABLE_PREFIX,
    QtangleSettings,
    load_settings,
)

__all__ = [
    "DEFAULT_SEED",
    "ENVIRONMENT_VARIABLE_PREFIX",
    "KEY_DELIMITER",
    "ConfigurationManager",
    "ConfigurationProvider",
    "ConfigurationSection",
    "EnvironmentVariablesConfigurationProvider",
    "JsonConfigurationProvider",
    "QtangleSettings",
    "load_settings",
    "to_snake_case",
]
