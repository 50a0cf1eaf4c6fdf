from pathlib import Path
from typing import Final

from pydantic import BaseModel, ConfigDict, Field

from qtangle.colorings.coloring_report import DEFAULT_LISTING_THRESHOLD
from qtangle.configuration.configuration_manager import ConfigurationManager
from qtangle.hosting.host_environment import HostEnvironment
from qtangle.presentations.tietze import DEFAULT_BUDGET

ENVIRONMENT_VARIABLE_PREFIX: Final = "QTANGLE_"
DEFAULT_SEED: Final = 20240611


class QtangleSettings(BaseModel):
    """Defaults for the command line and the verification suites."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    seed: int = DEFAULT_SEED
    simplification_budget: int = Field(default=DEFAULT_BUDGET, ge=0)
    enumeration_limit: int | None = Field(default=None, ge=1)
    listing_threshold: int = Field(default=DEFAULT_LISTING_THRESHOLD, ge=0)
    default_quandle: str = "dihedral:3"
    random_pairs: int = Field(default=50, ge=1)


def load_settings(content_root_path: str | Path = ".") -> QtangleSettings:
    """Read `qtangle.json`, then `qtangle.<environment>.json`, then `QTANGLE_*` variables.

    Both files are optional. Later sources override earlier ones.

    Raises:
        pydantic.ValidationError: A value does not validate.

    """
    environment = HostEnvironment(content_root_path)
    configuration = ConfigurationManager(environment.content_root_path)
    configuration.add_json_file("qtangle.json", optional=True)
    configuration.add_json_file(
        f"qtangle.{environment.environment_name}.json", optional=True
    )
    configuration.add_environment_variables(ENVIRONMENT_VARIABLE_PREFIX)
    return configuration.get_model(QtangleSettings)
