import json
import os
import re
from pathlib import Path

import pytest
from pydantic import BaseModel, Field, ValidationError
from pytest_mock import MockerFixture

from qtangle.configuration.configuration_manager import ConfigurationManager
from qtangle.configuration.json_configuration_provider import JsonConfigurationProvider


class _SearchSettings(BaseModel):
    enumeration_limit: int
    quandles: list[str] = Field(default_factory=list[str])
    verbose: bool = False


def _manager(tmp_path: Path, document: dict[str, object]) -> ConfigurationManager:
    (tmp_path / "qtangle.json").write_text(json.dumps(document), encoding="utf-8")
    manager = ConfigurationManager(tmp_path)
    manager.add_json_file("qtangle.json", optional=False)
    return manager


class TestConfigurationManager:
    def test_read_values(self, tmp_path: Path) -> None:
        manager = _manager(tmp_path, {"seed": 7, "note": None})

        assert manager.get_value("seed") == "7"
        assert manager.get_value("seed", int) == 7
        assert manager.get_value("note") is None
        assert manager.get_value("missing") is None

    def test_read_required_values(self, tmp_path: Path) -> None:
        manager = _manager(tmp_path, {"seed": 7})

        assert manager.get_required_value("seed") == "7"
        assert manager.get_required_value("seed", int) == 7

    def test_fail_when_required_value_is_missing(self, tmp_path: Path) -> None:
        manager = _manager(tmp_path, {})

        with pytest.raises(
            KeyError, match=re.escape("Missing configuration value for key 'seed'")
        ):
            manager.get_required_value("seed")

    def test_fail_when_required_value_is_none(self, tmp_path: Path) -> None:
        manager = _manager(tmp_path, {"seed": None})

        with pytest.raises(
            ValueError, match=re.escape("Configuration value for key 'seed' is None")
        ):
            manager.get_required_value("seed")

    def test_fail_when_value_does_not_validate(self, tmp_path: Path) -> None:
        manager = _manager(tmp_path, {"seed": "seven"})

        with pytest.raises(ValidationError):
            manager.get_required_value("seed", int)

    def test_later_providers_override_earlier_ones(
        self, tmp_path: Path, mocker: MockerFixture
    ) -> None:
        mocker.patch.dict(os.environ, {"QTANGLE_SEED": "11"}, clear=True)
        manager = _manager(tmp_path, {"seed": 7, "listingThreshold": 3})

        manager.add_environment_variables("QTANGLE_")

        assert manager.get_value("seed", int) == 11
        assert manager.get_value("listing_threshold", int) == 3
        assert len(manager.providers) == 2

    def test_resolve_json_file_against_content_root(self, tmp_path: Path) -> None:
        manager = _manager(tmp_path, {})

        provider = manager.providers[0]

        assert isinstance(provider, JsonConfigurationProvider)
        assert provider.path == (tmp_path / "qtangle.json").resolve()

    def test_build_model_from_section(self, tmp_path: Path) -> None:
        manager = _manager(
            tmp_path,
            {
                "Search": {
                    "EnumerationLimit": 10,
                    "Quandles": ["dihedral:3", "conj-sym3"],
                    "Verbose": True,
                }
            },
        )

        settings = manager.get_model(_SearchSettings, "search")

        assert settings == _SearchSettings(
            enumeration_limit=10, quandles=["dihedral:3", "conj-sym3"], verbose=True
        )

    def test_keep_defaults_for_missing_fields(self, tmp_path: Path) -> None:
        manager = _manager(tmp_path, {"enumerationLimit": 4})

        settings = manager.get_model(_SearchSettings)

        assert settings == _SearchSettings(enumeration_limit=4)

    def test_fail_when_required_field_is_missing(self, tmp_path: Path) -> None:
        manager = _manager(tmp_path, {"search": {"verbose": True}})

        with pytest.raises(
            KeyError,
            match=re.escape(
                "Missing configuration value for key 'search:enumeration_limit'"
            ),
        ):
            manager.get_model(_SearchSettings, "search")
