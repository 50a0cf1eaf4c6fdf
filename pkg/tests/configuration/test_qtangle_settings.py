import json
import os
from pathlib import Path

import pytest
from pydantic import ValidationError
from pytest_mock import MockerFixture

from qtangle.configuration.qtangle_settings import (
    DEFAULT_SEED,
    QtangleSettings,
    load_settings,
)


class TestQtangleSettings:
    def test_use_defaults_without_sources(
        self, tmp_path: Path, mocker: MockerFixture
    ) -> None:
        mocker.patch.dict(os.environ, {}, clear=True)

        settings = load_settings(tmp_path)

        assert settings == QtangleSettings()
        assert settings.seed == DEFAULT_SEED
        assert settings.enumeration_limit is None
        assert settings.default_quandle == "dihedral:3"

    def test_layer_file_environment_file_and_variables(
        self, tmp_path: Path, mocker: MockerFixture
    ) -> None:
        (tmp_path / "qtangle.json").write_text(
            json.dumps(
                {
                    "simplificationBudget": 5,
                    "defaultQuandle": "conj-sym3",
                    "listingThreshold": 10,
                }
            ),
            encoding="utf-8",
        )
        (tmp_path / "qtangle.ci.json").write_text(
            json.dumps({"listingThreshold": 3}), encoding="utf-8"
        )
        mocker.patch.dict(
            os.environ,
            {
                "QTANGLE_ENVIRONMENT": "ci",
                "QTANGLE_SEED": "7",
                "QTANGLE_ENUMERATION_LIMIT": "100",
            },
            clear=True,
        )

        settings = load_settings(tmp_path)

        assert settings == QtangleSettings(
            seed=7,
            simplification_budget=5,
            enumeration_limit=100,
            listing_threshold=3,
            default_quandle="conj-sym3",
        )

    def test_ignore_file_of_other_environment(
        self, tmp_path: Path, mocker: MockerFixture
    ) -> None:
        (tmp_path / "qtangle.ci.json").write_text(
            json.dumps({"seed": 1}), encoding="utf-8"
        )
        mocker.patch.dict(os.environ, {}, clear=True)

        assert load_settings(tmp_path).seed == DEFAULT_SEED

    def test_reject_invalid_value(self, tmp_path: Path, mocker: MockerFixture) -> None:
        mocker.patch.dict(os.environ, {"QTANGLE_RANDOM_PAIRS": "0"}, clear=True)

        with pytest.raises(ValidationError):
            load_settings(tmp_path)
