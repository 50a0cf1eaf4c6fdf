import re
from pathlib import Path

import pytest

from qtangle.exceptions import QuandleAxiomError, UnknownQuandleError
from qtangle.quandles.quandle_registry import resolve_quandle, standard_quandles


class TestQuandleRegistry:
    @pytest.mark.parametrize(argnames="order", argvalues=[1, 3, 4, 5, 64])
    def test_resolve_dihedral_quandle(self, order: int) -> None:
        quandle = resolve_quandle(f"dihedral:{order}")

        assert quandle.name == f"dihedral:{order}"
        assert quandle.size == order

    def test_resolve_conjugation_quandle(self) -> None:
        quandle = resolve_quandle(" conj-sym3 ")

        assert quandle.name == "conj-sym3"
        assert quandle.size == 6

    def test_builtins_are_shared(self) -> None:
        assert resolve_quandle("dihedral:3") is resolve_quandle("dihedral:3")

    @pytest.mark.parametrize(
        argnames="spec", argvalues=["dihedral:0", "dihedral:65", "dihedral", "nope"]
    )
    def test_reject_unknown_quandle_names(self, spec: str) -> None:
        with pytest.raises(
            UnknownQuandleError, match=re.escape(f"Unknown quandle '{spec}'")
        ):
            resolve_quandle(spec)

    def test_resolve_table_file(self, tmp_path: Path) -> None:
        path = tmp_path / "d3.txt"
        path.write_text("3\n0 2 1\n2 1 0\n1 0 2\n", encoding="utf-8")

        quandle = resolve_quandle(str(path))

        assert quandle == resolve_quandle("dihedral:3")
        assert quandle.name == "d3"

    def test_reject_table_file_that_is_not_a_quandle(self, tmp_path: Path) -> None:
        path = tmp_path / "bad.txt"
        path.write_text("2\n1 1\n0 1\n", encoding="utf-8")

        with pytest.raises(QuandleAxiomError):
            resolve_quandle(str(path))

    def test_standard_quandles(self) -> None:
        names = [quandle.name for quandle in standard_quandles()]

        assert names == ["dihedral:3", "dihedral:4", "dihedral:5", "conj-sym3"]
