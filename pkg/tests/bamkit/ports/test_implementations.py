"""Tests for concrete port implementations."""

import pytest

from bamkit.ports import BamIOError, JsonUI, RealFilesystem, RealUI
from bamkit.ports.protocols import FilesystemPort, UIPort
from bamkit.testing import FakeFilesystem, FakeUI


class TestRealFilesystem:
    """Tests for RealFilesystem against a temporary directory."""

    def test_text_round_trip(self, tmp_path):
        fs = RealFilesystem()
        path = str(tmp_path / "model.bam")

        fs.write_text(path, "Profit = Sales – Cost\r\n")

        assert fs.is_file(path)
        assert fs.read_text(path) == "Profit = Sales – Cost\n"

    def test_bytes(self, tmp_path):
        fs = RealFilesystem()
        path = tmp_path / "out.xlsx"

        fs.write_bytes(str(path), b"PK\x03\x04")

        assert path.read_bytes() == b"PK\x03\x04"

    def test_directory_is_not_a_file(self, tmp_path):
        assert not RealFilesystem().is_file(str(tmp_path))

    def test_missing_file(self, tmp_path):
        with pytest.raises(BamIOError, match="Cannot read"):
            RealFilesystem().read_text(str(tmp_path / "absent.bam"))

    def test_invalid_utf8(self, tmp_path):
        path = tmp_path / "latin1.csv"
        path.write_bytes("Café".encode("latin-1"))

        with pytest.raises(BamIOError, match="not valid UTF-8"):
            RealFilesystem().read_text(str(path))

    def test_unwritable_directory(self, tmp_path):
        with pytest.raises(BamIOError, match="Cannot write"):
            RealFilesystem().write_text(str(tmp_path / "missing" / "out.csv"), "x")


class TestRealUI:
    """Tests for RealUI stream routing."""

    def test_result_goes_to_stdout(self, capsys):
        RealUI().print_result("variable,category,period,value\n")

        captured = capsys.readouterr()
        assert captured.out == "variable,category,period,value\n"

    def test_result_is_not_markup(self, capsys):
        RealUI().print_result("Profit [European Union;France] 2005")

        assert capsys.readouterr().out == "Profit [European Union;France] 2005\n"

    def test_messages_go_to_stderr(self, capsys):
        ui = RealUI()

        ui.print_error("Error: [bad]")
        ui.print_muted("3 instances not observed")

        captured = capsys.readouterr()
        assert captured.out == ""
        assert "Error: [bad]" in captured.err
        assert "3 instances not observed" in captured.err


def test_json_ui_prints_nothing(capsys):
    ui = JsonUI()

    ui.print_success("done")
    ui.print_result("text")

    assert capsys.readouterr() == ("", "")


def test_implementations_satisfy_protocols():
    assert isinstance(RealFilesystem(), FilesystemPort)
    assert isinstance(FakeFilesystem(), FilesystemPort)
    for ui in (RealUI(), JsonUI(), FakeUI()):
        assert isinstance(ui, UIPort)
