"""Real implementations of port protocols.

These classes wrap the filesystem and the Rich consoles.
"""

from pathlib import Path

from .exceptions import BamIOError


class RealFilesystem:
    """Real implementation of FilesystemPort."""

    def is_file(self, path: str) -> bool:
        return Path(path).expanduser().is_file()

    def read_text(self, path: str) -> str:
        try:
            return Path(path).expanduser().read_text(encoding="utf-8")
        except UnicodeDecodeError:
            raise BamIOError(f"'{path}' is not valid UTF-8 text") from None
        except OSError as e:
            raise BamIOError(f"Cannot read '{path}': {e.strerror or e}") from None

    def write_text(self, path: str, text: str) -> None:
        try:
            Path(path).expanduser().write_text(text, encoding="utf-8", newline="")
        except OSError as e:
            raise BamIOError(f"Cannot write '{path}': {e.strerror or e}") from None

    def write_bytes(self, path: str, data: bytes) -> None:
        try:
            Path(path).expanduser().write_bytes(data)
        except OSError as e:
            raise BamIOError(f"Cannot write '{path}': {e.strerror or e}") from None


class RealUI:
    """Real implementation of UIPort using the themed Rich consoles."""

    def print_success(self, message: str) -> None:
        from bamkit.utils.console import print_styled

        print_styled(message, "success")

    def print_error(self, message: str) -> None:
        from bamkit.utils.console import print_styled

        print_styled(message, "danger")

    def print_warning(self, message: str) -> None:
        from bamkit.utils.console import print_styled

        print_styled(message, "warning")

    def print_info(self, message: str) -> None:
        from bamkit.utils.console import print_styled

        print_styled(message, "info")

    def print_muted(self, message: str) -> None:
        from bamkit.utils.console import print_styled

        print_styled(message, "muted")

    def print_result(self, text: str) -> None:
        from bamkit.utils.console import console

        console.print(
            text,
            end="" if text.endswith("\n") else "\n",
            markup=False,
            highlight=False,
            emoji=False,
            soft_wrap=True,
        )


class JsonUI:
    """UI implementation for --json mode.

    All print methods are no-ops; the command emits one JSON envelope instead.
    """

    def print_success(self, message: str) -> None:
        pass

    def print_error(self, message: str) -> None:
        pass

    def print_warning(self, message: str) -> None:
        pass

    def print_info(self, message: str) -> None:
        pass

    def print_muted(self, message: str) -> None:
        pass

    def print_result(self, text: str) -> None:
        pass
