"""Port interfaces (protocols) for dependency injection.

This module provides the boundaries between core logic and external effects,
so command cores can be tested against in-memory fakes.
"""

from typing import Protocol, runtime_checkable


@runtime_checkable
class FilesystemPort(Protocol):
    """Interface for filesystem operations."""

    def is_file(self, path: str) -> bool:
        """Check if a path exists and is a regular file."""
        ...

    def read_text(self, path: str) -> str:
        """Read a UTF-8 text file.

        Raises:
            BamIOError: If the file cannot be read or decoded
        """
        ...

    def write_text(self, path: str, text: str) -> None:
        """Write a UTF-8 text file, replacing any existing content.

        Raises:
            BamIOError: If the file cannot be written
        """
        ...

    def write_bytes(self, path: str, data: bytes) -> None:
        """Write a binary file, replacing any existing content.

        Raises:
            BamIOError: If the file cannot be written
        """
        ...


@runtime_checkable
class UIPort(Protocol):
    """Interface for user-facing output.

    Messages are diagnostics and go to the error stream; ``print_result``
    writes command results to the output stream.
    """

    def print_success(self, message: str) -> None:
        """Print a success message."""
        ...

    def print_error(self, message: str) -> None:
        """Print an error message."""
        ...

    def print_warning(self, message: str) -> None:
        """Print a warning message."""
        ...

    def print_info(self, message: str) -> None:
        """Print an informational message."""
        ...

    def print_muted(self, message: str) -> None:
        """Print a muted/secondary message."""
        ...

    def print_result(self, text: str) -> None:
        """Write result text verbatim to standard output."""
        ...
