"""Logging setup for the bamkit command line."""

import logging

from rich.logging import RichHandler

from bamkit.utils.console import err_console


def configure_logging(verbose: bool = False) -> None:
    """Route library logging to stderr through Rich.

    Args:
        verbose: Emit DEBUG records when True, otherwise WARNING and above
    """
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )
