"""Rich console utilities for bamkit.

Rich Style Names (defined in rich_theme):
- warning: Yellow
- danger: Red bold
- info: Cyan
- success: Green
- variable: Green
- muted: Grey70

Results are written to standard output through ``console``; diagnostics go to
standard error through ``err_console`` so that piped results stay clean.

Usage example:
    from bamkit.utils.console import print_formatted_text, print_styled

    print_formatted_text("[info]Parsed 2 reports[/info]")
    print_styled("Wrote model.xlsx", "success")
"""

from rich.console import Console
from rich.markup import escape
from rich.theme import Theme

rich_theme = Theme(
    {
        "warning": "yellow",
        "danger": "red bold",
        "info": "cyan",
        "success": "green",
        "variable": "green",
        "muted": "grey70",
    }
)

console = Console(theme=rich_theme)
err_console = Console(theme=rich_theme, stderr=True)


def print_formatted_text(text: str) -> None:
    """Print text containing Rich markup (e.g. [info]text[/info]) to stderr."""
    err_console.print(text, markup=True, soft_wrap=True)


def print_styled(message: str, style: str) -> None:
    """Print plain text (no markup interpretation) in a theme style to stderr."""
    print_formatted_text(f"[{style}]{escape(message)}[/{style}]")
