# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Themed rich console and message helpers."""

from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.theme import Theme

BRAND_PRIMARY = "#2b4c7e"
BRAND_ACCENT = "#e0a526"

SIGNBASE_THEME = Theme({
    "brand": BRAND_PRIMARY,
    "accent": BRAND_ACCENT,
    "success": "bold green",
    "error": "bold red",
    "warning": "bold yellow",
    "info": "dim cyan",
    "muted": "dim",
    "highlight": f"bold {BRAND_ACCENT}",
})

# Module-level shared console instance
console = Console(theme=SIGNBASE_THEME, highlight=False)

BANNER = "signbase {version}  \u00b7  exponents and local bases of signed digraphs"

# Messages below this level are suppressed; set from EngineConfig.log_level
_LEVELS = {"DEBUG": 10, "INFO": 20, "WARNING": 30, "ERROR": 40}
_threshold = _LEVELS["INFO"]


def set_log_level(level: str) -> None:
    global _threshold
    _threshold = _LEVELS[level]


def show_banner(version: str) -> None:
    console.print(BANNER.format(version=f"v{version}"), style="accent")


def print_success(message: str) -> None:
    if _threshold <= _LEVELS["INFO"]:
        console.print(f"[success]✓[/success] {message}")


def print_error(message: str) -> None:
    console.print(f"[error]✗[/error] {message}")


def print_warning(message: str) -> None:
    if _threshold <= _LEVELS["WARNING"]:
        console.print(f"[warning]⚠[/warning] {message}")


def print_info(message: str) -> None:
    if _threshold <= _LEVELS["INFO"]:
        console.print(f"[info]ℹ[/info] {message}")


def print_debug(message: str) -> None:
    if _threshold <= _LEVELS["DEBUG"]:
        console.print(f"[muted]· {message}[/muted]")


def create_branded_panel(content: str, title: str | None = None) -> Panel:
    return Panel(content, title=title, border_style=BRAND_ACCENT, box=box.ROUNDED)


def create_results_table(title: str | None = "Results") -> Table:
    return Table(
        title=title,
        box=box.ROUNDED,
        show_header=True,
        header_style=f"bold {BRAND_ACCENT}",
    )
