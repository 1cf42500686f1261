"""
Terminal-based visualizer using Rich library.

Each report section becomes a key/value table. Matrices (lists of 0/1
strings) are printed one row per line and booleans are coloured, so a
failed check stands out.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Optional

from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from autgadgets.io.formatter import ReportOutput
from autgadgets.io.parser import RunSettings
from autgadgets.visualizer.base import BaseVisualizer


def is_matrix(value: Any) -> bool:
    return (
        isinstance(value, list)
        and bool(value)
        and all(isinstance(row, str) and set(row) <= {"0", "1", " "} for row in value)
    )


def _cell(value: Any) -> Text:
    if value is True:
        return Text("yes", style="bold green")
    if value is False:
        return Text("no", style="bold red")
    if value is None:
        return Text("-", style="dim")
    if is_matrix(value):
        return Text("\n".join(value), style="cyan")
    if isinstance(value, dict):
        return Text("\n".join(f"{k}: {plain_text(v)}" for k, v in value.items()))
    return Text(plain_text(value))


def plain_text(value: Any) -> str:
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {plain_text(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(plain_text(v) for v in value) + "]"
    if value is None:
        return "-"
    return str(value)


class TerminalVisualizer(BaseVisualizer):
    """
    Rich terminal visualizer for reports.
    """

    def __init__(self, settings: Optional[RunSettings] = None, console: Optional[Console] = None):
        """
        Initialize the terminal visualizer.

        Args:
            settings: Run settings.
            console: Rich Console instance (creates new if None).
        """
        super().__init__(settings)
        self.console = console or Console()

    def visualize(self, output: ReportOutput) -> None:
        self._print_header(output)
        for name, section in output.sections.items():
            self._print_section(name, section)
        self._print_status(output)

    def save(self, output: ReportOutput, output_path: Path) -> None:
        """
        Save terminal output to a text file.
        """
        output_path.parent.mkdir(parents=True, exist_ok=True)
        with open(output_path, "w") as f:
            file_console = Console(file=f, force_terminal=False, width=120)
            old_console = self.console
            self.console = file_console
            try:
                self.visualize(output)
            finally:
                self.console = old_console

    def _print_header(self, output: ReportOutput) -> None:
        header = f"[bold cyan]{self.get_heading(output)}[/]"
        limits = self.get_limits()
        if limits:
            header += f"\n[dim]{limits}[/]"
        if output.manifest.inputs:
            header += "\n[dim]inputs: " + ", ".join(output.manifest.inputs) + "[/]"
        self.console.print(Panel(header, box=box.DOUBLE))

    def _print_section(self, name: str, section: dict) -> None:
        table = Table(title=name, box=box.ROUNDED, show_header=False, title_style="bold magenta")
        table.add_column("Field", style="bold")
        table.add_column("Value")
        for key, value in section.items():
            table.add_row(str(key), _cell(value))
        self.console.print(table)

    def _print_status(self, output: ReportOutput) -> None:
        if output.certified:
            self.console.print("[bold green]✓ All reported values certified[/]")
        else:
            self.console.print("[bold yellow]✗ Some bounds are uncertified (search budget exhausted)[/]")
