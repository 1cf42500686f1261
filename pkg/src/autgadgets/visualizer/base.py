"""
Base visualizer abstract class.

Terminal and HTML renderers implement this interface.

Design Pattern: Strategy
    The CLI picks a renderer from ``--format`` and hands it a ReportOutput.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Optional

from autgadgets.io.formatter import ReportOutput
from autgadgets.io.parser import RunSettings


class BaseVisualizer(ABC):
    """
    Abstract base class for report visualizers.
    """

    def __init__(self, settings: Optional[RunSettings] = None):
        """
        Initialize the visualizer.

        Args:
            settings: Run settings, shown alongside the report.
        """
        self.settings = settings

    @abstractmethod
    def visualize(self, output: ReportOutput) -> None:
        """
        Render a report.

        Args:
            output: The report to render.
        """
        pass

    @abstractmethod
    def save(self, output: ReportOutput, output_path: Path) -> None:
        """
        Save the rendering to a file.

        Args:
            output: The report to render.
            output_path: Destination file.
        """
        pass

    def get_heading(self, output: ReportOutput) -> str:
        return f"{output.command}: {output.title}"

    def get_limits(self) -> str:
        """Search limits of the run, e.g. ``cap=4 budget=4194304``."""
        if self.settings is None:
            return ""
        s = self.settings
        return f"cap={s.cap} budget={s.budget} workers={s.workers} seed={s.seed}"
