"""Rendering of analysis reports."""

from autgadgets.visualizer.base import BaseVisualizer
from autgadgets.visualizer.terminal import TerminalVisualizer
from autgadgets.visualizer.html import HTMLVisualizer

__all__ = [
    "BaseVisualizer",
    "TerminalVisualizer",
    "HTMLVisualizer",
]
