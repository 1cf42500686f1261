"""Input parsing and report output."""

from autgadgets.io.formatter import ReportOutput, RunManifest, format_output, generate_summary, save_output
from autgadgets.io.parser import RunSettings, build_code, build_graph, load_f2m, save_f2m

__all__ = [
    "ReportOutput",
    "RunManifest",
    "RunSettings",
    "build_code",
    "build_graph",
    "format_output",
    "generate_summary",
    "load_f2m",
    "save_f2m",
    "save_output",
]
