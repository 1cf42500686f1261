"""
Output formatter for analysis reports.

Every command wraps its report objects in a ReportOutput carrying a
RunManifest, so a saved report says exactly which inputs produced it.

OUTPUT FORMAT:
==============
{
    "command": "product",
    "title": "hgp(cycle:K4,cycle:K4)",
    "certified": true,              // false when a search ran out of budget
    "manifest": {
        "argv": ["product", "hgp", "cycle:k4", "cycle:k4"],
        "inputs": {"cycle:k4": "sha256..."},
        "version": "0.1.0",
        "seed": 0,
        "elapsed_s": 1.25           // only with timing=True
    },
    "sections": {
        "<section>": { ... }        // report.to_dict() per section
    }
}

Key order is insertion order, so identical inputs give identical bytes.
Timing is left out of the default serialization for the same reason.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence

from autgadgets import __version__

_FILE_PREFIXES = ("f2m:", "lift:", "graph:")


def digest_input(spec: str) -> str:
    """
    SHA-256 of the bytes behind an input: the referenced file for
    ``f2m:``, ``lift:`` and ``graph:`` specifications (anywhere inside the
    spec) or a path that exists, otherwise the specification text itself.
    """
    text = spec.strip()
    for prefix in _FILE_PREFIXES:
        at = text.find(prefix)
        if at >= 0:
            candidate = Path(text[at + len(prefix):].removesuffix("^T"))
            if candidate.is_file():
                return hashlib.sha256(candidate.read_bytes()).hexdigest()
    candidate = Path(text)
    if candidate.is_file():
        return hashlib.sha256(candidate.read_bytes()).hexdigest()
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass
class RunManifest:
    """
    Provenance of one run.

    Attributes:
        argv: Command line after the program name.
        inputs: Input specification -> SHA-256 digest, in argument order.
        version: Package version.
        seed: Seed of the run.
        elapsed: Wall-clock seconds.
    """

    argv: List[str]
    inputs: Dict[str, str] = field(default_factory=dict)
    version: str = __version__
    seed: int = 0
    elapsed: float = 0.0

    @classmethod
    def build(cls, argv: Sequence[str], specs: Sequence[str], seed: int = 0) -> RunManifest:
        return cls(list(argv), {s: digest_input(s) for s in specs}, __version__, seed)

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "argv": list(self.argv),
            "inputs": dict(self.inputs),
            "version": self.version,
            "seed": self.seed,
        }
        if timing:
            data["elapsed_s"] = round(self.elapsed, 3)
        return data


@dataclass
class ReportOutput:
    """
    Formatted output for one command.

    Attributes:
        command: Subcommand name.
        title: What was analysed.
        manifest: Provenance.
        sections: Section name -> report dictionary.
        certified: False when any search reported an uncertified bound.
    """

    command: str
    title: str
    manifest: RunManifest
    sections: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    certified: bool = True

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "command": self.command,
            "title": self.title,
            "certified": self.certified,
            "manifest": self.manifest.to_dict(timing),
            "sections": self.sections,
        }

    def to_json(self, indent: Optional[int] = 2, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=indent)

    @property
    def slug(self) -> str:
        return re.sub(r"[^A-Za-z0-9._-]+", "_", f"{self.command}_{self.title}").strip("_")


def format_output(
    command: str,
    title: str,
    manifest: RunManifest,
    reports: Mapping[str, Any],
    certified: bool = True,
) -> ReportOutput:
    """
    Wrap report objects (anything with ``to_dict``, or plain dictionaries).

    Args:
        command: Subcommand name.
        title: What was analysed.
        manifest: Provenance of the run.
        reports: Section name -> report.
        certified: Overall certification flag.

    Returns:
        Formatted ReportOutput.
    """
    sections = {name: r.to_dict() if hasattr(r, "to_dict") else dict(r) for name, r in reports.items()}
    return ReportOutput(command, title, manifest, sections, certified)


def save_output(output: ReportOutput, directory: str | Path, pretty: bool = True, timing: bool = False) -> Path:
    """
    Save formatted output to ``<directory>/<command>_<title>.json``.

    Returns:
        The written path.
    """
    path = Path(directory) / f"{output.slug}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        f.write(output.to_json(2 if pretty else None, timing))
        f.write("\n")
    return path


def _inline(value: Any) -> str:
    if isinstance(value, dict):
        return ", ".join(f"{k}={_inline(v)}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        if value and all(isinstance(v, str) for v in value) and len(value) > 1:
            return " / ".join(value)
        return "[" + ", ".join(_inline(v) for v in value) + "]"
    if value is None:
        return "-"
    return str(value)


def generate_summary(output: ReportOutput) -> str:
    """
    Generate a human-readable summary of a report.

    Returns:
        Multi-line summary string.
    """
    lines = []

    lines.append("=" * 60)
    lines.append(f"{output.command.upper()}: {output.title}")
    lines.append("=" * 60)

    for name, section in output.sections.items():
        lines.append(f"[{name}]")
        for key, value in section.items():
            lines.append(f"  {key}: {_inline(value)}")
        lines.append("-" * 60)

    if output.certified:
        lines.append("✓ All reported values certified")
    else:
        lines.append("✗ Some bounds are uncertified (search budget exhausted)")
    lines.append("=" * 60)

    return "\n".join(lines)
