"""
Input parsing: text formats, code specifications and run settings.

TEXT FORMATS:
=============

f2m (binary matrix):
    3 6                  // rows cols
    110100               // one line per row, one character per column
    011010
    001101

graph:
    4                    // num_vertices
    0 1                  // one "u v" line per edge, any order
    0 2

orientation:
    f                    // one symbol per canonical edge:
    .                    //   f forward (u -> v for u < v)
    b                    //   b backward, . free

Blank lines and lines starting with '#' are ignored in all three.

CODE SPECIFICATIONS:
====================

    rep:N                repetition code, checks x_i + x_(i+1)
    cycle:GRAPH          cycle code; GRAPH is kN, ka,b, k33, petersen,
                         ring:N, path:N or graph:<file>
    ga:GROUP:POLY        group-algebra code; GROUP is zN or dL,
                         POLY e.g. 1+x+x3 or 1+r+sr^-1
    hamming:R            [2^R-1, 2^R-R-1, 3]
    simplex:R            [2^R-1, R, 2^(R-1)]
    rm:R,M               Reed-Muller RM(R, M)
    rm*:R,M              punctured RM(R, M)
    lift:<file>          shift lift from a JSON LiftFile
    f2m:<file>           parity-check matrix from an f2m file

A trailing ``^T`` takes the transpose code.

LIFT FILE (JSON):
=================
{
    "base": ["111", "101"],            // H0 rows
    "shifts": [[[0], [1], [0, 2]],     // exponent lists per entry,
               [[3], null, [0]]],      // null for a zero entry
    "ell": 4,
    "name": "example"                  // optional
}
"""

from __future__ import annotations

import json
import os
import re
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, field_validator

from autgadgets.analysis.distance import DEFAULT_BUDGET, DEFAULT_CAP
from autgadgets.analysis.families import (
    cycle_code,
    group_algebra_code,
    hamming,
    lifted_code,
    punctured_rm,
    reed_muller,
    repetition,
    simplex,
    transpose_code,
)
from autgadgets.models.bitmatrix import BitMatrix
from autgadgets.models.classical import ClassicalCode
from autgadgets.models.graph import SimpleGraph, complete, complete_bipartite, path, petersen, ring
from autgadgets.models.group import (
    FiniteGroup,
    GroupAlgebraElement,
    cyclic_group,
    dihedral_group,
    regular_representation,
)
from autgadgets.models.orientation import Orientation
from autgadgets.models.permutation import Permutation

OUTPUT_FORMATS = ("json", "table", "html")


class RunSettings(BaseModel):
    """Search limits and output options shared by every command."""

    cap: int = Field(default=DEFAULT_CAP, ge=1, description="Largest support weight searched")
    budget: int = Field(default=DEFAULT_BUDGET, ge=1, description="Enumeration states per search")
    workers: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1)
    seed: int = Field(default=0, description="Seed recorded in the run manifest")
    format: str = Field(default="table", description="json, table or html")
    out: Optional[Path] = Field(default=None, description="Directory for report files")
    n_cap: int = Field(default=10, ge=1, description="Largest n for exhaustive bit search")
    vertex_cap: int = Field(default=12, ge=1, description="Largest graph for vertex search")
    order_cap: int = Field(default=100_000, ge=1, description="Largest group materialized")

    @field_validator("format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        v = v.strip().lower()
        if v not in OUTPUT_FORMATS:
            raise ValueError(f"Invalid format: {v}. Must be one of {', '.join(OUTPUT_FORMATS)}.")
        return v


class LiftFile(BaseModel):
    """JSON description of a shift lift."""

    base: List[str] = Field(description="Rows of H0 as 0/1 strings")
    shifts: List[List[Optional[List[int]]]] = Field(description="Exponent lists, null for zero")
    ell: int = Field(ge=1, description="Lift size")
    name: str = Field(default="lift")

    @field_validator("base")
    @classmethod
    def validate_base(cls, v: List[str]) -> List[str]:
        if not v:
            raise ValueError("base matrix has no rows")
        width = len(v[0])
        for row in v:
            if len(row) != width or set(row) - {"0", "1"}:
                raise ValueError(f"base row {row!r} is not a 0/1 string of length {width}")
        return v


# ----------------------------------------------------------------------
# Text formats
# ----------------------------------------------------------------------


def _content_lines(text: str) -> List[str]:
    return [line.strip() for line in text.splitlines() if line.strip() and not line.strip().startswith("#")]


def parse_f2m(text: str) -> BitMatrix:
    """
    Raises:
        ValueError: On a malformed header or row.
    """
    lines = _content_lines(text)
    if not lines:
        raise ValueError("empty f2m text")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"f2m header must be 'rows cols', got {lines[0]!r}")
    rows, cols = int(header[0]), int(header[1])
    body = lines[1:]
    if len(body) != rows:
        raise ValueError(f"f2m declares {rows} rows, found {len(body)}")
    for line in body:
        if len(line) != cols or set(line) - {"0", "1"}:
            raise ValueError(f"f2m row {line!r} is not {cols} characters of 0/1")
    if rows == 0:
        return BitMatrix.zeros(0, cols)
    return BitMatrix.from_rows(body, cols)


def format_f2m(m: BitMatrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    lines.extend("".join(str(b) for b in row) for row in m.to_array())
    return "\n".join(lines) + "\n"


def load_f2m(file_path: str | Path) -> BitMatrix:
    path_ = Path(file_path)
    if not path_.exists():
        raise FileNotFoundError(f"Matrix file not found: {path_}")
    return parse_f2m(path_.read_text())


def save_f2m(m: BitMatrix, file_path: str | Path) -> None:
    path_ = Path(file_path)
    path_.parent.mkdir(parents=True, exist_ok=True)
    path_.write_text(format_f2m(m))


def parse_graph(text: str, name: str = "graph") -> SimpleGraph:
    lines = _content_lines(text)
    if not lines:
        raise ValueError("empty graph text")
    num_vertices = int(lines[0])
    edges: List[Tuple[int, int]] = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must be 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return SimpleGraph.from_edges(num_vertices, edges, name)


def format_graph(graph: SimpleGraph) -> str:
    return "\n".join([str(graph.num_vertices)] + [f"{u} {v}" for u, v in graph.edges]) + "\n"


def parse_orientation(text: str, graph: SimpleGraph) -> Orientation:
    return Orientation.from_symbols(graph, "".join(_content_lines(text)))


def format_orientation(orientation: Orientation) -> str:
    return "\n".join(orientation.to_symbols()) + "\n"


def parse_codeword(text: str, length: int) -> List[int]:
    """A 0/1 string such as ``110100``."""
    cleaned = "".join(text.split())
    if len(cleaned) != length or set(cleaned) - {"0", "1"}:
        raise ValueError(f"codeword must be {length} characters of 0/1, got {text!r}")
    return [int(ch) for ch in cleaned]


# ----------------------------------------------------------------------
# Code specifications
# ----------------------------------------------------------------------

_COMPLETE = re.compile(r"^k(\d+)$")
_BIPARTITE = re.compile(r"^k(\d+),(\d+)$")


def _integer(value: str, what: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{what} must be an integer, got {value!r}") from None


def build_graph(spec: str) -> SimpleGraph:
    """
    Raises:
        ValueError: On an unknown graph name.
    """
    text = spec.strip().lower()
    if text == "petersen":
        return petersen()
    if text == "k33":
        return complete_bipartite(3, 3)
    if text.startswith("ring:"):
        return ring(_integer(text[5:], "ring size"))
    if text.startswith("path:"):
        return path(_integer(text[5:], "path length"))
    if text.startswith("graph:"):
        file_path = Path(spec.strip()[6:])
        if not file_path.exists():
            raise FileNotFoundError(f"Graph file not found: {file_path}")
        return parse_graph(file_path.read_text(), file_path.stem)
    match = _BIPARTITE.match(text)
    if match:
        return complete_bipartite(int(match.group(1)), int(match.group(2)))
    match = _COMPLETE.match(text)
    if match:
        return complete(int(match.group(1)))
    raise ValueError(f"Unknown graph: {spec!r}")


def load_lift(file_path: str | Path) -> ClassicalCode:
    path_ = Path(file_path)
    if not path_.exists():
        raise FileNotFoundError(f"Lift file not found: {path_}")
    with open(path_, "r") as f:
        data = json.load(f)
    lift = LiftFile.model_validate(data)
    base = BitMatrix.from_rows(lift.base)
    return lifted_code(base, lift.shifts, lift.ell, lift.name)


def _pair(text: str, what: str) -> Tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"{what} needs two numbers 'r,m', got {text!r}")
    return _integer(parts[0], what), _integer(parts[1], what)


def _group(name: str) -> FiniteGroup:
    name = name.lower()
    if name.startswith("z"):
        return cyclic_group(_integer(name[1:], "group order"))
    if name.startswith("d"):
        return dihedral_group(_integer(name[1:], "dihedral size"))
    raise ValueError(f"Unknown group {name!r}: use zN or dL")


def build_code(spec: str) -> ClassicalCode:
    """
    Build a classical code from a specification string.

    Raises:
        ValueError: On an unknown or malformed specification.
        FileNotFoundError: If a referenced file is missing.
    """
    text = spec.strip()
    if text.endswith("^T"):
        return transpose_code(build_code(text[:-2]))
    kind, _, rest = text.partition(":")
    kind = kind.lower()
    if kind == "rep":
        return repetition(_integer(rest, "repetition length"))
    if kind == "cycle":
        return cycle_code(build_graph(rest))
    if kind == "ga":
        group_name, _, poly = rest.partition(":")
        group = _group(group_name)
        element = GroupAlgebraElement.from_terms(group, poly)
        code = group_algebra_code(element)
        return ClassicalCode(code.H, f"ga:{group.name}:{poly}")
    if kind == "hamming":
        return hamming(_integer(rest, "Hamming r"))
    if kind == "simplex":
        return simplex(_integer(rest, "simplex r"))
    if kind == "rm":
        return reed_muller(*_pair(rest, "Reed-Muller"))
    if kind == "rm*":
        return punctured_rm(*_pair(rest, "punctured Reed-Muller"))
    if kind == "lift":
        return load_lift(rest)
    if kind == "f2m":
        return ClassicalCode.from_parity_check(load_f2m(rest), name=Path(rest).stem)
    raise ValueError(f"Unknown code specification: {spec!r}")


def build_codes(specs: Sequence[str]) -> List[ClassicalCode]:
    return [build_code(s) for s in specs]


def spec_graph(spec: str) -> Optional[SimpleGraph]:
    """The graph behind a plain ``cycle:`` specification, else None."""
    text = spec.strip()
    if text.lower().startswith("cycle:") and not text.endswith("^T"):
        return build_graph(text[6:])
    return None


def spec_generators(spec: str) -> List[Permutation]:
    """
    Known Tanner symmetries of a code family, for group closure.

    ``ga:`` codes: the right-regular action of every group element, which
    commutes with the left-regular check matrix. ``lift:`` codes: the
    simultaneous cyclic shift of every circulant block. Empty otherwise.
    """
    text = spec.strip()
    if text.endswith("^T"):
        return []
    kind, _, rest = text.partition(":")
    kind = kind.lower()
    if kind == "ga":
        group = _group(rest.partition(":")[0])
        return [
            regular_representation(group, g, "right") for g in range(group.order) if g != group.identity
        ]
    if kind == "lift":
        path_ = Path(rest)
        if not path_.exists():
            raise FileNotFoundError(f"Lift file not found: {path_}")
        lift = LiftFile.model_validate(json.loads(path_.read_text()))
        blocks = len(lift.base[0])
        ell = lift.ell
        return [Permutation(tuple(b * ell + (r + 1) % ell for b in range(blocks) for r in range(ell)))]
    return []
