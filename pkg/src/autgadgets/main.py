"""
Command-line interface for autgadgets.

Usage:
    autgadgets code <spec>
    autgadgets aut enumerate|close <spec> [--gen CYCLES ...]
    autgadgets product hgp|qc|qq <spec> ... [--left]
    autgadgets gadget lift hgp|qc|qq <spec> ... --which W --sigma CYCLES [--effective]
    autgadgets check sector|rows|middle|kunneth|validate hgp|qc|qq <spec> ...
    autgadgets cup pairs|verify <graph1> <graph2> [--row1 N --row2 N | --orient1 F --orient2 F]

Examples:
    # Parameters of the cycle code of K4
    autgadgets code cycle:k4

    # The [[52,10,3]] hypergraph product as JSON
    autgadgets --format json product hgp cycle:k4 cycle:k4

    # Lift a K4 edge automorphism to the first sector
    autgadgets gadget lift hgp cycle:k4 cycle:k4 --which first --sigma "(15)(26)"

Exit codes: 0 success, 1 input error, 2 verification failure,
3 a reported bound is uncertified (search budget exhausted).
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler

from autgadgets.analysis.cupprod import czpairs
from autgadgets.analysis.families import cycle_code
from autgadgets.analysis.products import kunneth_check
from autgadgets.analysis.validation import validate
from autgadgets.analysis.workbench import LIFT_CHOICES, Workbench
from autgadgets.errors import (
    AnalysisError,
    CapExceededError,
    CodeNotPreservedError,
    NotAnAutomorphismError,
    OrientationError,
    VerificationError,
)
from autgadgets.io.formatter import ReportOutput, RunManifest, format_output, save_output
from autgadgets.io.parser import (
    RunSettings,
    build_code,
    build_codes,
    build_graph,
    parse_orientation,
    save_f2m,
    spec_generators,
    spec_graph,
)
from autgadgets.models.orientation import Orientation
from autgadgets.models.permutation import Permutation
from autgadgets.models.product import ProductRecord
from autgadgets.visualizer.html import HTMLVisualizer
from autgadgets.visualizer.terminal import TerminalVisualizer

logger = logging.getLogger("autgadgets")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFICATION = 2
EXIT_UNCERTIFIED = 3

PRODUCT_ARITY = {"hgp": 2, "qc": 3, "qq": 4}


def configure_logging(verbose: bool, quiet: bool) -> None:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------


def _record(bench: Workbench, kind: str, specs: Sequence[str], left: bool) -> ProductRecord:
    return bench.product(kind, build_codes(specs), left)


def cmd_code(bench: Workbench, args: argparse.Namespace) -> Tuple[str, Dict[str, object], bool]:
    code = build_code(args.spec)
    report = bench.code_report(code)
    out = bench.settings.out
    if out is not None:
        save_f2m(code.H, out / f"{_safe(code.name)}.H.f2m")
        save_f2m(code.G, out / f"{_safe(code.name)}.G.f2m")
    certified = report.d.certified and report.d_perp.certified
    return code.name, {"code": report}, certified


def cmd_aut(bench: Workbench, args: argparse.Namespace) -> Tuple[str, Dict[str, object], bool]:
    code = build_code(args.spec)
    generators = [Permutation.from_cycles(text, code.n) for text in args.gen or []]
    graph = spec_graph(args.spec)
    exhaustive = args.mode == "enumerate"
    if not generators and graph is None and not (exhaustive and code.n <= bench.settings.n_cap):
        generators = spec_generators(args.spec)
        if not generators:
            raise ValueError(f"{code.name}: no generators known; pass --gen or use a cycle, ga or lift code")
    report = bench.group_report(code, generators, graph, exhaustive)
    return code.name, {"group": report}, True


def cmd_product(bench: Workbench, args: argparse.Namespace) -> Tuple[str, Dict[str, object], bool]:
    p = _record(bench, args.kind, args.specs, args.left)
    report = bench.product_report(p)
    out = bench.settings.out
    if out is not None:
        save_f2m(p.code.H_X, out / f"{_safe(p.name)}.HX.f2m")
        save_f2m(p.code.H_Z, out / f"{_safe(p.name)}.HZ.f2m")
    certified = all(d.certified for d in report.distances.values())
    return p.name, {"product": report}, certified


def cmd_gadget(bench: Workbench, args: argparse.Namespace) -> Tuple[str, Dict[str, object], bool]:
    p = _record(bench, args.kind, args.specs, args.left)
    target = bench.input_code(p, args.which)
    sections: Dict[str, object] = {}
    gadget_list = []
    for i, text in enumerate(args.sigma, start=1):
        sigma = Permutation.from_cycles(text, target.n)
        g, report = bench.lift(p, args.which, sigma)
        gadget_list.append(g)
        sections[f"gadget {i}"] = report
        if args.effective:
            sections[f"effective {i}"] = bench.effective_distance(g, p)
    if len(gadget_list) > 1:
        sections["group"] = {"logical_order": bench.logical_group_order(gadget_list)}
    return p.name, sections, True


def cmd_check(bench: Workbench, args: argparse.Namespace) -> Tuple[str, Dict[str, object], bool]:
    p = _record(bench, args.kind, args.specs, args.left)
    if args.check == "kunneth":
        return p.name, {"kunneth": kunneth_check(p)}, True
    if args.check == "validate":
        return p.name, {"validation": validate(p.code, p.full_basis())}, True
    kind = {"sector": "left", "rows": "rows", "middle": "middle"}[args.check]
    report = bench.sector_check(p, kind)
    if report.holds is False:
        raise VerificationError(identity=f"{report.kind} check: {report.note or 'minimum below the bound'}")
    certified = all(r.certified for r in report.reports.values())
    return p.name, {"check": report}, certified


def _orientation(bench: Workbench, graph_spec: str, row: int, orient_file: Optional[Path]) -> Orientation:
    graph = build_graph(graph_spec)
    if orient_file is not None:
        if not orient_file.exists():
            raise FileNotFoundError(f"Orientation file not found: {orient_file}")
        return parse_orientation(orient_file.read_text(), graph)
    g = cycle_code(graph).G
    if not 1 <= row <= g.rows:
        raise ValueError(f"codeword row must be in 1..{g.rows}, got {row}")
    return bench.codeword_orientation(graph, g.row(row - 1))


def cmd_cup(bench: Workbench, args: argparse.Namespace) -> Tuple[str, Dict[str, object], bool]:
    o1 = _orientation(bench, args.graph1, args.row1, args.orient1)
    o2 = _orientation(bench, args.graph2, args.row2, args.orient2)
    p = bench.cup_record(o1.graph, o2.graph)
    if args.action == "pairs":
        pairing = czpairs(p, o1, o2, not args.allow_odd)
        return p.name, {"pairs": {"gates": len(pairing), "pairs": [list(pr) for pr in pairing.pairs]}}, True
    pairing, report = bench.cup(p, o1, o2, not args.allow_odd)
    sections: Dict[str, object] = {"cz": report}
    if args.sigma:
        g, _ = bench.lift(p, "first", Permutation.from_cycles(args.sigma, o1.graph.num_edges))
        moved, consistent = bench.permuted_cup(p, pairing, report, g)
        if not consistent:
            raise VerificationError(identity="relabelled CZ adjacency = V^-1 A")
        sections["relabelled"] = moved
    return p.name, sections, True


COMMANDS: Dict[str, Callable[[Workbench, argparse.Namespace], Tuple[str, Dict[str, object], bool]]] = {
    "code": cmd_code,
    "aut": cmd_aut,
    "product": cmd_product,
    "gadget": cmd_gadget,
    "check": cmd_check,
    "cup": cmd_cup,
}


def _safe(name: str) -> str:
    return "".join(ch if ch.isalnum() or ch in "._-" else "_" for ch in name)


def _input_specs(args: argparse.Namespace) -> List[str]:
    specs: List[str] = []
    for attr in ("spec", "specs", "graph1", "graph2", "orient1", "orient2"):
        value = getattr(args, attr, None)
        if isinstance(value, list):
            specs.extend(value)
        elif value is not None:
            specs.append(str(value))
    return specs


# ----------------------------------------------------------------------
# Argument parsing
# ----------------------------------------------------------------------


def _add_product_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("kind", choices=sorted(PRODUCT_ARITY), help="Product kind")
    p.add_argument("specs", nargs="+", help="Input code specifications (2 for hgp, 3 for qc, 4 for qq)")
    p.add_argument("--left", action="store_true", help="Designate quantum inputs as left-sector codes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="autgadgets",
        description="Automorphism gadgets for hypergraph and homological product codes",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s code cycle:k4
  %(prog)s aut enumerate ga:z7:1+x+x3
  %(prog)s aut close cycle:petersen
  %(prog)s product hgp cycle:k4 cycle:k4
  %(prog)s gadget lift hgp cycle:k4 cycle:k4 --which first --sigma "(15)(26)"
  %(prog)s check sector hgp rep:3 rep:3
  %(prog)s cup verify k4 k4 --row1 1 --row2 1
        """,
    )
    parser.add_argument("--cap", type=int, default=None, help="Largest support weight searched")
    parser.add_argument("--budget", type=int, default=None, help="Enumeration states per search")
    parser.add_argument("--workers", type=int, default=None, help="Worker threads (default: CPU count)")
    parser.add_argument("--seed", type=int, default=0, help="Seed recorded in the manifest")
    parser.add_argument(
        "-f", "--format",
        choices=["table", "json", "html"],
        default="table",
        help="Output format (default: table)",
    )
    parser.add_argument("-o", "--out", type=Path, default=None, help="Directory for report and matrix files")
    parser.add_argument("--timing", action="store_true", help="Include wall-clock time in the manifest")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    parser.add_argument("-q", "--quiet", action="store_true", help="No terminal rendering, warnings only")

    sub = parser.add_subparsers(dest="command", required=True)

    p_code = sub.add_parser("code", help="Parameters [n,k,d] and d_perp of a classical code")
    p_code.add_argument("spec", help="Code specification, e.g. cycle:k4 or ga:d6:1+r+sr^-1")

    p_aut = sub.add_parser("aut", help="Automorphism group of a classical code")
    p_aut.add_argument("mode", choices=["enumerate", "close"])
    p_aut.add_argument("spec", help="Code specification")
    p_aut.add_argument("--gen", action="append", help="Generator in 1-indexed cycle notation (repeatable)")

    p_prod = sub.add_parser("product", help="Build and summarize a product code")
    _add_product_args(p_prod)

    p_gad = sub.add_parser("gadget", help="Lift automorphisms to gadgets")
    gad_sub = p_gad.add_subparsers(dest="gadget_action", required=True)
    p_lift = gad_sub.add_parser("lift", help="Lift and verify")
    _add_product_args(p_lift)
    choices = sorted({w for ws in LIFT_CHOICES.values() for w in ws})
    p_lift.add_argument("--which", required=True, choices=choices, help="Input the automorphism acts on")
    p_lift.add_argument("--sigma", action="append", required=True, help="Automorphism in cycle notation (repeatable)")
    p_lift.add_argument("--effective", action="store_true", help="Add the effective-distance certificate")

    p_check = sub.add_parser("check", help="Sector-restricted weight and structural checks")
    p_check.add_argument("check", choices=["sector", "rows", "middle", "kunneth", "validate"])
    _add_product_args(p_check)

    p_cup = sub.add_parser("cup", help="Copy-cup CZ between two blocks of hgp(cycle(G1), cycle(G2)^T)")
    p_cup.add_argument("action", choices=["pairs", "verify"])
    p_cup.add_argument("graph1", help="First graph, e.g. k4")
    p_cup.add_argument("graph2", help="Second graph")
    p_cup.add_argument("--row1", type=int, default=1, help="Codeword (generator row, 1-indexed) orienting graph1")
    p_cup.add_argument("--row2", type=int, default=1, help="Codeword orienting graph2")
    p_cup.add_argument("--orient1", type=Path, default=None, help="Orientation file for graph1")
    p_cup.add_argument("--orient2", type=Path, default=None, help="Orientation file for graph2")
    p_cup.add_argument("--allow-odd", action="store_true", help="Skip the Leibniz check")
    p_cup.add_argument("--sigma", default=None, help="Relabel block 1 by the first-sector gadget of this edge permutation")
    return parser


def _settings(args: argparse.Namespace) -> RunSettings:
    values: Dict[str, object] = {"seed": args.seed, "format": args.format, "out": args.out}
    for name in ("cap", "budget", "workers"):
        if getattr(args, name) is not None:
            values[name] = getattr(args, name)
    return RunSettings(**values)


def _render(output: ReportOutput, settings: RunSettings, quiet: bool, timing: bool) -> None:
    if settings.out is not None:
        path = save_output(output, settings.out, timing=timing)
        logger.info("JSON saved to: %s", path)
    if settings.format == "json":
        print(output.to_json(timing=timing))
    elif settings.format == "html":
        html_viz = HTMLVisualizer(settings)
        if settings.out is not None:
            html_path = settings.out / f"{output.slug}.html"
            html_viz.save(output, html_path)
            logger.info("HTML saved to: %s", html_path)
        else:
            html_viz.visualize(output)
    elif not quiet:
        TerminalVisualizer(settings).visualize(output)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose, args.quiet)
    argv_list = list(sys.argv[1:] if argv is None else argv)

    try:
        settings = _settings(args)
        bench = Workbench(settings)
        manifest = RunManifest.build(argv_list, _input_specs(args), settings.seed)
        start = time.perf_counter()
        title, sections, certified = COMMANDS[args.command](bench, args)
        manifest.elapsed = time.perf_counter() - start
        output = format_output(args.command, title, manifest, sections, certified)
        _render(output, settings, args.quiet, args.timing)
        return EXIT_OK if certified else EXIT_UNCERTIFIED

    except (VerificationError, CodeNotPreservedError) as e:
        print(f"Verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (FileNotFoundError, ValueError, ValidationError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (CapExceededError, NotAnAutomorphismError, OrientationError, AnalysisError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
