"""
Workbench: one object that drives every analysis with shared settings.

The CLI builds codes from specification strings and hands them to a
Workbench; the Workbench composes the analysis modules and returns report
objects. No analysis logic lives here, only wiring and the search limits.

    bench = Workbench(RunSettings(cap=3))
    record = bench.product("hgp", [k4, k4])
    gadget, report = bench.lift(record, "first", Permutation.from_cycles("(15)(26)", 6))
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from autgadgets.analysis import automorph, cupprod, ftcheck, gadgets, products
from autgadgets.analysis.distance import DistanceReport, css_distance, distance, dual_distance
from autgadgets.analysis.families import cycle_code
from autgadgets.analysis.graphs import graph_automorphisms
from autgadgets.analysis.validation import ValidationReport, validate
from autgadgets.errors import CapExceededError, NotAnAutomorphismError
from autgadgets.io.parser import RunSettings
from autgadgets.models.automorphism import AutomorphismGroup, CodeAutomorphism
from autgadgets.models.bitmatrix import BitVector
from autgadgets.models.classical import ClassicalCode
from autgadgets.models.gadget import Gadget
from autgadgets.models.graph import SimpleGraph
from autgadgets.models.orientation import CzPairing, Orientation
from autgadgets.models.permutation import Permutation
from autgadgets.models.product import ProductRecord

logger = logging.getLogger(__name__)

LIFT_CHOICES = {
    "hgp": ("first", "second", "right-first", "right-second"),
    "qc": ("first", "second", "classical"),
    "qq": ("first.first", "first.second", "second.first", "second.second"),
}


@dataclass
class CodeReport:
    """Parameters of a classical code."""

    name: str
    n: int
    k: int
    m: int
    rank: int
    d: DistanceReport
    d_perp: DistanceReport
    row_weight: int
    column_weight: int

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "n": self.n,
            "k": self.k,
            "m": self.m,
            "rank": self.rank,
            "d": self.d.to_dict(),
            "d_perp": self.d_perp.to_dict(),
            "row_weight": self.row_weight,
            "column_weight": self.column_weight,
        }


@dataclass
class GroupReport:
    """
    An automorphism group and the structural checks run on it.

    Attributes:
        code: Code name.
        order: Number of elements found.
        complete: True when the group is all of Aut(C).
        method: "exhaustive", "closure" or "graph-closure".
        tanner_order: Elements whose check action is a permutation.
        logical_order: Distinct logical actions V.
        affine: Every V invertible.
        dual_bound: Dual-automorphism bound verdict (exhaustive groups only).
        generators: Generators in cycle notation, for closures.
    """

    code: str
    order: int
    complete: bool
    method: str
    tanner_order: int
    logical_order: int
    affine: bool
    dual_bound: Optional[bool] = None
    generators: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, object]:
        return {
            "code": self.code,
            "order": self.order,
            "complete": self.complete,
            "method": self.method,
            "tanner_order": self.tanner_order,
            "logical_order": self.logical_order,
            "affine": self.affine,
            "dual_bound": self.dual_bound,
            "generators": list(self.generators),
        }


@dataclass
class ProductReport:
    """
    Summary of a product record.

    Attributes:
        validation: Commutation, metacheck and basis verification.
        sectors: Per-sector grid shape and logical count.
        distances: Per Pauli type, over the kept logicals.
        formula: Lower bounds from the product formulas, when known.
        kunneth: Kunneth counts against the built code.
    """

    name: str
    kind: str
    n: int
    k: int
    k_kept: int
    validation: ValidationReport
    sectors: List[Dict[str, object]]
    distances: Dict[str, DistanceReport]
    formula: Dict[str, int] = field(default_factory=dict)
    kunneth: Dict[str, int] = field(default_factory=dict)

    def distance_interval(self, pauli: str) -> Tuple[int, Optional[int]]:
        low, high = self.distances[pauli].interval()
        return max(low, self.formula.get(pauli, 0)), high

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "kind": self.kind,
            "n": self.n,
            "k": self.k,
            "k_kept": self.k_kept,
            "validation": self.validation.to_dict(),
            "sectors": list(self.sectors),
            "distances": {p: r.to_dict() for p, r in self.distances.items()},
            "distance_intervals": {p: list(self.distance_interval(p)) for p in self.distances},
            "formula": dict(self.formula),
            "kunneth": dict(self.kunneth),
        }


class Workbench:
    """
    Facade over the analysis modules.

    Attributes:
        settings: Search caps, budgets and worker count.
    """

    def __init__(self, settings: Optional[RunSettings] = None):
        self.settings = settings or RunSettings()

    # ------------------------------------------------------------------
    # Classical codes and groups
    # ------------------------------------------------------------------

    def code_report(self, code: ClassicalCode) -> CodeReport:
        s = self.settings
        d = distance(code, max(s.cap, 6), s.budget, s.workers)
        d_perp = dual_distance(code, max(s.cap, 6), s.budget, s.workers)
        return CodeReport(
            name=code.name,
            n=code.n,
            k=code.k,
            m=code.m,
            rank=code.rank_h,
            d=d,
            d_perp=d_perp,
            row_weight=int(code.H.row_weights().max(initial=0)),
            column_weight=int(code.H.column_weights().max(initial=0)),
        )

    def automorphism_group(
        self,
        code: ClassicalCode,
        generators: Sequence[Permutation] = (),
        graph: Optional[SimpleGraph] = None,
        exhaustive: bool = True,
    ) -> Tuple[AutomorphismGroup, str]:
        """
        Exhaustive search when ``exhaustive`` and n fits ``n_cap``; otherwise
        closure of the given generators or of the graph automorphisms behind
        a cycle code.

        Raises:
            CapExceededError: If n is too large and no generators are known.
            NotAnAutomorphismError: If a generator does not preserve the code.
        """
        s = self.settings
        if generators:
            return automorph.close_group(code, generators, s.order_cap), "closure"
        if exhaustive and code.n <= s.n_cap:
            return automorph.enumerate_automorphisms(code, s.n_cap, s.workers), "exhaustive"
        if graph is not None:
            edge_perms = [a.edge_perm for a in graph_automorphisms(graph, s.vertex_cap, s.workers)]
            logger.info("%s: closing %d graph automorphisms", code.name, len(edge_perms))
            return automorph.close_group(code, edge_perms, s.order_cap), "graph-closure"
        raise CapExceededError(what="code length", limit=s.n_cap, requested=code.n)

    def group_report(
        self,
        code: ClassicalCode,
        generators: Sequence[Permutation] = (),
        graph: Optional[SimpleGraph] = None,
        exhaustive: bool = True,
    ) -> GroupReport:
        group, method = self.automorphism_group(code, generators, graph, exhaustive)
        logical = automorph.logical_group(group)
        affine = automorph.affine_check(group)
        dual_bound = None
        if group.complete:
            s = self.settings
            d = distance(code, max(s.cap, 6), s.budget, s.workers).value
            d_perp = dual_distance(code, max(s.cap, 6), s.budget, s.workers).value
            dual_bound = automorph.dual_bound_check(code, group, d, d_perp).holds
        return GroupReport(
            code=code.name,
            order=group.order,
            complete=group.complete,
            method=method,
            tanner_order=len(group.tanner_elements()),
            logical_order=logical.order,
            affine=affine.holds,
            dual_bound=dual_bound,
            generators=[g.to_cycles() for g in group.generators],
        )

    # ------------------------------------------------------------------
    # Products
    # ------------------------------------------------------------------

    def product(self, kind: str, inputs: Sequence[ClassicalCode], left: bool = False) -> ProductRecord:
        """
        hgp takes two codes; qc takes three (hgp of the first two, then the
        third as classical input); qq takes four (two hgp records).

        With ``left`` the quantum inputs are designated left-sector codes.
        """
        expected = {"hgp": 2, "qc": 3, "qq": 4}
        if kind not in expected:
            raise ValueError(f"Unknown product kind: {kind!r}")
        if len(inputs) != expected[kind]:
            raise ValueError(f"{kind} needs {expected[kind]} codes, got {len(inputs)}")

        def inner(a: ClassicalCode, b: ClassicalCode) -> ProductRecord:
            record = products.hgp(a, b)
            return products.as_left_sector(record) if left else record

        if kind == "hgp":
            return products.hgp(inputs[0], inputs[1])
        if kind == "qc":
            return products.homprod_qc(inner(inputs[0], inputs[1]), inputs[2])
        return products.homprod_qq(inner(inputs[0], inputs[1]), inner(inputs[2], inputs[3]))

    def product_report(self, p: ProductRecord) -> ProductReport:
        s = self.settings
        validation = validate(p.code, p.full_basis())
        sectors = []
        for sector in p.code.sectors.sectors:
            basis = p.sector_bases.get(sector.name)
            sectors.append(
                {
                    "name": sector.name,
                    "rows": sector.rows,
                    "cols": sector.cols,
                    "size": sector.size,
                    "logicals": basis.k if basis is not None else 0,
                    "gauge": sector.name in p.gauge_sectors,
                }
            )
        distances = {pauli: css_distance(p.code, pauli, p.kept, s.cap, s.budget) for pauli in ("X", "Z")}
        formula: Dict[str, int] = {}
        if p.kind == "qc" and p.gauge_sectors:
            try:
                q, c = p.factors
                dx, dz = ftcheck.quantum_distances(q, max(s.cap, 8), s.budget)
                formula = {"X": dx * ftcheck.exact_distance(c), "Z": dz}
            except ValueError as exc:
                logger.info("%s: no formula bound (%s)", p.name, exc)
        return ProductReport(
            name=p.name,
            kind=p.kind,
            n=p.n,
            k=p.code.k,
            k_kept=p.kept.k,
            validation=validation,
            sectors=sectors,
            distances=distances,
            formula=formula,
            kunneth=products.kunneth_check(p),
        )

    # ------------------------------------------------------------------
    # Gadgets
    # ------------------------------------------------------------------

    @staticmethod
    def _automorphism(code: ClassicalCode, sigma: Permutation) -> CodeAutomorphism:
        aut = automorph.check_automorphism(code, sigma)
        if aut is None:
            raise NotAnAutomorphismError(cycles=sigma.to_cycles())
        return aut

    @staticmethod
    def _hgp_input(record: ProductRecord, which: str) -> ClassicalCode:
        c1, c2 = record.factors
        assert isinstance(c1, ClassicalCode) and isinstance(c2, ClassicalCode)
        targets = {
            "first": c1,
            "second": c2,
            "right-first": c2.transpose(),
            "right-second": c1.transpose(),
        }
        if which not in targets:
            raise ValueError(f"hgp lift must be one of {LIFT_CHOICES['hgp']}, got {which!r}")
        return targets[which]

    def _hgp_gadget(self, record: ProductRecord, which: str, sigma: Permutation) -> Gadget:
        aut = self._automorphism(self._hgp_input(record, which), sigma)
        if which.startswith("right-"):
            return gadgets.lift_hgp_right(record, which.split("-")[1], aut)
        return gadgets.lift_hgp(record, which, aut)

    def input_code(self, p: ProductRecord, which: str) -> ClassicalCode:
        """The classical code whose automorphisms ``lift(p, which, ...)`` accepts."""
        if p.kind == "hgp":
            return self._hgp_input(p, which)
        if p.kind == "qc":
            q, c = p.factors
            if which == "classical":
                assert isinstance(c, ClassicalCode)
                return c
            assert isinstance(q, ProductRecord)
            return self._hgp_input(q, which)
        outer, _, inner = which.partition(".")
        q = p.factors[0 if outer == "first" else 1]
        assert isinstance(q, ProductRecord)
        return self._hgp_input(q, inner)

    def lift(self, p: ProductRecord, which: str, sigma: Permutation) -> Tuple[Gadget, gadgets.GadgetReport]:
        """
        Lift an input automorphism to a gadget of ``p`` and verify it.

        ``which`` names the input: for qc records "first"/"second" pick an
        input of the quantum hgp factor and "classical" the classical one;
        for qq records "first.second" picks the second input of the first
        quantum factor.

        Raises:
            NotAnAutomorphismError: If sigma is not an automorphism of the input.
            VerificationError: If a gadget identity fails.
        """
        choices = LIFT_CHOICES.get(p.kind, ())
        if which not in choices:
            raise ValueError(f"{p.kind} lift must be one of {choices}, got {which!r}")
        if p.kind == "hgp":
            g = self._hgp_gadget(p, which, sigma)
        elif p.kind == "qc":
            q, c = p.factors
            assert isinstance(c, ClassicalCode)
            if which == "classical":
                g = gadgets.lift_qc(p, "classical", self._automorphism(c, sigma))
            else:
                assert isinstance(q, ProductRecord)
                g = gadgets.lift_qc(p, "quantum", self._hgp_gadget(q, which, sigma))
        else:
            outer, inner = which.split(".")
            q = p.factors[0 if outer == "first" else 1]
            assert isinstance(q, ProductRecord)
            g = gadgets.lift_qq(p, outer, self._hgp_gadget(q, inner, sigma))
        return g, gadgets.verify(g, p)

    def logical_group_order(self, gadget_list: Sequence[Gadget]) -> int:
        return gadgets.logical_group_order(gadget_list, self.settings.order_cap)

    # ------------------------------------------------------------------
    # Checks
    # ------------------------------------------------------------------

    def sector_check(self, p: ProductRecord, kind: str) -> ftcheck.SectorCheckReport:
        s = self.settings
        if kind == "left":
            return ftcheck.left_sector_distance_check(p, s.budget, s.cap, s.workers)
        if kind == "rows":
            return ftcheck.restricted_row_weight_check(p, s.budget, s.cap, s.workers)
        if kind == "middle":
            return ftcheck.middle_sector_bounds_check(p, s.budget, s.cap, s.workers)
        raise ValueError(f"Unknown sector check: {kind!r}")

    def effective_distance(self, g: Gadget, p: ProductRecord) -> ftcheck.EffectiveDistanceReport:
        s = self.settings
        return ftcheck.effective_distance_report(g, p, s.budget, s.cap, s.workers)

    # ------------------------------------------------------------------
    # Copy-cup CZ
    # ------------------------------------------------------------------

    def cup_record(self, g1: SimpleGraph, g2: SimpleGraph) -> ProductRecord:
        return products.hgp(cycle_code(g1), cycle_code(g2).transpose())

    def codeword_orientation(self, graph: SimpleGraph, codeword: BitVector) -> Orientation:
        """
        Raises:
            ValueError: If the codeword support is not a single cycle.
        """
        orientation = cupprod.orient_from_codeword(graph, codeword)
        if orientation is None:
            raise ValueError(f"codeword {codeword} is not a single cycle of {graph.name}")
        return orientation

    def cup(
        self,
        p: ProductRecord,
        o1: Orientation,
        o2: Orientation,
        require_leibniz: bool = True,
    ) -> Tuple[CzPairing, cupprod.CzReport]:
        pairing = cupprod.czpairs(p, o1, o2, require_leibniz)
        return pairing, cupprod.verify_cz(p, pairing)

    def permuted_cup(
        self,
        p: ProductRecord,
        pairing: CzPairing,
        report: cupprod.CzReport,
        gadget: Gadget,
    ) -> Tuple[cupprod.CzReport, bool]:
        """
        Relabel block 1 of a copy-cup circuit by a permutation-only gadget.

        Returns:
            The report of the relabelled circuit and whether its adjacency
            equals the one predicted from the gadget's logical action.
        """
        if not gadget.is_permutation_only():
            raise ValueError(f"{gadget.name} is not a permutation gadget")
        sigma = Permutation.from_matrix(gadget.U)
        moved = cupprod.verify_cz(p, cupprod.permute_pairing(pairing, sigma))
        predicted = cupprod.conjugate_adjacency(report.adjacency, gadget.V_bar)
        return moved, predicted == moved.adjacency
