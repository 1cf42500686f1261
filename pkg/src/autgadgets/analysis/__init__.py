"""Algorithms on codes: distances, automorphisms, products, gadgets and checks."""

from autgadgets.analysis.automorph import check_automorphism, close_group, enumerate_automorphisms
from autgadgets.analysis.cupprod import czpairs, verify_cz
from autgadgets.analysis.distance import DistanceReport, css_distance, distance, dual_distance
from autgadgets.analysis.gadgets import lift_hgp, lift_hgp_right, lift_qc, lift_qq, verify
from autgadgets.analysis.products import hgp, homprod_qc, homprod_qq, kunneth_check

__all__ = [
    "DistanceReport",
    "check_automorphism",
    "close_group",
    "css_distance",
    "czpairs",
    "distance",
    "dual_distance",
    "enumerate_automorphisms",
    "hgp",
    "homprod_qc",
    "homprod_qq",
    "kunneth_check",
    "lift_hgp",
    "lift_hgp_right",
    "lift_qc",
    "lift_qq",
    "verify",
    "verify_cz",
]
