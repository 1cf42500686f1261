"""
Automorphism gadgets for product codes.

This package builds classical codes and their automorphism groups, forms
hypergraph and homological products, lifts input automorphisms to
fault-tolerant logical gadgets on the product, and certifies them.

Modules:
    models: Immutable value types (F2 matrices, permutations, graphs, codes)
    analysis: Distances, automorphism search, products, gadgets and checks
    io: Text formats, run settings and report output
    visualizer: Terminal and HTML report rendering
"""

__version__ = "0.1.0"

from autgadgets.analysis.workbench import Workbench
from autgadgets.io.parser import RunSettings, build_code
from autgadgets.io.formatter import format_output

__all__ = [
    "Workbench",
    "RunSettings",
    "build_code",
    "format_output",
]
