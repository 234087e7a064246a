"""Legendrian knot invariants over Z/2 from front diagrams.

Computes the Chekanov-Eliashberg differential, augmentations and their
homotopy classes, Morse complex sequences with explicit move traces between
them, front disk counts, normal rulings and linearized homology.
"""

from __future__ import annotations

from .augment import Augmentation, enumerate_augmentations, homotopy_classes
from .dga import Differential, differential
from .errors import LegmcsError
from .front import FrontDiagram, load_front, parse_front_word
from .linhom import homology_poincare, linearize
from .mcs import MCS, build_a_form
from .report import analyze, build_report
from .sweep import are_equivalent

__version__ = "0.1.0"

__all__ = [
    "Augmentation",
    "Differential",
    "FrontDiagram",
    "LegmcsError",
    "MCS",
    "analyze",
    "are_equivalent",
    "build_a_form",
    "build_report",
    "differential",
    "enumerate_augmentations",
    "homotopy_classes",
    "homology_poincare",
    "linearize",
    "load_front",
    "parse_front_word",
    "__version__",
]
