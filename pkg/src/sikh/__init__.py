"""Deformed Asaeda-Przytycki-Sikora homology of links in thickened punctured disks."""

from .coeff import F2, QQ, ZZ, get_ring, parse_lambda
from .cube import build_cube, grading_blocks
from .diagram import Diagram, load, loads
from .errors import DiagramError, InvariantError
from .homology import GradedHomology, homology, sikh

__all__ = [
    "F2", "QQ", "ZZ", "get_ring", "parse_lambda",
    "build_cube", "grading_blocks",
    "Diagram", "load", "loads",
    "DiagramError", "InvariantError",
    "GradedHomology", "homology", "sikh",
]
__version__ = "0.1.0"
