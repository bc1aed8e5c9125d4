"""Exact arithmetic for the framed topological vertex and its fermionic formulas."""

from .kernels import BACKEND
from .partitions import FrobeniusCoord, conjugate, enumerate_partitions, kappa, to_frobenius
from .qseries import EXACT, PointField, QRat
from .vertex import Framing, Path, VertexValue, vertex_value, w_framed

__all__ = [
    "BACKEND",
    "EXACT",
    "Framing",
    "FrobeniusCoord",
    "Path",
    "PointField",
    "QRat",
    "VertexValue",
    "conjugate",
    "enumerate_partitions",
    "kappa",
    "to_frobenius",
    "vertex_value",
    "w_framed",
]
