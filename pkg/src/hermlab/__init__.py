"""Hermitian surfaces over F_{q^2}: rational curves of degree q+1, exact
intersection numbers, strongly regular graphs, association schemes and
character tables."""

from . import bulk, cache, cyclo, emit, gf, gfmat, graphs, hermitian, polyalg, \
    projgeo, schemes, tablematch, verify
from .hermitian import HermitianSurface

__all__ = [
    "HermitianSurface", "bulk", "cache", "cyclo", "emit", "gf", "gfmat",
    "graphs", "hermitian", "polyalg", "projgeo", "schemes", "tablematch",
    "verify",
]

__version__ = "0.1.0"
