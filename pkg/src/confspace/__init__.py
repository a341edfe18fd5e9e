"""Exact tools for ratio complexes on configuration points, braid-word
equality and symmetric-group image classification, binary-form
discriminants, and the explicit morphism gallery."""

from . import braid, homology, morphisms, polyring, ratios

__all__ = ["braid", "homology", "morphisms", "polyring", "ratios"]
