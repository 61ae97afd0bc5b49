"""Homological stability verdicts for configuration spaces of closed manifolds."""
from .groups import FiniteAbelianGroup
from .manifold import ManifoldDescriptor, catalog, make_descriptor
from .plocal import Locale, Prime, Ratio, is_unit, p_part, vp
from .stability import Outcome, StabilityVerdict, rational_stability, stable_range, torsion_stability

__all__ = [
    "FiniteAbelianGroup",
    "Locale",
    "ManifoldDescriptor",
    "Outcome",
    "Prime",
    "Ratio",
    "StabilityVerdict",
    "catalog",
    "is_unit",
    "make_descriptor",
    "p_part",
    "rational_stability",
    "stable_range",
    "torsion_stability",
    "vp",
]
