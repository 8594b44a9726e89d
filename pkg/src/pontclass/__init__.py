"""Exact decision procedure for vanishing of rational Pontryagin classes p1, p2
of compact locally symmetric manifolds."""

__version__ = "0.1.0"

from .exactpoly import MultiPoly, UsageError, render
from .groupdata import GroupSpec, catalog, isotropy_data, parse_group
from .charclass import ChernClass, PontryaginPair, pontryagin_classes, total_chern
from .idealtest import MembershipProblem, MembershipResult, is_in_ideal
from .classify import VanishingReport, classify, classify_many, classify_product, theorem_table

__all__ = [
    "ChernClass", "GroupSpec", "MembershipProblem", "MembershipResult", "MultiPoly",
    "PontryaginPair", "UsageError", "VanishingReport", "catalog", "classify",
    "classify_many", "classify_product", "is_in_ideal", "isotropy_data", "parse_group",
    "pontryagin_classes", "render", "theorem_table", "total_chern",
]
