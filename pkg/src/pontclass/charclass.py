"""Chern and Pontryagin classes of an isotropy representation from its weights.

The total Chern class of a representation with weights w_1, ..., w_m is the
product of (1 + w_i).  Only polynomial degrees up to 4 (cohomological degree
8) are needed for p1 and p2, so the product is truncated as it accumulates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactpoly import (
    MultiPoly,
    UsageError,
    constant,
    graded_component,
    linear_form,
    poly_add,
    poly_mul_truncated,
    poly_scale,
)
from .groupdata import GroupSpec, Weight, isotropy_data

DEFAULT_MAX_DEG = 4


class ComplexGroupError(UsageError):
    """Complex groups are decided by rule and have no weight computation."""


@dataclass(frozen=True)
class ChernClass:
    arity: int
    truncated_total: MultiPoly
    max_deg: int

    def component(self, k: int) -> MultiPoly:
        if k > self.max_deg:
            raise UsageError(f"c_{k} lies above the truncation degree {self.max_deg}")
        return graded_component(self.truncated_total, k)

    @property
    def components(self) -> list[MultiPoly]:
        return [self.component(k) for k in range(self.max_deg + 1)]


@dataclass(frozen=True)
class PontryaginPair:
    """p1 (degree 2) and p2 (degree 4) in the ring left after relations."""

    p1: MultiPoly
    p2: MultiPoly


def total_chern(weights: Sequence[Weight], arity: int, max_deg: int = DEFAULT_MAX_DEG) -> ChernClass:
    """Truncated product of (1 + w) over the weights, in the given order."""
    total = constant(arity, 1)
    for w in weights:
        if len(w) != arity:
            raise UsageError(f"weight of length {len(w)} in a ring of arity {arity}")
        total = poly_mul_truncated(total, poly_add(constant(arity, 1), linear_form(w)), max_deg)
    return ChernClass(arity, total, max_deg)


def pontryagin_from_chern(chern: ChernClass) -> tuple[MultiPoly, MultiPoly]:
    """(p1, p2) = (-c2, c4) in the ring of the Chern class."""
    return poly_scale(chern.component(2), -1), chern.component(4)


@lru_cache(maxsize=None)
def group_chern(spec: GroupSpec, parity: str = "even") -> ChernClass:
    data = isotropy_data(spec, parity)
    if spec.is_complex:
        raise ComplexGroupError(f"{spec.label} is complex; its classes vanish by rule")
    return total_chern(data.weights, data.arity)


@lru_cache(maxsize=None)
def pontryagin_classes(spec: GroupSpec, parity: str = "even") -> PontryaginPair:
    """p1 and p2 of the isotropy representation, relations already applied."""
    data = isotropy_data(spec, parity)
    p1, p2 = pontryagin_from_chern(group_chern(spec, parity))
    return PontryaginPair(data.reduce(p1), data.reduce(p2))


def half_square_sum(weights: Sequence[Weight], arity: int) -> MultiPoly:
    """Half the sum of the squared weights; equals p1 when the weights are negation-closed."""
    out = MultiPoly(arity)
    for w in weights:
        f = linear_form(w)
        out = poly_add(out, f * f)
    return poly_scale(out, Fraction(1, 2))
