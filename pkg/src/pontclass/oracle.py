"""Independent checks on the curated group data.

The curated kernel generators for exceptional groups are recomputed here from
scratch: the degree-2 power-sum invariant of a fundamental representation of
the compact group U is built from its weights and pushed through the linear
map H^2(BS') -> H^2(BS) induced by the inclusion of tori.  The module also
holds untruncated Chern products and the parity-convention cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import lcm
from typing import Callable, Sequence

import flint

from .charclass import ComplexGroupError, half_square_sum, pontryagin_classes, total_chern
from .exactpoly import (
    MultiPoly,
    UsageError,
    linear_form,
    poly_add,
    proportional,
    render,
    substitute_all,
)
from .groupdata import (
    EXCEPTIONAL,
    PARITY_FAMILIES,
    GroupSpec,
    Weight,
    catalog,
    isotropy_data,
)

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)

UNTRUNCATED_LIMIT = 32


@dataclass(frozen=True)
class FundamentalRepData:
    """Weights of a fundamental representation of a compact exceptional group.

    ``self_dual`` marks weight multisets closed under negation; for those the
    power sums run over one weight from each pair {w, -w}.
    """

    group: str
    weights: tuple[Weight, ...]
    self_dual: bool

    @property
    def arity(self) -> int:
        return len(self.weights[0])

    def representatives(self) -> list[Weight]:
        if not self.self_dual:
            return list(self.weights)
        out = []
        for w in self.weights:
            lead = next((c for c in w if c), 0)
            if lead > 0:
                out.append(w)
        return out


def _v(n: int, entries: dict[int, Fraction | int]) -> Weight:
    out = [Fraction(0)] * n
    for i, c in entries.items():
        out[i] += Fraction(c)
    return tuple(out)


def _neg_count(signs) -> int:
    return sum(1 for s in signs if s < 0)


def _e8() -> list[Weight]:
    out = []
    for i, j in combinations(range(8), 2):
        for si, sj in product((1, -1), repeat=2):
            out.append(_v(8, {i: si, j: sj}))
    for eps in product((1, -1), repeat=8):
        if _neg_count(eps) % 2 == 0:
            out.append(tuple(HALF * e for e in eps))
    return out


def _e7_first() -> list[Weight]:
    # coordinates z_1..z_6 and z_7 for J_7 + J_8
    out = []
    for i in range(6):
        for s, t in product((1, -1), repeat=2):
            out.append(_v(7, {i: s, 6: t * HALF}))
    for eps in product((1, -1), repeat=6):
        if _neg_count(eps) % 2 == 1:
            out.append(_v(7, {i: HALF * e for i, e in enumerate(eps)}))
    return out


def _e7_second() -> list[Weight]:
    out = []
    for i, j in combinations(range(8), 2):
        w = [Fraction(-1, 4)] * 8
        w[i] += 1
        w[j] += 1
        out += [tuple(w), tuple(-c for c in w)]
    return out


def _e6_first() -> list[Weight]:
    # z_1..z_5 and z_6 for J_6 + J_7 + J_8
    out = [_v(6, {5: Fraction(-2, 3)})]
    for i in range(5):
        for s in (1, -1):
            out.append(_v(6, {i: s, 5: THIRD}))
    for eps in product((1, -1), repeat=5):
        if _neg_count(eps) % 2 == 0:
            out.append(_v(6, {**{i: HALF * e for i, e in enumerate(eps)}, 5: -HALF * THIRD}))
    return out


def _e6_second() -> list[Weight]:
    # z_1..z_6 and z_7 for J_7 - J_8
    out = []
    for i, j in combinations(range(6), 2):
        w = [-THIRD] * 6 + [Fraction(0)]
        w[i] += 1
        w[j] += 1
        out.append(tuple(w))
    for i in range(6):
        for s in (1, -1):
            w = [Fraction(-5, 6)] * 6 + [s * HALF]
            w[i] += 1
            out.append(tuple(w))
    return out


def _f4() -> list[Weight]:
    out = []
    for i in range(4):
        out += [_v(4, {i: 1}), _v(4, {i: -1})]
    for eps in product((1, -1), repeat=4):
        out.append(tuple(HALF * e for e in eps))
    return out


def _g2() -> list[Weight]:
    out = []
    for w in ((1, 0), (1, 1), (2, 1)):
        w = tuple(Fraction(c) for c in w)
        out += [w, tuple(-c for c in w)]
    return out


FUNDAMENTAL: dict[str, FundamentalRepData] = {
    "E8": FundamentalRepData("E8", tuple(_e8()), True),
    "E7a": FundamentalRepData("E7a", tuple(_e7_first()), True),
    "E7b": FundamentalRepData("E7b", tuple(_e7_second()), True),
    "E6a": FundamentalRepData("E6a", tuple(_e6_first()), False),
    "E6b": FundamentalRepData("E6b", tuple(_e6_second()), False),
    "F4": FundamentalRepData("F4", tuple(_f4()), True),
    "G2": FundamentalRepData("G2", tuple(_g2()), True),
}


def power_sum_invariant(data: FundamentalRepData, k: int) -> MultiPoly:
    """I_k: sum of k-th powers of the weights, viewed as linear forms."""
    if k < 1:
        raise UsageError("k must be positive")
    out = MultiPoly(data.arity)
    for w in data.representatives():
        out = poly_add(out, linear_form(w) ** k)
    return out


def _images(n: int, rows: list[dict[int, Fraction | int]]) -> list[MultiPoly]:
    return [linear_form(_v(n, r)) for r in rows]


def _identity_rows(count: int) -> list[dict[int, int]]:
    return [{i: 1} for i in range(count)]


# group -> (fundamental data key, images of the S' variables in the S ring)
SUBSTITUTIONS: dict[str, tuple[str, Callable[[], list[MultiPoly]]]] = {
    "E8_8": ("E8", lambda: _images(8, _identity_rows(8))),
    "E8_m24": ("E8", lambda: _images(8, _identity_rows(6) + [{6: HALF, 7: HALF}, {6: HALF, 7: -HALF}])),
    "E7_7": ("E7b", lambda: _images(8, _identity_rows(8))),
    "E7_m5": ("E7a", lambda: _images(7, _identity_rows(6) + [{6: 2}])),
    "E7_m25": ("E7a", lambda: _images(7, _identity_rows(5) + [{5: THIRD, 6: -THIRD}, {5: 2 * THIRD, 6: THIRD}])),
    "E6_6": ("E6b", lambda: _images(4, _identity_rows(3) + [{0: -1}, {1: -1}, {2: -1}, {3: 2}])),
    "E6_2": ("E6b", lambda: _images(7, _identity_rows(6) + [{6: 2}])),
    "E6_m14": ("E6a", lambda: _images(6, _identity_rows(6))),
    "E6_m26": ("E6a", lambda: _images(4, _identity_rows(4) + [{}, {}])),
    "F4_4": ("F4", lambda: _images(4, [{0: 1, 1: 1}, {0: -1, 1: 1}, {2: 1, 3: 1}, {2: 1, 3: -1}])),
    "F4_m20": ("F4", lambda: _images(4, _identity_rows(4))),
    "G2_2": ("G2", lambda: _images(2, [{0: 2}, {0: -3, 1: 1}])),
}


def recompute_kernel_generator(spec: GroupSpec) -> MultiPoly:
    """The image of I_2 under the torus map, in the group's pre-relation ring."""
    if spec.family not in SUBSTITUTIONS:
        raise UsageError(f"no substitution data for {spec}")
    key, images = SUBSTITUTIONS[spec.family]
    return substitute_all(power_sum_invariant(FUNDAMENTAL[key], 2), images())


def kernel_generator_scalar(spec: GroupSpec, curated: MultiPoly | None = None) -> Fraction | None:
    """Scalar c with recomputed = c * curated after relations, or None if none exists."""
    data = isotropy_data(spec)
    if curated is None:
        curated = data.kernel_gens[0]
    return proportional(data.reduce(recompute_kernel_generator(spec)), data.reduce(curated))


def _flint_product(weights: Sequence[Weight], arity: int):
    # (1 + w) = (d + d*w) / d with d clearing the denominators of w; the
    # integer product is expanded in full by FLINT, the denominators kept aside
    ctx = flint.fmpz_mpoly_ctx.get(tuple(f"x{i}" for i in range(max(arity, 1))), "deglex")
    gens = ctx.gens()
    total = ctx.from_dict({(0,) * ctx.nvars(): 1})
    den = 1
    for w in weights:
        d = lcm(*(c.denominator for c in w))
        factor = ctx.from_dict({(0,) * ctx.nvars(): d})
        for i, c in enumerate(w):
            if c:
                factor += int(c * d) * gens[i]
        total *= factor
        den *= d
    return total, den


@dataclass(frozen=True)
class UntruncatedChern:
    """The full product of (1 + w) over a group's weights, held by FLINT."""

    spec: GroupSpec
    arity: int
    poly: object
    denominator: int

    @property
    def term_count(self) -> int:
        return len(self.poly)

    @property
    def total_degree(self) -> int:
        return self.poly.total_degree() if self.term_count else -1

    def low_degree_part(self, max_deg: int) -> MultiPoly:
        """All terms of degree <= max_deg; read from the tail of the deglex order."""
        terms = {}
        for i in range(self.term_count - 1, -1, -1):
            mono = tuple(self.poly.monomial(i))
            if sum(mono) > max_deg:
                break
            terms[mono[: self.arity]] = Fraction(int(self.poly.coefficient(i)), self.denominator)
        return MultiPoly(self.arity, terms)

    def as_multipoly(self) -> MultiPoly:
        return self.low_degree_part(self.total_degree)


def untruncated_chern(spec: GroupSpec) -> UntruncatedChern:
    """Full product of (1 + w) over the weights, pre-relation, no truncation."""
    if spec.is_complex:
        raise ComplexGroupError(f"{spec.label} has no weight computation")
    data = isotropy_data(spec)
    if len(data.weights) > UNTRUNCATED_LIMIT:
        raise UsageError(f"{spec.label} has {len(data.weights)} weights; limit is {UNTRUNCATED_LIMIT}")
    poly, den = _flint_product(data.weights, data.arity)
    return UntruncatedChern(spec, data.arity, poly, den)


def parity_variant_check(spec: GroupSpec) -> bool:
    """True iff the opposite sign-parity convention gives the same p1 and p2."""
    if spec.family not in PARITY_FAMILIES:
        raise UsageError(f"{spec} has no sign-parity convention")
    return pontryagin_classes(spec, "even") == pontryagin_classes(spec, "odd")


# ---------------------------------------------------------------- verify suite

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"check": self.name, "status": "pass" if self.passed else "fail", "detail": self.detail}


def _kernel_checks() -> list[CheckResult]:
    out = []
    for fam in EXCEPTIONAL:
        spec = GroupSpec(fam)
        data = isotropy_data(spec)
        names = data.reduced_names
        recomputed = data.reduce(recompute_kernel_generator(spec))
        curated = data.reduce(data.kernel_gens[0])
        c = proportional(recomputed, curated)
        detail = f"recomputed {render(recomputed, names)}; curated {render(curated, names)}"
        out.append(CheckResult(f"kernel-generator {spec.label}", c is not None and c != 0, detail))
    return out


def _e6_identity_checks() -> list[CheckResult]:
    data = FUNDAMENTAL["E6a"]
    i1, i2, i3, i4 = (power_sum_invariant(data, k) for k in (1, 2, 3, 4))
    return [
        CheckResult("E6 I1 = 0", not i1, render(i1)),
        CheckResult("E6 I3 = 0", not i3, render(i3)),
        CheckResult("E6 I4 = I2^2/12", i4 == Fraction(1, 12) * (i2 * i2), render(i4)),
    ]


def _truncation_checks() -> list[CheckResult]:
    out = []
    for spec in catalog(6, 4):
        if spec.is_complex:
            continue
        data = isotropy_data(spec)
        if len(data.weights) > UNTRUNCATED_LIMIT:
            continue
        full = untruncated_chern(spec).low_degree_part(4)
        trunc = total_chern(data.weights, data.arity).truncated_total
        out.append(CheckResult(f"truncation {spec.label}", full == trunc))
    return out


def _parity_checks() -> list[CheckResult]:
    return [CheckResult(f"parity {GroupSpec(f).label}", parity_variant_check(GroupSpec(f)))
            for f in PARITY_FAMILIES]


def _half_square_checks() -> list[CheckResult]:
    out = []
    for fam in EXCEPTIONAL:
        spec = GroupSpec(fam)
        data = isotropy_data(spec)
        p1 = pontryagin_classes(spec).p1
        alt = data.reduce(half_square_sum(data.weights, data.arity))
        out.append(CheckResult(f"p1 = half square sum {spec.label}", p1 == alt))
    return out


def run_checks() -> list[CheckResult]:
    """Every oracle check, in a fixed order."""
    return (_kernel_checks() + _e6_identity_checks() + _truncation_checks()
            + _parity_checks() + _half_square_checks())


__all__ = [
    "FundamentalRepData",
    "FUNDAMENTAL",
    "SUBSTITUTIONS",
    "power_sum_invariant",
    "recompute_kernel_generator",
    "kernel_generator_scalar",
    "UntruncatedChern",
    "untruncated_chern",
    "parity_variant_check",
    "CheckResult",
    "run_checks",
]
