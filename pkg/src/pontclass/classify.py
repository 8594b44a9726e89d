"""Vanishing verdicts for p1 and p2 of compact locally symmetric manifolds.

For a cocompact lattice in G, p_i of the manifold vanishes exactly when p_i of
the isotropy representation lies in the ideal generated by the positive-degree
classes coming from the complexification of G.  Complex groups are handled by
rule: every such class already vanishes.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .charclass import pontryagin_classes
from .exactpoly import MultiPoly, UsageError, render
from .groupdata import GroupSpec, catalog, dim_symmetric_space, isotropy_data
from .idealtest import MembershipProblem, MembershipResult, is_in_ideal

COMPLEX_RULE = "COMPLEX_RULE"
IDEAL_TEST = "IDEAL_TEST"


def vanishing_list_member(spec: GroupSpec) -> bool:
    """Whether G is on the list of groups whose p_i all vanish.

    The list: complex groups, SL(n,R), SU*(2n), SO(p,1), SO(2,2), SO(3,3),
    E6(-26), together with the isogenous SU(1,1) and Sp(1,1).
    """
    fam, p = spec.family, spec.params
    if spec.is_complex or fam in ("SL_R", "SU_STAR", "E6_m26"):
        return True
    if fam == "SO_PQ":
        return p[1] == 1 or p in ((2, 2), (3, 3))
    if fam in ("SU_PQ", "SP_PQ"):
        return p == (1, 1)
    return False


@dataclass(frozen=True)
class VanishingReport:
    spec: GroupSpec
    dim_M: int
    p1_poly: MultiPoly | None
    p2_poly: MultiPoly | None
    p1_vanishes: bool
    p2_vanishes: bool
    on_vanishing_list: bool
    route: str
    certificates: tuple[MembershipResult, MembershipResult] | None = None
    variable_names: tuple[str, ...] = ()
    kernel_generators: tuple[MultiPoly, ...] = ()

    @property
    def all_vanish(self) -> bool:
        return self.p1_vanishes and self.p2_vanishes

    @property
    def agrees_with_list(self) -> bool:
        return self.all_vanish == self.on_vanishing_list

    def to_dict(self, certificates: bool = False) -> dict:
        names = self.variable_names

        def poly(p: MultiPoly | None) -> str | None:
            return None if p is None else render(p, names)

        out = {
            "group": self.spec.token,
            "name": self.spec.label,
            "params": list(self.spec.params),
            "dim_M": self.dim_M,
            "variables": list(names),
            "p1": {"polynomial": poly(self.p1_poly), "vanishes": self.p1_vanishes},
            "p2": {"polynomial": poly(self.p2_poly), "vanishes": self.p2_vanishes},
            "kernel_generators": [render(g, names) for g in self.kernel_generators],
            "route": self.route,
            "on_vanishing_list": self.on_vanishing_list,
            "agrees_with_list": self.agrees_with_list,
        }
        if certificates:
            out["certificates"] = None
            if self.certificates is not None:
                out["certificates"] = {
                    key: {
                        "in_ideal": res.in_ideal,
                        "terms": [
                            {"generator": j, "multiplier": render(MultiPoly(len(names), {m: 1}), names),
                             "coefficient": str(c)}
                            for j, m, c in res.certificate
                        ],
                    }
                    for key, res in zip(("p1", "p2"), self.certificates)
                }
        return out


@dataclass(frozen=True)
class ProductReport:
    factors: tuple[VanishingReport, ...]

    @property
    def all_vanish(self) -> bool:
        return all(f.all_vanish for f in self.factors)


def classify(spec: GroupSpec) -> VanishingReport:
    """Decide whether p1 and p2 of a compact quotient of G/K vanish."""
    member = vanishing_list_member(spec)
    dim = dim_symmetric_space(spec)
    if spec.is_complex:
        return VanishingReport(spec, dim, None, None, True, True, member, COMPLEX_RULE)
    data = isotropy_data(spec)
    pair = pontryagin_classes(spec)
    gens = tuple(data.reduced_kernel_gens())
    results = []
    for target, degree in ((pair.p1, 2), (pair.p2, 4)):
        usable = tuple(g for g in gens if g.degree() <= degree)
        results.append(is_in_ideal(MembershipProblem(usable, target, degree)))
    return VanishingReport(
        spec=spec,
        dim_M=dim,
        p1_poly=pair.p1,
        p2_poly=pair.p2,
        p1_vanishes=results[0].in_ideal,
        p2_vanishes=results[1].in_ideal,
        on_vanishing_list=member,
        route=IDEAL_TEST,
        certificates=(results[0], results[1]),
        variable_names=data.reduced_names,
        kernel_generators=gens,
    )


def classify_product(specs: Sequence[GroupSpec]) -> ProductReport:
    """Classify a semisimple group factor by factor."""
    if not specs:
        raise UsageError("a product needs at least one factor")
    return ProductReport(tuple(classify(s) for s in specs))


def classify_many(specs: Sequence[GroupSpec], parallel: int = 1) -> list[VanishingReport]:
    """Classify a list of groups, optionally across processes; order is preserved."""
    if parallel <= 1 or len(specs) < 2:
        return [classify(s) for s in specs]
    with ProcessPoolExecutor(max_workers=parallel) as pool:
        return list(pool.map(classify, specs, chunksize=4))


def theorem_table(max_pq: int = 10, max_n: int = 6, parallel: int = 1) -> list[VanishingReport]:
    """Reports for every catalog group within the bounds, in catalog order."""
    return classify_many(catalog(max_pq, max_n), parallel)
