"""Membership of a homogeneous polynomial in a homogeneous ideal, one degree at a time.

The degree-d piece of the ideal generated by g_1, ..., g_r is spanned by the
products m * g_j with m a monomial of degree d - deg g_j.  Deciding whether a
target lies in that span is a linear system over Q, solved here by exact
elimination on sparse column vectors.  A positive answer comes with a
certificate: coefficients c_k and pairs (j_k, m_k) with target = sum c_k m_k g_{j_k}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactpoly import Monomial, MultiPoly, UsageError, monomials_of_degree, poly_add, poly_mul

CertificateTerm = tuple[int, Monomial, Fraction]


@dataclass(frozen=True)
class MembershipProblem:
    generators: tuple[MultiPoly, ...]
    target: MultiPoly
    degree: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        if not self.target.is_homogeneous(self.degree):
            raise UsageError(f"target is not homogeneous of degree {self.degree}")
        for g in self.generators:
            if not g or not g.is_homogeneous():
                raise UsageError("generators must be nonzero and homogeneous")
            if g.arity != self.target.arity:
                raise UsageError("generator and target live in different rings")


@dataclass(frozen=True)
class MembershipResult:
    in_ideal: bool
    certificate: tuple[CertificateTerm, ...] = field(default=())

    def recombine(self, generators: Sequence[MultiPoly], arity: int) -> MultiPoly:
        """Evaluate the certificate back into a polynomial."""
        out = MultiPoly(arity)
        for j, mono, c in self.certificate:
            out = poly_add(out, poly_mul(MultiPoly(arity, {mono: c}), generators[j]))
        return out


def _columns(gens: Sequence[MultiPoly], degree: int, arity: int) -> list[tuple[int, Monomial]]:
    cols = []
    for j, g in enumerate(gens):
        d = degree - g.degree()
        if d < 0:
            continue
        cols.extend((j, m) for m in monomials_of_degree(arity, d))
    return cols


def _shifted(g: MultiPoly, mono: Monomial) -> dict[Monomial, Fraction]:
    return {tuple(a + b for a, b in zip(m, mono)): c for m, c in g.terms.items()}


def degree_span_matrix(gens: Sequence[MultiPoly], degree: int, arity: int) -> list[list[Fraction]]:
    """Dense matrix whose columns are the coefficient vectors of m * g.

    Rows follow ``monomials_of_degree(arity, degree)``; columns run over the
    generators in order and, for each, over multiplier monomials in graded-lex
    order.
    """
    rows = monomials_of_degree(arity, degree)
    index = {m: i for i, m in enumerate(rows)}
    cols = _columns(gens, degree, arity)
    mat = [[Fraction(0)] * len(cols) for _ in rows]
    for c, (j, mono) in enumerate(cols):
        for m, v in _shifted(gens[j], mono).items():
            mat[index[m]][c] = v
    return mat


def _height(x: Fraction) -> int:
    return x.numerator.bit_length() + x.denominator.bit_length()


class _Echelon:
    """Incremental sparse echelon basis that remembers how each vector was built."""

    def __init__(self) -> None:
        # pivot monomial -> (vector with 1 at pivot, combination of original columns)
        self.rows: dict[Monomial, tuple[dict[Monomial, Fraction], dict[int, Fraction]]] = {}

    def reduce(self, vec: dict[Monomial, Fraction], combo: dict[int, Fraction]) -> None:
        # eliminate every pivot present in vec; pivots never reappear once cleared
        for piv in [m for m in vec if m in self.rows]:
            c = vec.get(piv)
            if not c:
                continue
            bvec, bcombo = self.rows[piv]
            for m, v in bvec.items():
                s = vec.get(m, 0) - c * v
                if s:
                    vec[m] = s
                else:
                    vec.pop(m, None)
            for k, v in bcombo.items():
                s = combo.get(k, 0) - c * v
                if s:
                    combo[k] = s
                else:
                    combo.pop(k, None)

    def insert(self, vec: dict[Monomial, Fraction], combo: dict[int, Fraction]) -> bool:
        self.reduce(vec, combo)
        if not vec:
            return False
        # pivot on the entry with the smallest height; back-reduce to keep rows independent
        piv = min(vec, key=lambda m: (_height(vec[m]), m))
        c = vec[piv]
        vec = {m: v / c for m, v in vec.items()}
        combo = {k: v / c for k, v in combo.items()}
        for other, (ovec, ocombo) in self.rows.items():
            f = ovec.get(piv)
            if f:
                for m, v in vec.items():
                    s = ovec.get(m, 0) - f * v
                    if s:
                        ovec[m] = s
                    else:
                        ovec.pop(m, None)
                for k, v in combo.items():
                    s = ocombo.get(k, 0) - f * v
                    if s:
                        ocombo[k] = s
                    else:
                        ocombo.pop(k, None)
        self.rows[piv] = (vec, combo)
        return True


def is_in_ideal(problem: MembershipProblem, reverse_multipliers: bool = False) -> MembershipResult:
    """Decide whether problem.target lies in the degree piece of the ideal.

    Membership is tested in the full polynomial ring.  With invariant
    generators this agrees with membership in the invariant subring, since
    averaging a certificate over the finite symmetry group gives an
    invariant one.
    """
    target, degree = problem.target, problem.degree
    if not target:
        return MembershipResult(True, ())
    gens = problem.generators
    cols = _columns(gens, degree, target.arity)
    if reverse_multipliers:
        cols = cols[::-1]
    basis = _Echelon()
    for c, (j, mono) in enumerate(cols):
        basis.insert(_shifted(gens[j], mono), {c: Fraction(1)})
    residue = dict(target.terms)
    combo: dict[int, Fraction] = {}
    basis.reduce(residue, combo)
    if residue:
        return MembershipResult(False, ())
    # residue = target - sum(combo) * columns = 0
    cert = tuple((cols[c][0], cols[c][1], -v) for c, v in sorted(combo.items()) if v)
    return MembershipResult(True, cert)


def residue(problem: MembershipProblem) -> MultiPoly:
    """Normal form of the target modulo the degree piece (depends on pivot choices)."""
    target, degree = problem.target, problem.degree
    cols = _columns(problem.generators, degree, target.arity)
    basis = _Echelon()
    for c, (j, mono) in enumerate(cols):
        basis.insert(_shifted(problem.generators[j], mono), {c: Fraction(1)})
    vec = dict(target.terms)
    basis.reduce(vec, {})
    return MultiPoly(target.arity, vec)
