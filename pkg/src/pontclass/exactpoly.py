"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial lives in a ring Q[x_1, ..., x_n] of fixed arity n and is stored
as a mapping from exponent tuples to nonzero ``Fraction`` coefficients.  The
stored form is canonical, so two polynomials are equal exactly when their
term dictionaries are equal.

Grading is by polynomial degree.  The variables of interest sit in
cohomological degree 2, so a polynomial of degree d is a class of
cohomological degree 2d.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, lcm
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]
Coefficient = Fraction | int

__all__ = [
    "UsageError",
    "MultiPoly",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_mul_truncated",
    "poly_scale",
    "truncate",
    "substitute_linear",
    "substitute_all",
    "graded_component",
    "monomials_of_degree",
    "coeff_vector",
    "from_coeff_vector",
    "variable",
    "constant",
    "linear_form",
    "power_sum",
    "elementary_symmetric",
    "proportional",
    "render",
    "grlex_key",
]


class UsageError(ValueError):
    """Raised when an operation receives arguments outside its contract."""


def grlex_key(m: Monomial) -> tuple[int, Monomial]:
    """Sort key; larger keys come first in graded-lex order."""
    return (sum(m), m)


class MultiPoly:
    """Immutable polynomial over Q in a ring of fixed arity."""

    __slots__ = ("arity", "terms", "_hash")

    def __init__(self, arity: int, terms: Mapping[Monomial, Coefficient] | None = None):
        if arity < 0:
            raise UsageError(f"arity must be non-negative, got {arity}")
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != arity:
                raise UsageError(f"monomial {mono} does not have length {arity}")
            if any(e < 0 for e in mono):
                raise UsageError(f"negative exponent in {mono}")
            c = Fraction(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        self.arity = arity
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, arity: int, terms: dict[Monomial, Fraction]) -> "MultiPoly":
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj.arity = arity
        obj.terms = terms
        obj._hash = None
        return obj

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self.arity == other.arity and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == constant(self.arity, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"MultiPoly({self.arity}, {render(self)!r})"

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        return poly_add(self, _coerce(other, self.arity))

    __radd__ = __add__

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return poly_sub(self, _coerce(other, self.arity))

    def __rsub__(self, other: "MultiPoly") -> "MultiPoly":
        return poly_sub(_coerce(other, self.arity), self)

    def __neg__(self) -> "MultiPoly":
        return poly_scale(self, -1)

    def __mul__(self, other: "MultiPoly | Coefficient") -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return poly_scale(self, other)
        return poly_mul(self, other)

    def __rmul__(self, other: Coefficient) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return poly_scale(self, other)
        return NotImplemented

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise UsageError("negative powers are not polynomials")
        out = constant(self.arity, 1)
        base = self
        while n:
            if n & 1:
                out = poly_mul(out, base)
            n >>= 1
            if n:
                base = poly_mul(base, base)
        return out

    def degree(self) -> int:
        """Largest polynomial degree of a term; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(m) for m in self.terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return d is None or degs == {d}

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms by increasing degree, graded-lex (variable 1 highest) within a degree."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-e for e in t[0])))


def _coerce(p: "MultiPoly | Coefficient", arity: int) -> MultiPoly:
    if isinstance(p, MultiPoly):
        return p
    if isinstance(p, (int, Fraction)):
        return constant(arity, p)
    raise TypeError(f"cannot combine MultiPoly with {type(p).__name__}")


def _check_arity(a: MultiPoly, b: MultiPoly) -> None:
    if a.arity != b.arity:
        raise UsageError(f"arity mismatch: {a.arity} vs {b.arity}")


def constant(arity: int, c: Coefficient) -> MultiPoly:
    return MultiPoly(arity, {(0,) * arity: c})


def variable(arity: int, i: int) -> MultiPoly:
    """The i-th variable (0-based) of the ring of the given arity."""
    if not 0 <= i < arity:
        raise UsageError(f"variable index {i} out of range for arity {arity}")
    mono = [0] * arity
    mono[i] = 1
    return MultiPoly._raw(arity, {tuple(mono): Fraction(1)})


def linear_form(coords: Sequence[Coefficient]) -> MultiPoly:
    """The homogeneous linear polynomial sum(coords[i] * x_i)."""
    n = len(coords)
    terms = {}
    for i, c in enumerate(coords):
        if c:
            mono = [0] * n
            mono[i] = 1
            terms[tuple(mono)] = Fraction(c)
    return MultiPoly._raw(n, terms)


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    _check_arity(a, b)
    out = dict(a.terms)
    for m, c in b.terms.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return MultiPoly._raw(a.arity, out)


def poly_sub(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return poly_add(a, poly_scale(b, -1))


def poly_scale(a: MultiPoly, c: Coefficient) -> MultiPoly:
    c = Fraction(c)
    if not c:
        return MultiPoly._raw(a.arity, {})
    return MultiPoly._raw(a.arity, {m: v * c for m, v in a.terms.items()})


def _integer_terms(p: MultiPoly) -> tuple[list[tuple[Monomial, int, int]], int]:
    # (monomial, integer coefficient, degree) over a common denominator
    den = lcm(*(c.denominator for c in p.terms.values())) if p.terms else 1
    items = [(m, c.numerator * (den // c.denominator), sum(m)) for m, c in p.terms.items()]
    items.sort(key=lambda t: t[2])
    return items, den


def _multiply(a: MultiPoly, b: MultiPoly, max_deg: int | None) -> MultiPoly:
    _check_arity(a, b)
    n = a.arity
    if not a.terms or not b.terms:
        return MultiPoly._raw(n, {})
    ia, da = _integer_terms(a)
    ib, db = _integer_terms(b)
    # pack each exponent vector into one integer; the field width leaves room
    # for the largest exponent sum, so packed keys add without carries
    top = max(max(m) if m else 0 for m, _, _ in ia) + max(max(m) if m else 0 for m, _, _ in ib)
    width = max(top.bit_length(), 1)
    shifts = [width * i for i in range(n)]

    def pack(m: Monomial) -> int:
        return sum(e << s for e, s in zip(m, shifts))

    pa = [(pack(m), c, g) for m, c, g in ia]
    pb = [(pack(m), c, g) for m, c, g in ib]
    acc: dict[int, int] = {}
    get = acc.get
    for ka, ca, ga in pa:
        if max_deg is None:
            for kb, cb, _ in pb:
                k = ka + kb
                acc[k] = get(k, 0) + ca * cb
        else:
            if ga > max_deg:
                break
            room = max_deg - ga
            for kb, cb, gb in pb:
                if gb > room:
                    break
                k = ka + kb
                acc[k] = get(k, 0) + ca * cb
    den = da * db
    mask = (1 << width) - 1
    out = {}
    for k, v in acc.items():
        if v:
            out[tuple((k >> s) & mask for s in shifts)] = Fraction(v, den)
    return MultiPoly._raw(n, out)


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Full product a*b."""
    return _multiply(a, b, None)


def poly_mul_truncated(a: MultiPoly, b: MultiPoly, max_deg: int) -> MultiPoly:
    """Product a*b with every term of degree above max_deg discarded.

    Terms beyond the threshold are skipped during accumulation and never built.
    """
    if max_deg < 0:
        raise UsageError("max_deg must be non-negative")
    return _multiply(a, b, max_deg)


def truncate(p: MultiPoly, max_deg: int) -> MultiPoly:
    return MultiPoly._raw(p.arity, {m: c for m, c in p.terms.items() if sum(m) <= max_deg})


def graded_component(p: MultiPoly, d: int) -> MultiPoly:
    """The homogeneous part of p of polynomial degree d."""
    if d < 0:
        raise UsageError("degree must be non-negative")
    return MultiPoly._raw(p.arity, {m: c for m, c in p.terms.items() if sum(m) == d})


def substitute_linear(p: MultiPoly, var_index: int, replacement: MultiPoly) -> MultiPoly:
    """Replace x_var_index by a linear form and drop that variable from the ring.

    ``replacement`` lives in the same ring as ``p`` and must not involve the
    eliminated variable.  The result has arity ``p.arity - 1``.
    """
    _check_arity(p, replacement)
    if not 0 <= var_index < p.arity:
        raise UsageError(f"variable index {var_index} out of range")
    if not replacement.is_homogeneous(1) and replacement.terms:
        raise UsageError("replacement must be a homogeneous linear form")
    if any(m[var_index] for m in replacement.terms):
        raise UsageError("replacement involves the eliminated variable")

    powers = [constant(p.arity, 1)]
    out: dict[Monomial, Fraction] = {}
    for mono, c in p.terms.items():
        e = mono[var_index]
        while len(powers) <= e:
            powers.append(poly_mul(powers[-1], replacement))
        rest = list(mono)
        rest[var_index] = 0
        for m2, c2 in powers[e].terms.items():
            key = tuple(x + y for x, y in zip(rest, m2))
            out[key] = out.get(key, 0) + c * c2
    reduced = {m[:var_index] + m[var_index + 1:]: c for m, c in out.items() if c}
    return MultiPoly._raw(p.arity - 1, reduced)


def substitute_all(p: MultiPoly, images: Sequence[MultiPoly]) -> MultiPoly:
    """Ring map sending x_i to images[i]; the result lives in the images' ring."""
    if len(images) != p.arity:
        raise UsageError(f"need {p.arity} images, got {len(images)}")
    if not images:
        return p
    target = images[0].arity
    if any(im.arity != target for im in images):
        raise UsageError("images must share one arity")
    cache: dict[tuple[int, int], MultiPoly] = {}

    def power(i: int, e: int) -> MultiPoly:
        if (i, e) not in cache:
            cache[(i, e)] = images[i] ** e
        return cache[(i, e)]

    out = MultiPoly._raw(target, {})
    for mono, c in p.terms.items():
        term = constant(target, c)
        for i, e in enumerate(mono):
            if e:
                term = poly_mul(term, power(i, e))
        out = poly_add(out, term)
    return out


@lru_cache(maxsize=None)
def _monomials(arity: int, d: int) -> tuple[Monomial, ...]:
    out = []
    for combo in combinations_with_replacement(range(arity), d):
        mono = [0] * arity
        for i in combo:
            mono[i] += 1
        out.append(tuple(mono))
    out.sort(key=grlex_key, reverse=True)
    return tuple(out)


def monomials_of_degree(arity: int, d: int) -> list[Monomial]:
    """All monomials of polynomial degree d, in graded-lex order with x_1 highest."""
    if arity < 1 or d < 0:
        raise UsageError("need arity >= 1 and d >= 0")
    out = list(_monomials(arity, d))
    assert len(out) == comb(d + arity - 1, arity - 1)
    return out


def coeff_vector(p: MultiPoly, d: int) -> list[Fraction]:
    """Coefficients of a degree-d homogeneous p in the monomials_of_degree order."""
    if not p.is_homogeneous(d):
        raise UsageError(f"polynomial is not homogeneous of degree {d}")
    return [p.terms.get(m, Fraction(0)) for m in monomials_of_degree(p.arity, d)]


def from_coeff_vector(vec: Sequence[Coefficient], arity: int, d: int) -> MultiPoly:
    basis = monomials_of_degree(arity, d)
    if len(vec) != len(basis):
        raise UsageError("vector length does not match the monomial basis")
    return MultiPoly(arity, dict(zip(basis, vec)))


def power_sum(forms: Iterable[MultiPoly], k: int, arity: int) -> MultiPoly:
    """Sum of k-th powers of the given polynomials."""
    out = MultiPoly._raw(arity, {})
    for f in forms:
        out = poly_add(out, f ** k)
    return out


def elementary_symmetric(polys: Sequence[MultiPoly], k: int, arity: int) -> MultiPoly:
    """The k-th elementary symmetric polynomial evaluated at the given polynomials."""
    # recurrence e_j <- e_j + p * e_{j-1}, run once per input
    e = [constant(arity, 1)] + [MultiPoly._raw(arity, {}) for _ in range(k)]
    for p in polys:
        for j in range(k, 0, -1):
            e[j] = poly_add(e[j], poly_mul(p, e[j - 1]))
    return e[k]


def proportional(a: MultiPoly, b: MultiPoly) -> Fraction | None:
    """Return c with a == c*b if one exists (c nonzero), else None."""
    _check_arity(a, b)
    if not a.terms and not b.terms:
        return Fraction(1)
    if set(a.terms) != set(b.terms):
        return None
    ratio = None
    for m, c in a.terms.items():
        r = c / b.terms[m]
        if ratio is None:
            ratio = r
        elif r != ratio:
            return None
    return ratio


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def render(p: MultiPoly, names: Sequence[str] | None = None) -> str:
    """Canonical text form, e.g. ``1 - 2*y1^2 + 7/4*y1^4``."""
    if names is None:
        names = [f"x{i + 1}" for i in range(p.arity)]
    if len(names) != p.arity:
        raise UsageError("need one name per variable")
    if not p.terms:
        return "0"
    pieces = []
    for mono, c in p.sorted_terms():
        factors = []
        for name, e in zip(names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        body = "*".join(factors)
        mag = abs(c)
        if not body:
            text = _format_coeff(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{_format_coeff(mag)}*{body}"
        sign = "-" if c < 0 else "+"
        pieces.append((sign, text))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out
