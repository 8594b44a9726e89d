"""Catalog of real simple Lie groups and the torus data of their isotropy representations.

For each group G with maximal compact K and maximal torus S of K the catalog
records the variables spanning H^2(BS), the weights of the complexified
isotropy representation (as rational vectors in those variables), any linear
relations among the variables, generators of the ideal that the
complexification map kills in degrees <= 8, and a handful of signed
permutations of the variables that preserve the weight multiset.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

from .exactpoly import (
    MultiPoly,
    UsageError,
    constant,
    elementary_symmetric,
    linear_form,
    poly_add,
    substitute_all,
    substitute_linear,
    variable,
)

Weight = tuple[Fraction, ...]
# x_i -> sign * x_{target}; one (target, sign) pair per variable
SignedPerm = tuple[tuple[int, int], ...]

CLASSICAL = ("SL_R", "SU_STAR", "SU_PQ", "SO_PQ", "SO_STAR", "SP_R", "SP_PQ")
EXCEPTIONAL = (
    "E6_6", "E6_2", "E6_m14", "E6_m26",
    "E7_7", "E7_m5", "E7_m25",
    "E8_8", "E8_m24",
    "F4_4", "F4_m20",
    "G2_2",
)
FAMILIES = CLASSICAL + EXCEPTIONAL + ("COMPLEX",)
COMPLEX_BASES = ("SL", "SO", "SP", "E6", "E7", "E8", "F4", "G2")

TWO_PARAM = {"SU_PQ", "SO_PQ", "SP_PQ"}

EXCEPTIONAL_DIM = {
    "E8_8": 128, "E8_m24": 112,
    "E7_7": 70, "E7_m5": 64, "E7_m25": 54,
    "E6_6": 42, "E6_2": 40, "E6_m14": 32, "E6_m26": 26,
    "F4_4": 28, "F4_m20": 16,
    "G2_2": 8,
}

EXCEPTIONAL_LABEL = {
    "E6_6": "E6(6)", "E6_2": "E6(2)", "E6_m14": "E6(-14)", "E6_m26": "E6(-26)",
    "E7_7": "E7(7)", "E7_m5": "E7(-5)", "E7_m25": "E7(-25)",
    "E8_8": "E8(8)", "E8_m24": "E8(-24)",
    "F4_4": "F4(4)", "F4_m20": "F4(-20)",
    "G2_2": "G2(2)",
}

# real dimension of the compact form; equals dim G/K for the complex group
COMPACT_DIM = {"E6": 78, "E7": 133, "E8": 248, "F4": 52, "G2": 14}


@dataclass(frozen=True)
class GroupSpec:
    """One row of the classification: a family plus its integer parameters.

    Complex groups use ``family="COMPLEX"`` with ``base`` naming the complex
    simple group (``"SL"``, ``"SO"``, ``"SP"`` take a rank-type parameter n).
    """

    family: str
    params: tuple[int, ...] = ()
    base: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(int(x) for x in self.params))
        _validate(self)

    @property
    def is_complex(self) -> bool:
        return self.family == "COMPLEX"

    @property
    def token(self) -> str:
        """Descriptor in the CLI grammar, e.g. ``SO:5,3`` or ``E7(-5)``."""
        if self.is_complex:
            if self.base in ("SL", "SO", "SP"):
                return f"{_COMPLEX_TOKEN[self.base]}:{self.params[0]}"
            return f"{self.base}C"
        if self.family in EXCEPTIONAL:
            return EXCEPTIONAL_LABEL[self.family]
        return f"{_CLASSICAL_TOKEN[self.family]}:{','.join(map(str, self.params))}"

    @property
    def label(self) -> str:
        """Conventional group name, e.g. ``SO(5,3)``, ``SU*(6)``, ``SL(3,C)``."""
        if self.is_complex:
            if self.base == "SL":
                return f"SL({self.params[0]},C)"
            if self.base == "SO":
                return f"SO({self.params[0]},C)"
            if self.base == "SP":
                return f"Sp({2 * self.params[0]},C)"
            return f"{self.base}(C)"
        if self.family in EXCEPTIONAL:
            return EXCEPTIONAL_LABEL[self.family]
        p = self.params
        return {
            "SL_R": lambda: f"SL({p[0]},R)",
            "SU_STAR": lambda: f"SU*({2 * p[0]})",
            "SU_PQ": lambda: f"SU({p[0]},{p[1]})",
            "SO_PQ": lambda: f"SO({p[0]},{p[1]})",
            "SO_STAR": lambda: f"SO*({2 * p[0]})",
            "SP_R": lambda: f"Sp({2 * p[0]},R)",
            "SP_PQ": lambda: f"Sp({p[0]},{p[1]})",
        }[self.family]()

    def __str__(self) -> str:
        return self.token


def _validate(spec: GroupSpec) -> None:
    fam, p = spec.family, spec.params
    if fam not in FAMILIES:
        raise UsageError(f"unknown family {fam!r}")
    if fam == "COMPLEX":
        if spec.base not in COMPLEX_BASES:
            raise UsageError(f"unknown complex base {spec.base!r}")
        if spec.base in ("SL", "SO", "SP"):
            if len(p) != 1:
                raise UsageError(f"complex {spec.base} takes one parameter")
            n = p[0]
            if spec.base == "SL" and n < 2:
                raise UsageError("SL(n,C) needs n >= 2")
            if spec.base == "SO" and (n < 3 or n == 4):
                raise UsageError("SO(n,C) needs n = 3 or n >= 5")
            if spec.base == "SP" and n < 1:
                raise UsageError("Sp(2n,C) needs n >= 1")
        elif p:
            raise UsageError(f"complex {spec.base} takes no parameters")
        return
    if spec.base is not None:
        raise UsageError("only complex groups carry a base")
    if fam in EXCEPTIONAL:
        if p:
            raise UsageError(f"{fam} takes no parameters")
        return
    if fam in TWO_PARAM:
        if len(p) != 2:
            raise UsageError(f"{fam} takes two parameters p,q")
        a, b = p
        if not a >= b >= 1:
            raise UsageError(f"{fam} needs p >= q >= 1, got {a},{b}")
        if fam == "SO_PQ" and a + b < 3:
            raise UsageError("SO(p,q) needs p + q >= 3")
        return
    if len(p) != 1:
        raise UsageError(f"{fam} takes one parameter n")
    n = p[0]
    least = 3 if fam == "SO_STAR" else 2
    if n < least:
        raise UsageError(f"{fam} needs n >= {least}, got {n}")


# ---------------------------------------------------------------- grammar

_CLASSICAL_TOKEN = {
    "SL_R": "SL", "SU_STAR": "SU*", "SU_PQ": "SU", "SO_PQ": "SO",
    "SO_STAR": "SO*", "SP_R": "Sp", "SP_PQ": "Sp",
}
_COMPLEX_TOKEN = {"SL": "SLC", "SO": "SOC", "SP": "SpC"}

# token -> (family, base); Sp resolves to SP_R or SP_PQ by parameter count
TOKEN_TABLE: dict[str, tuple[str, str | None]] = {
    "SL": ("SL_R", None),
    "SU*": ("SU_STAR", None),
    "SU": ("SU_PQ", None),
    "SO": ("SO_PQ", None),
    "SO*": ("SO_STAR", None),
    "SP": ("SP_R", None),
    "SLC": ("COMPLEX", "SL"),
    "SOC": ("COMPLEX", "SO"),
    "SPC": ("COMPLEX", "SP"),
    "E6C": ("COMPLEX", "E6"),
    "E7C": ("COMPLEX", "E7"),
    "E8C": ("COMPLEX", "E8"),
    "F4C": ("COMPLEX", "F4"),
    "G2C": ("COMPLEX", "G2"),
}
for _fam, _lab in EXCEPTIONAL_LABEL.items():
    TOKEN_TABLE[_lab.upper()] = (_fam, None)
    TOKEN_TABLE[_fam.upper()] = (_fam, None)
for _fam in CLASSICAL:
    TOKEN_TABLE.setdefault(_fam, (_fam, None))

_TOKEN_RE = re.compile(r"^\s*([A-Za-z0-9_*()\-]+?)\s*(?::\s*([0-9,\s]+))?\s*$")


def parse_group(token: str) -> GroupSpec:
    """Parse a descriptor such as ``SO:5,3``, ``SU*:4``, ``E7(-5)`` or ``SLC:3``."""
    m = _TOKEN_RE.match(token)
    if not m:
        raise UsageError(f"cannot parse group descriptor {token!r}")
    head, tail = m.group(1).upper(), m.group(2)
    if head not in TOKEN_TABLE:
        raise UsageError(f"unknown group token {m.group(1)!r}")
    family, base = TOKEN_TABLE[head]
    params: tuple[int, ...] = ()
    if tail is not None:
        try:
            params = tuple(int(x) for x in tail.split(","))
        except ValueError:
            raise UsageError(f"bad parameters in {token!r}") from None
    if family in ("SP_R", "SP_PQ") and len(params) == 2:
        family = "SP_PQ"
    return GroupSpec(family, params, base)


# ---------------------------------------------------------------- catalog

def catalog(max_pq: int = 10, max_n: int = 6) -> list[GroupSpec]:
    """Every valid group with p+q <= max_pq and n <= max_n, in a fixed order.

    Exceptional groups are always present, once each.
    """
    out: list[GroupSpec] = []
    for fam in CLASSICAL:
        if fam in TWO_PARAM:
            for total in range(2, max_pq + 1):
                for q in range(1, total // 2 + 1):
                    p = total - q
                    if fam == "SO_PQ" and total < 3:
                        continue
                    out.append(GroupSpec(fam, (p, q)))
        else:
            least = 3 if fam == "SO_STAR" else 2
            out.extend(GroupSpec(fam, (n,)) for n in range(least, max_n + 1))
    out.extend(GroupSpec(fam) for fam in EXCEPTIONAL)
    for base in COMPLEX_BASES:
        if base == "SL":
            out.extend(GroupSpec("COMPLEX", (n,), base) for n in range(2, max_n + 1))
        elif base == "SO":
            out.extend(GroupSpec("COMPLEX", (n,), base) for n in range(3, max_n + 1) if n != 4)
        elif base == "SP":
            out.extend(GroupSpec("COMPLEX", (n,), base) for n in range(1, max_n + 1))
        else:
            out.append(GroupSpec("COMPLEX", (), base))
    return out


def dim_symmetric_space(spec: GroupSpec) -> int:
    """dim G - dim K from closed-form family formulas."""
    fam, p = spec.family, spec.params
    if fam == "COMPLEX":
        if spec.base == "SL":
            return p[0] ** 2 - 1
        if spec.base == "SO":
            return p[0] * (p[0] - 1) // 2
        if spec.base == "SP":
            return p[0] * (2 * p[0] + 1)
        return COMPACT_DIM[spec.base]
    if fam in EXCEPTIONAL:
        return EXCEPTIONAL_DIM[fam]
    if fam == "SL_R":
        n = p[0]
        return n * (n + 1) // 2 - 1
    if fam == "SU_PQ":
        return 2 * p[0] * p[1]
    if fam == "SO_PQ":
        return p[0] * p[1]
    if fam == "SP_R":
        return p[0] * (p[0] + 1)
    if fam == "SP_PQ":
        return 4 * p[0] * p[1]
    if fam == "SO_STAR":
        return p[0] * (p[0] - 1)
    if fam == "SU_STAR":
        return (p[0] - 1) * (2 * p[0] + 1)
    raise UsageError(f"no dimension formula for {spec}")


# ---------------------------------------------------------------- isotropy data

@dataclass(frozen=True)
class IsotropyData:
    """Torus-level description of the isotropy representation of one group.

    ``weights`` lists the nonzero weights only; zero weights are counted in
    ``zero_weight_count``.  ``relations`` are applied in order, each one
    eliminating ``index`` (counted in the ring current at that step) by a
    linear replacement written in that same ring.  Kernel generators are
    written before elimination.
    """

    spec: GroupSpec
    variable_names: tuple[str, ...]
    weights: tuple[Weight, ...]
    zero_weight_count: int
    relations: tuple[tuple[int, MultiPoly], ...]
    kernel_gens: tuple[MultiPoly, ...]
    symmetries: tuple[SignedPerm, ...]
    dim_p: int
    _reduced_names: tuple[str, ...] = field(default=(), repr=False)

    @property
    def arity(self) -> int:
        return len(self.variable_names)

    @property
    def reduced_names(self) -> tuple[str, ...]:
        """Variable names of the ring left after all relations are applied."""
        return self._reduced_names

    @property
    def reduced_arity(self) -> int:
        return len(self._reduced_names)

    def weight_forms(self) -> list[MultiPoly]:
        return [linear_form(w) for w in self.weights]

    def reduce(self, p: MultiPoly) -> MultiPoly:
        """Push a polynomial in the original ring through the relations."""
        for idx, rep in self.relations:
            p = substitute_linear(p, idx, rep)
        return p

    def reduced_kernel_gens(self) -> list[MultiPoly]:
        gens = [self.reduce(g) for g in self.kernel_gens]
        return [g for g in gens if g]


def apply_symmetry(p: MultiPoly, sym: SignedPerm) -> MultiPoly:
    """Apply x_i -> sign * x_target to a polynomial."""
    images = [sign * variable(p.arity, tgt) for tgt, sign in sym]
    return substitute_all(p, images)


def apply_symmetry_to_weight(w: Weight, sym: SignedPerm) -> Weight:
    out = [Fraction(0)] * len(w)
    for i, (tgt, sign) in enumerate(sym):
        out[tgt] += sign * w[i]
    return tuple(out)


def _vec(n: int, entries: dict[int, Fraction | int]) -> Weight:
    v = [Fraction(0)] * n
    for i, c in entries.items():
        v[i] += Fraction(c)
    return tuple(v)


def _neg(w: Weight) -> Weight:
    return tuple(-c for c in w)


def _signs(k: int) -> Iterator[tuple[int, ...]]:
    return product((1, -1), repeat=k)


def _odd(signs: Sequence[int]) -> bool:
    return sum(1 for s in signs if s < 0) % 2 == 1


def _split_zeros(ws: list[Weight]) -> tuple[list[Weight], int]:
    nonzero = [w for w in ws if any(w)]
    return nonzero, len(ws) - len(nonzero)


def _sum_of_squares(n: int, idx: Sequence[int], coeff: Fraction | int = 1) -> MultiPoly:
    out = MultiPoly(n)
    for i in idx:
        out = poly_add(out, coeff * variable(n, i) ** 2)
    return out


def _cross_sum(n: int, idx: Sequence[int]) -> MultiPoly:
    out = MultiPoly(n)
    for i, j in combinations(idx, 2):
        out = poly_add(out, variable(n, i) * variable(n, j))
    return out


def _squares_sym(n: int, idx: Sequence[int], ks: Sequence[int]) -> list[MultiPoly]:
    squares = [variable(n, i) ** 2 for i in idx]
    return [elementary_symmetric(squares, k, n) for k in ks]


def _monomial(n: int, idx: Sequence[int]) -> MultiPoly:
    out = constant(n, 1)
    for i in idx:
        out = out * variable(n, i)
    return out


def _identity(n: int) -> list[tuple[int, int]]:
    return [(i, 1) for i in range(n)]


def _transpositions(n: int, idx: Sequence[int]) -> list[SignedPerm]:
    out = []
    for a, b in zip(idx, idx[1:]):
        s = _identity(n)
        s[a], s[b] = (b, 1), (a, 1)
        out.append(tuple(s))
    return out


def _flips(n: int, idx: Sequence[int]) -> SignedPerm:
    s = _identity(n)
    for i in idx:
        s[i] = (i, -1)
    return tuple(s)


def _names(prefix: str, count: int, start: int = 1) -> list[str]:
    return [f"{prefix}{i}" for i in range(start, start + count)]


def orthogonal_weights(rank: int, odd: bool, offset: int, n: int) -> list[Weight]:
    """Weights of the standard representation of SO(2*rank + odd) placed at offset."""
    out = []
    for i in range(rank):
        out.append(_vec(n, {offset + i: 1}))
        out.append(_vec(n, {offset + i: -1}))
    if odd:
        out.append(_vec(n, {}))
    return out


# Builders return (names, weights incl. zeros, relations, kernel gens, symmetries).
# ``parity`` selects the sign-parity convention of spin-type weight families.

def _build_sl_r(n_param: int, parity: str):
    k = n_param // 2
    n = k
    std = orthogonal_weights(k, n_param % 2 == 1, 0, n)
    sym2 = [tuple(a + b for a, b in zip(std[i], std[j]))
            for i in range(len(std)) for j in range(i, len(std))]
    zero = next(i for i, w in enumerate(sym2) if not any(w))
    del sym2[zero]
    gens = _squares_sym(n, range(k), (1, 2))
    syms = _transpositions(n, range(k)) + [_flips(n, [0])]
    return _names("y", k), sym2, [], gens, syms


def _build_su_star(n_param: int, parity: str):
    n = n_param
    ws: list[Weight] = []
    for i, j in combinations(range(n), 2):
        for si, sj in _signs(2):
            ws.append(_vec(n, {i: si, j: sj}))
    ws.extend([_vec(n, {})] * (n - 1))
    gens = _squares_sym(n, range(n), (1, 2))
    syms = _transpositions(n, range(n)) + [_flips(n, [0])]
    return _names("y", n), ws, [], gens, syms


def _build_su_pq(p: int, q: int, parity: str):
    n = p + q
    ws: list[Weight] = []
    for i in range(p):
        for j in range(q):
            w = _vec(n, {i: 1, p + j: -1})
            ws += [w, _neg(w)]
    # z_q := -(y_1 + ... + y_p + z_1 + ... + z_{q-1})
    relation = (n - 1, linear_form([-1] * (n - 1) + [0]))
    everything = [variable(n, i) for i in range(n)]
    gens = [elementary_symmetric(everything, k, n) for k in (2, 3, 4)]
    syms = _transpositions(n, range(p)) + _transpositions(n, range(p, n))
    return _names("y", p) + _names("z", q), ws, [relation], gens, syms


def _build_so_pq(p: int, q: int, parity: str):
    a, b = p // 2, q // 2
    n = a + b
    vp = orthogonal_weights(a, p % 2 == 1, 0, n)
    vq = orthogonal_weights(b, q % 2 == 1, a, n)
    ws = [tuple(x + y for x, y in zip(u, v)) for u in vp for v in vq]
    ys, zs = list(range(a)), list(range(a, n))
    gens = _squares_sym(n, range(n), (1, 2))
    if p % 2 == 0 and q % 2 == 0 and a + b <= 4:
        gens.append(_monomial(n, range(n)))
    syms = _transpositions(n, ys) + _transpositions(n, zs)
    for block, odd in ((ys, p % 2 == 1), (zs, q % 2 == 1)):
        if odd and block:
            syms.append(_flips(n, block[:1]))
        elif len(block) >= 2:
            syms.append(_flips(n, block[:2]))
    return _names("y", a) + _names("z", b), ws, [], gens, syms


def _build_so_star(n_param: int, parity: str):
    n = n_param
    ws: list[Weight] = []
    for i, j in combinations(range(n), 2):
        w = _vec(n, {i: 1, j: 1})
        ws += [w, _neg(w)]
    gens = _squares_sym(n, range(n), (1, 2))
    if n <= 4:
        gens.append(_monomial(n, range(n)))
    syms = _transpositions(n, range(n))
    return _names("y", n), ws, [], gens, syms


def _build_sp_r(n_param: int, parity: str):
    n = n_param
    ws: list[Weight] = []
    for i in range(n):
        for j in range(i, n):
            # L_i + L_j, which is 2 L_i on the diagonal
            w = _vec(n, {i: 2} if i == j else {i: 1, j: 1})
            ws += [w, _neg(w)]
    gens = _squares_sym(n, range(n), (1, 2))
    syms = _transpositions(n, range(n)) + [_flips(n, range(n))]
    return _names("y", n), ws, [], gens, syms


def _build_sp_pq(p: int, q: int, parity: str):
    n = p + q
    ws: list[Weight] = []
    for i in range(p):
        for j in range(q):
            for si, sj in _signs(2):
                ws.append(_vec(n, {i: si, p + j: sj}))
    gens = _squares_sym(n, range(n), (1, 2))
    syms = (_transpositions(n, range(p)) + _transpositions(n, range(p, n))
            + [_flips(n, [0]), _flips(n, [p])])
    return _names("y", p) + _names("z", q), ws, [], gens, syms


def _keep(signs: Sequence[int], parity: str) -> bool:
    return _odd(signs) == (parity == "odd")


HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


def _build_e8_8(parity: str):
    n = 8
    ws = [tuple(HALF * s for s in eps) for eps in _signs(8) if _keep(eps, parity)]
    gens = [_sum_of_squares(n, range(8))]
    syms = _transpositions(n, range(8)) + [_flips(n, [0, 1])]
    return _names("y", 8), ws, [], gens, syms


def _build_e8_m24(parity: str):
    n = 8
    ws: list[Weight] = []
    for i in range(6):
        for s, s7, s8 in _signs(3):
            ws.append(_vec(n, {i: s, 6: HALF * s7, 7: HALF * s8}))
    for eps in _signs(6):
        if not _keep(eps, parity):
            continue
        for s8 in (1, -1):
            ws.append(_vec(n, {**{i: HALF * e for i, e in enumerate(eps)}, 7: HALF * s8}))
    gens = [_sum_of_squares(n, range(6), 30) + _sum_of_squares(n, [6, 7], 15)]
    syms = _transpositions(n, range(6)) + [_flips(n, [0, 1]), _flips(n, [6]), _flips(n, [7])]
    return _names("y", 8), ws, [], gens, syms


def _build_e7_7(parity: str):
    n = 8
    ws = [_vec(n, {i: 1 for i in idx}) for idx in combinations(range(8), 4)]
    relation = (7, linear_form([-1] * 7 + [0]))
    gens = [_sum_of_squares(n, range(8), 7) + 2 * _cross_sum(n, range(8))]
    syms = _transpositions(n, range(8)) + [_flips(n, range(8))]
    return _names("y", 8), ws, [relation], gens, syms


def _build_e7_m5(parity: str):
    n = 7
    ws: list[Weight] = []
    for eps in _signs(6):
        if not _keep(eps, parity):
            continue
        for s7 in (1, -1):
            ws.append(_vec(n, {**{i: HALF * e for i, e in enumerate(eps)}, 6: HALF * s7}))
    gens = [_sum_of_squares(n, range(6)) + _sum_of_squares(n, [6], 2)]
    syms = _transpositions(n, range(6)) + [_flips(n, [0, 1]), _flips(n, [6])]
    return _names("y", 7), ws, [], gens, syms


def _build_e7_m25(parity: str):
    n = 7
    ws: list[Weight] = []
    w = _vec(n, {5: 2 * THIRD, 6: THIRD})
    ws += [w, _neg(w)]
    for i in range(5):
        for s, t in _signs(2):
            ws.append(_vec(n, {i: s, 5: t * THIRD, 6: -t * THIRD}))
    for eps in _signs(6):
        if not _keep(eps, parity):
            continue
        entries = {i: HALF * e for i, e in enumerate(eps[:5])}
        entries[5] = HALF * eps[5] * -THIRD
        entries[6] = HALF * eps[5] * -2 * THIRD
        ws.append(_vec(n, entries))
    gens = [_sum_of_squares(n, range(5), 6) + _sum_of_squares(n, [5], 2)
            + _sum_of_squares(n, [6])]
    syms = _transpositions(n, range(5)) + [_flips(n, [0, 1])]
    return _names("y", 7), ws, [], gens, syms


def _build_e6_6(parity: str):
    n = 4
    ws: list[Weight] = []
    for i, j in combinations(range(4), 2):
        for si, sj in _signs(2):
            ws.append(_vec(n, {i: si, j: sj}))
    ws.extend(_vec(n, dict(enumerate(eps))) for eps in _signs(4))
    ws.extend([_vec(n, {})] * 2)
    gens = [_sum_of_squares(n, range(4))]
    syms = _transpositions(n, range(4)) + [_flips(n, [0])]
    return _names("y", 4), ws, [], gens, syms


def _build_e6_2(parity: str):
    n = 7
    ws: list[Weight] = []
    for idx in combinations(range(6), 3):
        for s7 in (1, -1):
            ws.append(_vec(n, {**{i: 1 for i in idx}, 6: s7}))
    # y_6 := -(y_1 + ... + y_5)
    relation = (5, linear_form([-1] * 5 + [0, 0]))
    gens = [_sum_of_squares(n, range(6), 5) + _sum_of_squares(n, [6], 12)
            - 2 * _cross_sum(n, range(6))]
    syms = _transpositions(n, range(6)) + [_flips(n, [6])]
    return _names("y", 7), ws, [relation], gens, syms


def _build_e6_m14(parity: str):
    n = 6
    ws: list[Weight] = []
    for eps in _signs(6):
        if not _keep(eps, parity):
            continue
        entries = {i: HALF * e for i, e in enumerate(eps[:5])}
        entries[5] = 3 * eps[5]
        ws.append(_vec(n, entries))
    # recomputed image of I_2; see oracle.recompute_kernel_generator
    gens = [_sum_of_squares(n, range(5), 6) + _sum_of_squares(n, [5], 2)]
    syms = _transpositions(n, range(5)) + [_flips(n, [0, 1]), _flips(n, [0, 5])]
    return _names("y", 6), ws, [], gens, syms


def _build_e6_m26(parity: str):
    n = 4
    ws: list[Weight] = []
    for i in range(4):
        ws += [_vec(n, {i: 1}), _vec(n, {i: -1})]
    ws.extend(_vec(n, {i: HALF * e for i, e in enumerate(eps)}) for eps in _signs(4))
    ws.extend([_vec(n, {})] * 2)
    gens = [_sum_of_squares(n, range(4), 3)]
    syms = _transpositions(n, range(4)) + [_flips(n, [0])]
    return _names("y", 4), ws, [], gens, syms


def _build_f4_4(parity: str):
    n = 4
    ws: list[Weight] = []
    for i in (1, 2, 3):
        for s1, si in _signs(2):
            ws.append(_vec(n, {0: s1, i: si}))
    ws.extend(_vec(n, dict(enumerate(eps))) for eps in _signs(4))
    gens = [_sum_of_squares(n, range(4))]
    syms = _transpositions(n, [1, 2, 3]) + [_flips(n, [0]), _flips(n, [1])]
    return _names("y", 4), ws, [], gens, syms


def _build_f4_m20(parity: str):
    # the spin weights carry no sign-parity constraint, so both conventions agree
    n = 4
    ws = [_vec(n, {i: HALF * e for i, e in enumerate(eps)}) for eps in _signs(4)]
    gens = [_sum_of_squares(n, range(4), 3)]
    syms = _transpositions(n, range(4)) + [_flips(n, [0])]
    return _names("y", 4), ws, [], gens, syms


def _build_g2_2(parity: str):
    n = 2
    ws: list[Weight] = []
    for c in (3, 1, -1, -3):
        w = _vec(n, {0: c, 1: 1})
        ws += [w, _neg(w)]
    gens = [_sum_of_squares(n, [0], 3) + _sum_of_squares(n, [1])]
    syms = [_flips(n, [0]), _flips(n, [1])]
    return _names("y", 2), ws, [], gens, syms


_EXCEPTIONAL_BUILDERS = {
    "E8_8": _build_e8_8, "E8_m24": _build_e8_m24,
    "E7_7": _build_e7_7, "E7_m5": _build_e7_m5, "E7_m25": _build_e7_m25,
    "E6_6": _build_e6_6, "E6_2": _build_e6_2, "E6_m14": _build_e6_m14,
    "E6_m26": _build_e6_m26,
    "F4_4": _build_f4_4, "F4_m20": _build_f4_m20,
    "G2_2": _build_g2_2,
}

_CLASSICAL_BUILDERS = {
    "SL_R": _build_sl_r, "SU_STAR": _build_su_star, "SU_PQ": _build_su_pq,
    "SO_PQ": _build_so_pq, "SO_STAR": _build_so_star, "SP_R": _build_sp_r,
    "SP_PQ": _build_sp_pq,
}

PARITY_FAMILIES = ("E8_8", "E8_m24", "E6_m14", "E7_m5", "F4_m20")


def isotropy_data(spec: GroupSpec, parity: str = "even") -> IsotropyData:
    """Weights, relations, kernel generators and symmetries for one group.

    ``parity`` switches spin-type sign constraints between the stored
    ("even") convention and its alternative ("odd").  Complex groups return
    an empty marker; their verdict never needs weights.
    """
    if parity not in ("even", "odd"):
        raise UsageError("parity must be 'even' or 'odd'")
    return _isotropy_data(spec, parity)


@lru_cache(maxsize=None)
def _isotropy_data(spec: GroupSpec, parity: str) -> IsotropyData:
    dim = dim_symmetric_space(spec)
    if spec.is_complex:
        return IsotropyData(spec, (), (), 0, (), (), (), dim, ())
    if spec.family in EXCEPTIONAL:
        names, ws, rels, gens, syms = _EXCEPTIONAL_BUILDERS[spec.family](parity)
    else:
        names, ws, rels, gens, syms = _CLASSICAL_BUILDERS[spec.family](*spec.params, parity)
    nonzero, zeros = _split_zeros(ws)
    reduced = list(names)
    for idx, _ in rels:
        del reduced[idx]
    return IsotropyData(
        spec=spec,
        variable_names=tuple(names),
        weights=tuple(nonzero),
        zero_weight_count=zeros,
        relations=tuple(rels),
        kernel_gens=tuple(g for g in gens if g),
        symmetries=tuple(syms),
        dim_p=dim,
        _reduced_names=tuple(reduced),
    )
