from fractions import Fraction

from hypothesis import settings, strategies as st

from pontclass.exactpoly import MultiPoly

settings.register_profile("default", max_examples=300, deadline=None)
settings.load_profile("default")

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def polys(draw, arity=3, max_deg=4, max_terms=6):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        exps = draw(st.lists(st.integers(0, max_deg), min_size=arity, max_size=arity))
        # cap total degree by trimming from the end
        while sum(exps) > max_deg:
            i = max(range(arity), key=lambda k: exps[k])
            exps[i] -= 1
        terms[tuple(exps)] = terms.get(tuple(exps), Fraction(0)) + draw(small_fractions)
    return MultiPoly(arity, terms)


@st.composite
def linear_polys(draw, arity=3):
    coeffs = draw(st.lists(small_fractions, min_size=arity, max_size=arity))
    return MultiPoly(arity, {tuple(int(i == k) for i in range(arity)): c for k, c in enumerate(coeffs)})


# Polynomial builders for golden values written in the group's own variable names.
from itertools import combinations, permutations  # noqa: E402

from pontclass.exactpoly import variable  # noqa: E402


def _sum(ps, arity):
    return sum(ps, MultiPoly(arity))


def build(data, text, reduce=True):
    """Evaluate ``text`` with the group's variables bound; optionally push through relations."""
    n = data.arity
    ns = {name: variable(n, i) for i, name in enumerate(data.variable_names)}
    ns.update(
        F=Fraction,
        S2=lambda *v: _sum([x * x for x in v], n),
        S4=lambda *v: _sum([x ** 4 for x in v], n),
        X2=lambda *v: _sum([a * b for a, b in combinations(v, 2)], n),
        X22=lambda *v: _sum([a * a * b * b for a, b in combinations(v, 2)], n),
        X31=lambda *v: _sum([a ** 3 * b for a, b in permutations(v, 2)], n),
        X211=lambda *v: _sum(
            [v[i] ** 2 * v[j] * v[k] for i in range(len(v)) for j, k in combinations(range(len(v)), 2) if i not in (j, k)], n
        ),
        X1111=lambda *v: _sum([a * b * c * d for a, b, c, d in combinations(v, 4)], n),
    )
    p = eval(text, {"__builtins__": {}}, ns)
    if not isinstance(p, MultiPoly):
        p = MultiPoly(n, {(0,) * n: p})
    return data.reduce(p) if reduce else p


def ys(data, prefix="y", lo=1, hi=None):
    """Variables named prefix<i> for lo <= i <= hi, as a comma-joined argument string."""
    names = [v for v in data.variable_names if v.startswith(prefix) and v[len(prefix):].isdigit()]
    names = [v for v in names if int(v[len(prefix):]) >= lo and (hi is None or int(v[len(prefix):]) <= hi)]
    return ", ".join(names)
