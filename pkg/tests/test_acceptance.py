"""Acceptance criteria 1-6, one printed PASS/FAIL line each.

Run under pytest, or directly with ``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from collections import Counter
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import build, ys  # noqa: E402
from pontclass.charclass import group_chern, half_square_sum, pontryagin_classes  # noqa: E402
from pontclass.classify import classify, theorem_table  # noqa: E402
from pontclass.exactpoly import (  # noqa: E402
    MultiPoly,
    linear_form,
    poly_mul,
    poly_mul_truncated,
    poly_scale,
    proportional,
    substitute_linear,
    truncate,
    variable,
)
from pontclass.groupdata import (  # noqa: E402
    EXCEPTIONAL,
    PARITY_FAMILIES,
    GroupSpec,
    apply_symmetry,
    catalog,
    dim_symmetric_space,
    isotropy_data,
    parse_group,
)
from pontclass.idealtest import MembershipProblem, is_in_ideal  # noqa: E402
from pontclass.oracle import (  # noqa: E402
    UNTRUNCATED_LIMIT,
    parity_variant_check,
    recompute_kernel_generator,
    untruncated_chern,
)


def report(number, failures, note=""):
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {number}: {status}"
    if note:
        line += f"  ({note})"
    if failures:
        line += "  failing: " + "; ".join(failures)
    return line


def emit(capsys, line):
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)


def member(gens, target, degree):
    usable = tuple(g for g in gens if g.degree() <= degree)
    return is_in_ideal(MembershipProblem(usable, target, degree))


# ---------------------------------------------------------------- 1

def criterion_1():
    start = time.perf_counter()
    reports = theorem_table(10, 6, parallel=1)
    elapsed = time.perf_counter() - start
    failures = [r.spec.token for r in reports if not r.agrees_with_list]
    fams = Counter("complex" if r.spec.is_complex else r.spec.family for r in reports)
    if any(fams[f] != 1 for f in EXCEPTIONAL):
        failures.append("exceptional coverage")
    if len({r.spec.base for r in reports if r.spec.is_complex}) != 8:
        failures.append("complex coverage")
    if elapsed >= 60:
        failures.append(f"runtime {elapsed:.1f}s")
    return failures, f"{len(reports)} groups in {elapsed:.1f}s"


# ---------------------------------------------------------------- 2

def _golden(token, text, which="p1"):
    d = isotropy_data(parse_group(token))
    args = {f"v{k}": ys(d, hi=k) for k in range(1, 9)}
    args.update(y=ys(d, "y"), z=ys(d, "z"))
    want = build(d, text.format(**args))
    got = getattr(pontryagin_classes(d.spec), which)
    return got == want


def criterion_2():
    checks = {}
    for p, q in [(2, 1), (2, 2), (3, 2)]:
        d = isotropy_data(parse_group(f"SU:{p},{q}"))
        y = ys(d, "y").split(", ")
        z = ys(d, "z").split(", ")
        cross = " + ".join(f"{a}*{b}" for a in y for b in z)
        text = f"{q}*S2({', '.join(y)}) + {p}*S2({', '.join(z)}) - 2*({cross})"
        checks[f"SU({p},{q}) p1"] = pontryagin_classes(d.spec).p1 == build(d, text)
    for n in (2, 3):
        checks[f"Sp({2 * n},R) p1"] = _golden(f"Sp:{n}", f"{n + 3}*S2({{v8}}) + 2*X2({{v8}})")
    # both even, even/odd, odd/even, both odd
    for p, q in [(4, 2), (4, 3), (5, 2), (5, 3)]:
        checks[f"SO({p},{q}) p1"] = _golden(f"SO:{p},{q}", f"{q}*S2({{y}}) + {p}*S2({{z}})")
    checks["E8(8) p1"] = _golden("E8(8)", "16*S2({v8})")
    checks["E8(8) p2"] = _golden("E8(8)", "126*S4({v8}) + 244*X22({v8})", "p2")
    checks["E8(-24) p1"] = _golden("E8(-24)", "12*S2({v6}) + 6*y7**2 + 14*y8**2")
    checks["E7(7) p1"] = _golden("E7(7)", "595*S2({v8}) + 1210*X2({v8})")
    checks["E7(7) p2"] = _golden(
        "E7(7)",
        "52360*S4({v8}) + 220660*X31({v8}) + 336790*X22({v8}) + 684810*X211({v8}) + 1392444*X1111({v8})",
        "p2",
    )
    checks["E7(-5) p1"] = _golden("E7(-5)", "8*S2({v7})")
    checks["E7(-25) p1"] = _golden("E7(-25)", "6*S2({v5}) + 2*y6**2 + 3*y7**2")
    checks["E6(6) p1"] = _golden("E6(6)", "14*S2({v4})")
    checks["E6(6) p2"] = _golden("E6(6)", "91*S4({v4}) + 166*X22({v4})", "p2")
    checks["E6(2) p1"] = _golden("E6(2)", "10*S2({v6}) + 20*y7**2 + 8*X2({v6})")
    checks["E6(-14) p1"] = _golden("E6(-14)", "4*S2({v5}) + 144*y6**2")
    checks["F4(4) p1"] = _golden("F4(4)", "14*y1**2 + 10*(y2**2 + y3**2 + y4**2)")
    checks["F4(-20) p1"] = _golden("F4(-20)", "2*S2({v4})")
    checks["F4(-20) p2"] = _golden("F4(-20)", "F(7, 4)*S4({v4}) + F(5, 2)*X22({v4})", "p2")
    checks["G2(2) p1"] = _golden("G2(2)", "20*y1**2 + 4*y2**2")
    failures = [k for k, ok in checks.items() if not ok]
    return failures, f"{len(checks) - len(failures)}/{len(checks)} goldens"


# ---------------------------------------------------------------- 3

KERNEL_PINS = {
    "E8_m24": "30*S2({v6}) + 15*(y7**2 + y8**2)",
    "E7_m5": "6*(S2({v6}) + 2*y7**2)",
    "E7_m25": "6*S2({v5}) + 2*y6**2 + y7**2",
    "E6_6": "12*S2({v4})",
    "E6_m14": "6*S2({v5}) + 3*y6**2",
    "F4_4": "6*S2({v4})",
    "G2_2": "2*(3*y1**2 + y2**2)",
}


def criterion_3():
    failures = []
    for fam in EXCEPTIONAL:
        spec = GroupSpec(fam)
        d = isotropy_data(spec)
        got = d.reduce(recompute_kernel_generator(spec))
        c = proportional(got, d.reduce(d.kernel_gens[0]))
        if not c:
            failures.append(f"{spec.label} vs curated")
        if fam in KERNEL_PINS:
            args = {f"v{k}": ys(d, hi=k) for k in range(1, 9)}
            pinned = build(d, KERNEL_PINS[fam].format(**args))
            if not proportional(got, pinned):
                failures.append(f"{spec.label} pin")
    return failures, f"{len(EXCEPTIONAL)} groups, {len(KERNEL_PINS)} pins"


# ---------------------------------------------------------------- 4

def criterion_4():
    checks = {}
    for token in ("SO:2,2", "SO:3,3"):
        d = isotropy_data(parse_group(token))
        y1 = variable(d.reduced_arity, 0)
        checks[f"{token} y1^4 in ideal"] = member(d.reduced_kernel_gens(), y1 ** 4, 4).in_ideal
    for token in ("E8(8)", "E7(7)", "E6(6)"):
        d = isotropy_data(parse_group(token))
        s4 = d.reduce(sum((variable(d.arity, i) ** 4 for i in range(d.arity)), MultiPoly(d.arity)))
        checks[f"{token} sum y^4 not in ideal"] = not member(d.reduced_kernel_gens(), s4, 4).in_ideal
    squares = {"E8(-24)": "y8", "E7(-5)": "y7", "E7(-25)": "y7", "E6(2)": "y7",
               "E6(-14)": "y6", "F4(4)": "y1", "G2(2)": "y1"}
    for token, var in squares.items():
        d = isotropy_data(parse_group(token))
        sq = build(d, f"{var}**2")
        checks[f"{token} {var}^2 not in ideal"] = not member(d.reduced_kernel_gens(), sq, 2).in_ideal
    d = isotropy_data(parse_group("F4(-20)"))
    checks["F4(-20) sum y_i^2 y_j^2 not in ideal"] = not member(
        d.reduced_kernel_gens(), build(d, "X22(y1, y2, y3, y4)"), 4).in_ideal
    failures = [k for k, ok in checks.items() if not ok]
    return failures, f"{len(checks)} verdicts"


# ---------------------------------------------------------------- 5

def criterion_5():
    failures = []
    sweep = [s for s in catalog() if not s.is_complex]
    for spec in sweep:
        d = isotropy_data(spec)
        label = spec.label
        if len(d.weights) + d.zero_weight_count != dim_symmetric_space(spec):
            failures.append(f"(a) {label}")
        forms = Counter(d.reduce(linear_form(w)) for w in d.weights)
        if forms != Counter({poly_scale(f, -1): k for f, k in forms.items()}):
            failures.append(f"(b) {label}")
        c = group_chern(spec)
        if d.reduce(c.component(1)) or d.reduce(c.component(3)):
            failures.append(f"(c) {label}")
        pair = pontryagin_classes(spec)
        if pair.p1 != d.reduce(half_square_sum(d.weights, d.arity)):
            failures.append(f"(d) {label}")
        for sym in d.symmetries:
            if (d.reduce(apply_symmetry(poly_scale(c.component(2), -1), sym)) != pair.p1
                    or d.reduce(apply_symmetry(c.component(4), sym)) != pair.p2):
                failures.append(f"(e) {label}")
                break
        if len(d.weights) <= UNTRUNCATED_LIMIT:
            if untruncated_chern(spec).low_degree_part(4) != c.truncated_total:
                failures.append(f"(f) {label}")
        r = classify(spec)
        if 4 > r.dim_M and not r.p1_vanishes or 8 > r.dim_M and not r.p2_vanishes:
            failures.append(f"(i) {label}")
        gens = r.kernel_generators
        for res, target, deg in zip(r.certificates, (r.p1_poly, r.p2_poly), (2, 4)):
            usable = [g for g in gens if g.degree() <= deg]
            if res.in_ideal and res.recombine(usable, d.reduced_arity) != target:
                failures.append(f"(j) {label}")
    for fam in PARITY_FAMILIES:
        if not parity_variant_check(GroupSpec(fam)):
            failures.append(f"(g) {fam}")
    for a, b in (("SU:1,1", "SO:2,1"), ("Sp:1,1", "SO:4,1")):
        ra, rb = classify(parse_group(a)), classify(parse_group(b))
        if (ra.p1_vanishes, ra.p2_vanishes) != (rb.p1_vanishes, rb.p2_vanishes):
            failures.append(f"(h) {a} vs {b}")
    if not classify(parse_group("SO:2,2")).p2_vanishes:
        failures.append("(i) SO(2,2) p2")
    return failures, f"{len(sweep)} groups"


# ---------------------------------------------------------------- 6

def _random_poly(rng, arity, max_deg, terms):
    out = {}
    for _ in range(rng.randint(0, terms)):
        exps = [0] * arity
        for _ in range(rng.randint(0, max_deg)):
            exps[rng.randrange(arity)] += 1
        out[tuple(exps)] = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    return MultiPoly(arity, out)


def criterion_6(cases=1000):
    rng = random.Random(20240601)
    bad = Counter()
    for _ in range(cases):
        a, b, c = (_random_poly(rng, 3, 4, 5) for _ in range(3))
        if not (a + b == b + a and (a + b) + c == a + (b + c) and a * b == b * a
                and (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c):
            bad["ring laws"] += 1
        a4, b4 = _random_poly(rng, 4, 6, 5), _random_poly(rng, 4, 6, 5)
        d = rng.randint(0, 8)
        if poly_mul_truncated(a4, b4, d) != truncate(poly_mul(a4, b4), d):
            bad["truncation"] += 1
        idx = rng.randrange(3)
        rep = linear_form([Fraction(rng.randint(-3, 3), rng.randint(1, 3)) if i != idx else 0 for i in range(3)])
        s = lambda p: substitute_linear(p, idx, rep)  # noqa: E731
        if s(a + b) != s(a) + s(b) or s(a * b) != s(a) * s(b):
            bad["substitution"] += 1
    return [f"{k} x{v}" for k, v in bad.items()], f"{cases} cases per property"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6]


@pytest.mark.parametrize("number", range(1, 7))
def test_criterion(number, capsys):
    failures, note = CRITERIA[number - 1]()
    emit(capsys, report(number, failures, note))
    assert not failures, failures


if __name__ == "__main__":
    results = []
    for i, fn in enumerate(CRITERIA, 1):
        failures, note = fn()
        print(report(i, failures, note))
        results.append(not failures)
    sys.exit(0 if all(results) else 1)
