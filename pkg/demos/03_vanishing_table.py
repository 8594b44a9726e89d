# Sweep the catalog and compare each verdict with the list of groups whose p_i all vanish.

import time

from pontclass import classify, classify_product, parse_group, theorem_table

t0 = time.perf_counter()
reports = theorem_table(max_pq=8, max_n=4)
print(f"{len(reports)} groups classified in {time.perf_counter() - t0:.2f}s")

# only the groups where everything vanishes
vanishing = [r.spec.label for r in reports if r.all_vanish]
print("p1 = p2 = 0:", ", ".join(vanishing))

# groups where p1 dies but p2 survives
print("p1 = 0, p2 != 0:", ", ".join(r.spec.label for r in reports if r.p1_vanishes and not r.p2_vanishes))

print("disagreements:", [r.spec.label for r in reports if not r.agrees_with_list])

# SO(p,q) with p, q >= 2: p1 vanishes exactly when p = q
for p, q in [(3, 2), (3, 3), (4, 3), (4, 4), (5, 5)]:
    r = classify(parse_group(f"SO:{p},{q}"))
    print(f"SO({p},{q})  dim M = {r.dim_M:2d}  p1=0 {r.p1_vanishes!s:5}  p2=0 {r.p2_vanishes}")

# a product vanishes only if every factor does
for tokens in (["SL:3", "E6(-26)"], ["SL:3", "G2(2)"]):
    prod = classify_product([parse_group(t) for t in tokens])
    print(" x ".join(f.spec.label for f in prod.factors), "->", prod.all_vanish)
