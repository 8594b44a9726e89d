# Deciding whether p_i lies in the ideal of classes pulled back from the complexification.

from pontclass import MembershipProblem, is_in_ideal, isotropy_data, parse_group, render
from pontclass.exactpoly import MultiPoly, variable

# SO(2,2): rank one on each side, generators y1^2 + z1^2, y1^2 z1^2 and the Euler class y1 z1
so22 = isotropy_data(parse_group("SO:2,2"))
names = so22.reduced_names
gens = so22.reduced_kernel_gens()
print("generators:", [render(g, names) for g in gens])

y1 = variable(2, 0)
target = y1 ** 4
usable = tuple(g for g in gens if g.degree() <= 4)
res = is_in_ideal(MembershipProblem(usable, target, 4))
print("y1^4 in ideal:", res.in_ideal)
for j, mono, c in res.certificate:
    print(f"   {c} * {render(MultiPoly(2, {mono: 1}), names)} * ({render(usable[j], names)})")
print("certificate recombines:", res.recombine(usable, 2) == target)

# E8(8): the only quadratic generator is sum y_i^2, and sum y_i^4 is not a multiple of it
e8 = isotropy_data(parse_group("E8(8)"))
n = e8.arity
s4 = sum((variable(n, i) ** 4 for i in range(n)), MultiPoly(n))
gens = tuple(e8.reduced_kernel_gens())
print("E8(8) generators:", [render(g, e8.reduced_names) for g in gens])
print("sum y^4 in ideal:", is_in_ideal(MembershipProblem(gens, s4, 4)).in_ideal)

# the same question for the square of the generator has an obvious yes
print("(sum y^2)^2 in ideal:", is_in_ideal(MembershipProblem(gens, gens[0] * gens[0], 4)).in_ideal)
