# From isotropy weights to p1 and p2, one group at a time.

from pontclass import isotropy_data, parse_group, pontryagin_classes, render
from pontclass.charclass import group_chern, half_square_sum

# G2(2): rank 2, eight weights, no relations
g2 = parse_group("G2(2)")
data = isotropy_data(g2)
print(g2.label, "weights:")
for w in data.weights:
    print("   ", [str(c) for c in w])

# the truncated product of (1 + w); odd pieces drop out since weights come in +- pairs
chern = group_chern(g2)
for k, c in enumerate(chern.components):
    print(f"c{k} =", render(c, data.variable_names))

pair = pontryagin_classes(g2)
print("p1 =", render(pair.p1, data.reduced_names))
print("p2 =", render(pair.p2, data.reduced_names))

# p1 is also half the sum of the squared weights
print("half square sum agrees:", half_square_sum(data.weights, data.arity) == pair.p1)

# SU(2,1) carries a relation z1 = -y1 - y2; classes are reported after it is imposed
su = isotropy_data(parse_group("SU:2,1"))
for idx, rep in su.relations:
    print("relation:", su.variable_names[idx], "=", render(rep, su.variable_names))
print("SU(2,1) p1 =", render(pontryagin_classes(su.spec).p1, su.reduced_names))

# E7(7): 70 weights e_i+e_j+e_k+e_l in eight variables summing to zero
e7 = isotropy_data(parse_group("E7(7)"))
c2 = group_chern(e7.spec).component(2)
print("E7(7) c2 before the relation has", len(c2.terms), "terms; coefficient of y1^2 is",
      c2.coefficient((2,) + (0,) * 7), "and of y1*y2 is", c2.coefficient((1, 1) + (0,) * 6))
print("E7(7) p1 after the relation:", render(pontryagin_classes(e7.spec).p1, e7.reduced_names)[:60], "...")
