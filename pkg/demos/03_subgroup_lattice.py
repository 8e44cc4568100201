# coding: utf-8

# # Subgroups commensurable with a base
#
# Over a base whose rows are all infinite, a subgroup of product form is given
# by integer offsets on the free coordinates and levels on the finite ones.

from protori import LatticeElement, find_conductor, index, join, leq, meet, preimage_mu, scale
from protori.dsl import format_value, parse_group

base = parse_group("prod[1 ; rest = inf, 2^inf * 3^inf]")
top = LatticeElement.from_base(base)

x = scale(top, 6)
y = LatticeElement(base, free_offsets={(0, 3): 2, (1, 2): -1})
print(format_value(x))
#  -> lattice(base=prod[1 ; rest = inf, 2^inf * 3^inf], free=[(0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1)], torsion=[])

# Meet and join act coordinate by coordinate.
print(format_value(meet(x, y)))
#  -> lattice(base=prod[1 ; rest = inf, 2^inf * 3^inf], free=[(0, 2, 1), (0, 3, 2), (1, 2, 1), (1, 3, 1)], torsion=[])
print(leq(meet(x, y), join(x, y)))
#  -> True

# Index of 6 * top in top: two rows, each losing a factor 6.
print(index(x, top))
#  -> 36

# The smallest k with k * x inside y.
print(find_conductor(top, y))
#  -> 9

# Preimage under multiplication by 4 undoes scaling at 2.
print(preimage_mu(scale(top, 4), 4) == top)
#  -> True
