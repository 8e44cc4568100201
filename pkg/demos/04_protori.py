# coding: utf-8

# # Finite-dimensional protori
#
# A protorus is described by its rational part (copies of the dual of Q), its
# circle factors, and solenoids, each solenoid carrying a characteristic.

from protori import ProtorusDescriptor, decompose, dim, dim_na, from_profinite
from protori import isogenous_protori, projective_resolution, tilde_delta, torsion_structure
from protori.dsl import format_value, parse_group, parse_protorus

# Build a protorus from a pro-finite group: infinite rows give solenoids,
# finite rows give circles.
ext = from_profinite(parse_group("prod[1 ; rest = inf, 2^inf, 2^1]"))
K = ext.protorus
print(format_value(K))
#  -> protorus(divisible=1, torus=1, solenoids=[2^inf])
print(dim(K), dim_na(K))
#  -> 3 2

q, t, free = decompose(K)
print(q, t, format_value(free))
#  -> 1 1 protorus(divisible=0, torus=0, solenoids=[2^inf])

# # p-adic ranks
#
# On the torus-free part, r_p counts rows that are p-adically free and c_p the
# rest; they always add up to the non-Archimedean dimension.

T = tilde_delta(free)
print(T.at(2), T.at(3))
#  -> (1, 0) (0, 1)
print(format_value(torsion_structure(free)))
#  -> 2^0 ; rest = 1

kernel, rank = projective_resolution(free)
print(rank, kernel)
#  -> 1 KernelDescriptor(rows=(KernelRow(default_free=True, flipped=frozenset({2})),))

# # Isogeny of protori depends only on types

a = parse_protorus("protorus(solenoids=[2^inf])")
b = parse_protorus("protorus(solenoids=[2^inf * 3^4])")
print(isogenous_protori(a, b))
#  -> True
