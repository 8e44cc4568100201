# coding: utf-8

# # Completely decomposable groups and their duals
#
# A completely decomposable torsion-free group is a sum of rank-one groups,
# each fixed up to isomorphism by a type.  Its Pontryagin dual is a protorus
# with one solenoid per type.

from protori import CdGroupDescriptor, ProtorusDescriptor, acd_witness, cd_of_dual, dual_of_cd
from protori import isogenous_protori, quasi_isomorphic
from protori.dsl import format_value, parse_cd

A = parse_cd("cd(divisible=1, free=2, types=[5^inf])")
K = dual_of_cd(A)
print(format_value(K))
#  -> protorus(divisible=1, torus=2, solenoids=[5^inf])
print(cd_of_dual(K) == A)
#  -> True

# Quasi-isomorphism on one side is isogeny on the other.
B = parse_cd("cd(divisible=1, free=2, types=[5^inf * 2^3])")
print(quasi_isomorphic(A, B), isogenous_protori(dual_of_cd(A), dual_of_cd(B)))
#  -> True True

# A protorus with no circle factors is the dual of some
# almost completely decomposable group; here is one.
K = ProtorusDescriptor(0, 0, (parse_cd("cd(types=[3^inf])").types[0],))
print(format_value(acd_witness(K)))
#  -> cd(divisible=0, free=0, types=[3^inf])
