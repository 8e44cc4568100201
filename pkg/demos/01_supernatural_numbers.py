# coding: utf-8

# # Supernatural numbers
#
# A supernatural number assigns an exponent in {0, 1, 2, ..., inf} to every
# prime.  Here only finitely many primes differ from a common default, so the
# value fits in a default plus a small table of exceptions.

import protori as pt
from protori.dsl import format_sn, parse_sn

INF = pt.INF

# The 2-adic "order": infinite at 2, trivial elsewhere.
two_adic = pt.SupernaturalNumber(0, {2: INF})
print(format_sn(two_adic))
#  -> 2^inf

# Writing an exception equal to the default is the same as leaving it out.
print(pt.SupernaturalNumber(1, {2: 1}) == pt.SupernaturalNumber(1))
#  -> True

# The text form is also an input format.
n = parse_sn("3^2 * 2^inf ; rest = 1")
print(format_sn(n), n[2], n[3], n[10007])
#  -> 2^inf * 3^2 ; rest = 1 inf 2 1

# # Arithmetic is pointwise
#
# Products add exponents, gcd/lcm take min/max.

m = parse_sn("2^3 * 5^1")
print(format_sn(pt.sn_mul(n, m)))
#  -> 2^inf * 3^2 * 5^2 ; rest = 1
print(format_sn(pt.sn_min(n, m)), "|", format_sn(pt.sn_max(n, m)))
#  -> 2^3 * 5^1 | 2^inf * 3^2 ; rest = 1

# # Types
#
# Two supernatural numbers have the same type when they agree up to finitely
# many finite changes.  Infinite exponents are rigid.

print(pt.sn_type_equivalent(parse_sn("2^inf * 3^4"), parse_sn("2^inf * 7^1")))
#  -> True
print(pt.sn_type_equivalent(parse_sn("2^inf"), parse_sn("3^inf")))
#  -> False
