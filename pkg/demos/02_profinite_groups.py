# coding: utf-8

# # Finitely generated abelian pro-finite groups
#
# A group is a product of rows, each row being prod_p Z_p-ish pieces given by a
# supernatural number: exponent e gives Z(p^e), inf gives the p-adic integers.

from protori import FgProfiniteGroup, isogenous, kernel_descriptor, na_invariants
from protori import quotient_mod_k, scalar_mul, standardize
from protori.dsl import format_group, parse_group

zhat = FgProfiniteGroup.zhat()
print(format_group(zhat))
#  -> prod[1 ; rest = inf]

# Quotients by k only see the primes dividing k.
print(format_group(quotient_mod_k(zhat, 12)))
#  -> prod[2^2 * 3^1]
print(format_group(quotient_mod_k(FgProfiniteGroup.p_adic(5), 125)))
#  -> prod[5^3]

# Multiplication by k lowers finite exponents and leaves inf alone.  The
# result comes back in standard form, so the 5-part moves up to the first row.
D = parse_group("prod[2^inf * 3^2, 5^3]")
print(format_group(scalar_mul(D, 15)))
#  -> prod[2^inf * 3^1 * 5^2]

# # Standard form
#
# Per prime, exponents are sorted downwards across rows; rows of zeros are
# dropped.  The non-Archimedean invariants come from the standard form.

D = parse_group("prod[3^2, 2^inf * 3^inf, 1]")
print(format_group(standardize(D)))
#  -> prod[2^inf * 3^inf, 3^2]
print(na_invariants(D))
#  -> NaInvariants(width=2, dimension=1)

# # Isogeny
#
# Finite changes do not matter; free p-ranks and the default column do.

print(isogenous(parse_group("prod[2^inf, 3^4]"), parse_group("prod[2^inf * 5^2]")))
#  -> True
print(isogenous(parse_group("prod[2^inf]"), parse_group("prod[3^inf]")))
#  -> False

# The kernel of Zhat^m -> D is free where D is finite and zero where D is free.
print(kernel_descriptor(parse_group("prod[2^inf]")))
#  -> KernelDescriptor(rows=(KernelRow(default_free=True, flipped=frozenset({2})),))
