"""Certified coset enumeration.

Enumeration that completes is a certificate: the table is a permutation
representation in which every relator acts trivially, so the index it reports
is exact.  Enumeration that hits its budget certifies nothing.
"""

from exotica import coset_enumerate, is_trivial, parse_presentation, parse_word, surface_group

###############################################################################
# Finite groups complete quickly; the index over the trivial subgroup is the
# group order.

s3 = parse_presentation("gens: a, b; rels: a^2, b^2, a*b*a*b*a*b;")
table = coset_enumerate(s3, ())
print("order of <a,b | a^2, b^2, (ab)^3>:", table.index)
print("cosets defined along the way:", table.cosets_defined)

###############################################################################
# Subgroup indices: the even rotations inside a hexagonal rotation group.

table = coset_enumerate(parse_presentation("gens: a; rels: a^6;"), (parse_word("a^2"),))
print("index of <a^2> in <a | a^6>:", table.index)

###############################################################################
# Completed tables audit themselves: every relator traces back to its start
# at every coset, and the generator actions are mutually inverse.

table.audit(parse_presentation("gens: a; rels: a^6;"), (parse_word("a^2"),))
print("audit passed")

###############################################################################
# Infinite groups exhaust any budget; the result is Unknown, never a claim.

genus2 = surface_group(2)
verdict = is_trivial(genus2, budget=500)
print("\ngenus-2 surface group with a 500-coset budget:", verdict)

###############################################################################
# The triviality checker only ever answers Trivial from a complete table of
# index one.

print("is <a | a> trivial?", is_trivial(parse_presentation("gens: a; rels: a;")))
print("is <a | a^5> trivial?", is_trivial(parse_presentation("gens: a; rels: a^5;")))
