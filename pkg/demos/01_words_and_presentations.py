"""Words, presentations, and first homology.

A tour of the basic currency of the toolkit: freely reduced words in a free
group, finite presentations, and abelianization via Smith normal form.
"""

from exotica import (
    Word,
    abelianize,
    commutator,
    format_presentation,
    parse_presentation,
    parse_word,
    quotient,
    relation,
    tietze_eliminate,
)

###############################################################################
# Words reduce on construction: adjacent inverse pairs always cancel.

w = parse_word("a*b*b^-1*a")
print("a*b*b^-1*a reduces to:", w)
print("w * w^-1 is the identity:", (w * w.inverse()).is_identity())

###############################################################################
# Commutators use the convention [g, h] = g h g^-1 h^-1, and their image in
# any abelianization vanishes.

g, h = parse_word("a*b"), parse_word("b^-1*a")
c = commutator(g, h)
print("[ab, b^-1 a] =", c)
print("exponent vector:", c.exponent_vector(("a", "b")))

###############################################################################
# A relation lhs = rhs is stored as the relator lhs * rhs^-1.  The braid-like
# relation aba = bab gives the familiar one-relator knot group, with infinite
# cyclic first homology.

trefoil = parse_presentation("gens: a, b; rels: a*b*a*b^-1*a^-1*b^-1;")
print("\ntrefoil relator:", relation(parse_word("a*b*a"), parse_word("b*a*b")))
print("H1 of the trefoil group:", abelianize(trefoil))

###############################################################################
# Adding relators is a quotient; the serialization is canonical and shared
# with the script language.

surgered = quotient(trefoil, (parse_word("a*b^2*a*b^-4"),))
print("0-surgery homology:", abelianize(surgered))
print("canonical text:", format_presentation(surgered))

###############################################################################
# Tietze elimination removes a generator defined by a relator, without
# changing the group; the abelianization is preserved exactly.

p = parse_presentation("gens: a, b, c; rels: c*b^-1*a^-1, c^3;")
q = tietze_eliminate(p, "c", parse_word("a*b"))
print("\nafter eliminating c:", format_presentation(q))
print("same homology:", abelianize(p) == abelianize(q))
