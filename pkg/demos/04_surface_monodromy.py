"""Dehn twists on surface homology and a Lefschetz fibration's group.

The four vanishing cycles of the genus-2 pencil on the four-fold blowup of
the torus-times-sphere act on first homology by transvections; composing them
gives an involution, so their product squares to the identity there, exactly
as the mapping-class relation requires.  Quotienting the surface group by the
cycles computes the total space's fundamental group.
"""

import numpy as np

from exotica import (
    SurfaceHomology,
    abelianize,
    bundled,
    class_of_word,
    compose,
    lefschetz_pi1,
    transvection,
)

surface = SurfaceHomology(2)
print("basis:", surface.basis)
print("pairing matrix:\n", surface.pairing_matrix())

###############################################################################
# The cycles, as words and as homology classes.

curves = list(bundled("matsumoto_curves"))
classes = [class_of_word(w, surface) for w in curves]
for w, c in zip(curves, classes):
    print(f"  {w!r:40s} -> {c}")

###############################################################################
# One twist: x -> x + <x, c> c.  The commutator cycle is nullhomologous and
# twists trivially on homology.

print("\ntwist along the first cycle:\n", transvection(classes[0], surface))
print("twist along the commutator cycle is the identity:",
      np.array_equal(transvection(classes[1], surface), np.eye(4, dtype=int)))

###############################################################################
# The composite of the four twists (rightmost applied first) swaps the two
# handles with a sign; its square is the identity on homology.

m = compose(classes, surface)
print("\ncomposite action:\n", m)
print("squares to identity:", np.array_equal(m @ m, np.eye(4, dtype=int)))

###############################################################################
# The fundamental group of the fibration's total space: surface group modulo
# the cycles.  Here it is free abelian of rank two.

pi1 = lefschetz_pi1(2, curves)
print("\ntotal space H1:", abelianize(pi1))
