"""Smith normal form and the homology it computes.

The invariant factors of an integer matrix classify the cokernel as an
abelian group; the determinantal divisors (gcds of k x k minors) give an
independent way to compute them.
"""

import random

from exotica import determinantal_divisor, smith_normal_form

###############################################################################
# The invariant factors satisfy the divisibility chain d1 | d2 | ...

form = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
print("invariant factors:", form.invariant_factors)
print("rank:", form.rank, " zero diagonal entries:", form.rank_deficiency)

###############################################################################
# Cross-check: the product d1 ... dk equals the gcd of all k x k minors.

matrix = [[random.randint(-5, 5) for _ in range(4)] for _ in range(4)]
form = smith_normal_form(matrix)
print("\nrandom matrix:", matrix)
print("factors:", form.invariant_factors)
product = 1
for k, d in enumerate(form.invariant_factors, start=1):
    product *= d
    print(f"  d1..d{k} = {product:6d}   gcd of {k}x{k} minors = "
          f"{determinantal_divisor(matrix, k)}")

###############################################################################
# Relator exponent matrices feed straight in: rows are relators, columns are
# generators, and the cokernel is the first homology of the presented group.

relator_matrix = [[1, -1, 0], [2, -2, 0]]  # two relators in three generators
form = smith_normal_form(relator_matrix)
free_rank = 3 - form.rank
torsion = [d for d in form.invariant_factors if d > 1]
print("\nfree rank:", free_rank, " torsion:", torsion)
