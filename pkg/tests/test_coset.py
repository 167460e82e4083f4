from itertools import permutations

import pytest

from exotica import (
    coset_enumerate,
    group_order,
    is_trivial,
    parse_presentation,
    parse_word,
    surface_group,
)
from exotica.coset import CertificateError


def pres(text):
    return parse_presentation(text)


def _symmetric_group_order(n):
    """Brute-force closure of adjacent transpositions under composition."""
    gens = []
    for i in range(n - 1):
        p = list(range(n))
        p[i], p[i + 1] = p[i + 1], p[i]
        gens.append(tuple(p))
    elements = {tuple(range(n))}
    frontier = list(elements)
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                composed = tuple(g[h[i]] for i in range(n))
                if composed not in elements:
                    elements.add(composed)
                    nxt.append(composed)
        frontier = nxt
    assert len(elements) == len(list(permutations(range(n))))
    return len(elements)


def test_cyclic_of_order_three():
    table = coset_enumerate(pres("gens: a; rels: a^3;"), ())
    assert table.complete and table.index == 3


def test_symmetric_group_on_three_letters():
    expected = _symmetric_group_order(3)
    table = coset_enumerate(pres("gens: a, b; rels: a^2, b^2, a*b*a*b*a*b;"), ())
    assert table.complete and table.index == expected == 6


def test_subgroup_index():
    table = coset_enumerate(pres("gens: a; rels: a^6;"), (parse_word("a^2"),))
    assert table.complete and table.index == 2


def test_budget_must_be_positive():
    with pytest.raises(ValueError):
        coset_enumerate(pres("gens: a; rels: a;"), (), budget=0)


def test_exhaustion_is_never_a_claim():
    genus2 = surface_group(2)
    result = is_trivial(genus2, budget=400)
    assert result.status == "unknown"
    assert result.table is None
    table = coset_enumerate(genus2, (), budget=400)
    assert not table.complete
    assert table.status == "exhausted"
    assert table.index is None
    assert table.cosets_defined == 400


def test_is_trivial_verdicts():
    assert is_trivial(pres("gens: a; rels: a;")).status == "trivial"
    finite = is_trivial(pres("gens: a; rels: a^5;"))
    assert finite.status == "finite" and finite.order == 5
    assert str(finite) == "Finite(5)"


def test_group_order_helper():
    assert group_order(pres("gens: a, b; rels: a^2, b^2, a*b*a*b*a*b;")) == 6
    assert group_order(surface_group(2), budget=300) is None


def test_certificates_audit():
    quaternion = pres(
        "gens: i, j; rels: i^4, i^2*j^-2, j*i*j^-1*i;"
    )
    table = coset_enumerate(quaternion, ())
    assert table.index == 8
    table.audit(quaternion, ())  # every relator closes at every coset
    with pytest.raises(CertificateError):
        table.audit(pres("gens: i, j; rels: i^5;"), ())


def test_numbering_deterministic():
    p = pres("gens: a, b; rels: a^3, b^2, a*b*a*b;")
    t1 = coset_enumerate(p, ())
    t2 = coset_enumerate(p, ())
    assert t1.table == t2.table
    assert t1.index == 6  # dihedral of order 6


def test_numbering_is_first_encountered_order():
    # reading the table row by row, column by column, new cosets appear in
    # increasing order
    for text in (
        "gens: a, b; rels: a^3, b^2, a*b*a*b;",
        "gens: i, j; rels: i^4, i^2*j^-2, j*i*j^-1*i;",
        "gens: a, b; rels: a*b*a*b^-1*a^-1*b^-1, b^3;",
    ):
        table = coset_enumerate(pres(text), ())
        seen = {0}
        for row in table.table:
            for entry in row:
                if entry not in seen:
                    assert entry == len(seen)
                    seen.add(entry)
        assert len(seen) == table.index


def test_trace_and_act():
    table = coset_enumerate(pres("gens: a; rels: a^3;"), ())
    assert table.act(0, "a", 1) != 0
    assert table.trace(0, parse_word("a^3")) == 0
    assert table.trace(1, parse_word("a^-1*a")) == 1


def test_big_finite_quotient():
    # binary tetrahedral-sized check: the trefoil group modulo cubed meridian
    p = pres("gens: a, b; rels: a*b*a*b^-1*a^-1*b^-1, b^3;")
    assert group_order(p) == 24
