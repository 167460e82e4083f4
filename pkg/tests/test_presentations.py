import random

import pytest

from exotica import (
    BoundaryData,
    Presentation,
    Word,
    abelianize,
    in_row_space,
    parse_presentation,
    parse_word,
    quotient,
    tietze_eliminate,
    van_kampen_fiber_sum,
)
from exotica.constructions import bundled


def pres(text):
    return parse_presentation(text)


TREFOIL = pres("gens: a, b; rels: a*b*a*b^-1*a^-1*b^-1;")
MK = pres("gens: a, b; rels: a*b*a*b^-1*a^-1*b^-1, a*b^2*a*b^-4;")


def test_normalization_drops_trivial_and_duplicate_relators():
    p = Presentation(("a",), (Word(), parse_word("a^3"), parse_word("a^3")))
    assert p.relators == (parse_word("a^3"),)


def test_serialization_round_trip_random_presentations():
    import random as rnd
    from exotica import format_presentation

    rng = rnd.Random(42)
    gens = ("a", "b", "c")
    for _ in range(25):
        relators = []
        for _ in range(rng.randint(0, 4)):
            letters = tuple(
                (rng.choice(gens), rng.choice((1, -1)))
                for _ in range(rng.randint(1, 8))
            )
            relators.append(Word(letters))
        p = Presentation(gens, tuple(relators))
        assert parse_presentation(format_presentation(p)) == p


def test_undeclared_generator_rejected():
    with pytest.raises(ValueError):
        Presentation(("a",), (parse_word("a*b"),))


def test_abelianize_trefoil():
    assert str(abelianize(TREFOIL)) == "Z"


def test_abelianize_surgered_trefoil():
    assert str(abelianize(MK)) == "Z"


def test_abelianize_quotient_of_surface_group():
    zc = bundled("Z_complement")
    assert str(abelianize(zc.presentation)) == "Z^2"


def test_abelianize_glued_double_is_trivial():
    xkc = bundled("X_K_complement")
    closed = quotient(xkc.presentation, (xkc.meridian,))
    assert abelianize(closed).is_trivial()


def test_abelianize_torsion():
    p = pres("gens: a, b; rels: a^2, b^4;")
    g = abelianize(p)
    assert g.free_rank == 0 and g.torsion == (2, 4)


def test_quotient_by_nothing():
    assert quotient(TREFOIL, ()) == TREFOIL


def test_quotient_kills_generator():
    p = quotient(pres("gens: a; rels: ;"), (parse_word("a"),))
    assert abelianize(p).is_trivial()


def test_quotient_unknown_generator():
    with pytest.raises(ValueError):
        quotient(TREFOIL, (parse_word("c"),))


# -- Tietze elimination ------------------------------------------------------


def test_tietze_simple():
    p = pres("gens: a, b; rels: b*a^-1;")
    q = tietze_eliminate(p, "b", parse_word("a"))
    assert q.generators == ("a",)
    assert q.relators == ()


def test_tietze_substitution():
    p = pres("gens: a, b, c; rels: c*b^-1*a^-1, c^3;")
    q = tietze_eliminate(p, "c", parse_word("a*b"))
    assert q.generators == ("a", "b")
    assert q.relators == (parse_word("a*b*a*b*a*b"),)


def test_tietze_two_step_rank_two():
    # eliminate b2 = b1^-1, then a1 via the third vanishing-cycle relator;
    # the result is a two-generator presentation with the same homology
    zc = bundled("Z_complement").presentation
    step1 = tietze_eliminate(zc, "b2", parse_word("b1^-1"))
    step2 = tietze_eliminate(step1, "a1", parse_word("b1^-1*a2^-1*b1"))
    assert set(step2.generators) == {"b1", "a2"}
    assert str(abelianize(step2)) == "Z^2"
    assert abelianize(step2) == abelianize(zc)


def test_tietze_requires_defining_relator():
    with pytest.raises(ValueError):
        tietze_eliminate(TREFOIL, "b", parse_word("a"))


def test_tietze_rejects_self_referential_definition():
    with pytest.raises(ValueError):
        tietze_eliminate(pres("gens: a, b; rels: b*a^-1*b^-1*b;"), "b", parse_word("b"))


def _eliminable_pairs(p):
    """(generator, defining word) choices justified by a single-occurrence relator."""
    pairs = []
    for rel in p.relators:
        for idx, (sym, sign) in enumerate(rel.letters):
            if sum(1 for s, _ in rel.letters if s == sym) != 1:
                continue
            before = Word(rel.letters[:idx])
            after = Word(rel.letters[idx + 1 :])
            if sign == 1:
                defining = (after * before).inverse()
            else:
                defining = after * before
            pairs.append((sym, defining))
    return pairs


def test_abelianization_invariant_under_random_eliminations():
    sources = [
        bundled("C_B"),
        bundled("C_F"),
        bundled("Y_K").presentation,
        bundled("X_K_complement").presentation,
        bundled("Z_complement").presentation,
    ]
    rng = random.Random(7)
    done = 0
    while done < 50:
        p = rng.choice(sources)
        pairs = _eliminable_pairs(p)
        if not pairs:
            continue
        gen, defining = rng.choice(pairs)
        q = tietze_eliminate(p, gen, defining)
        assert abelianize(q) == abelianize(p)
        done += 1


def test_quotient_by_consequence_preserves_abelianization():
    # consequences (products of conjugates of relators) lie in the normal
    # closure: the quotient and its exponent lattice are unchanged
    rng = random.Random(11)
    for p in (TREFOIL, MK, bundled("Z_complement").presentation):
        rels = p.relators
        conjugators = [parse_word(s) for s in ("a", "b", "1")]
        for _ in range(5):
            w = Word()
            for _ in range(rng.randint(1, 3)):
                r = rng.choice(rels)
                if rng.random() < 0.5:
                    r = r.inverse()
                c = rng.choice([c for c in conjugators if c.symbols() <= set(p.generators)])
                w = w * r.conjugate(c)
            vec = w.exponent_vector(p.generators)
            assert in_row_space(p.exponent_matrix(), vec)
            assert abelianize(quotient(p, (w,))) == abelianize(p)


# -- Van Kampen fiber sums ------------------------------------------------------


def test_trivial_genus_zero_sum():
    empty = BoundaryData(pres("gens: ; rels: ;"), (), Word())
    result = van_kampen_fiber_sum(empty, empty, [])
    assert result.generators == ()
    assert abelianize(result).is_trivial()


def test_genus_mismatch_rejected():
    a = BoundaryData(pres("gens: a, b; rels: ;"), (parse_word("a"), parse_word("b")), Word())
    b = BoundaryData(pres("gens: c; rels: ;"), (), Word())
    with pytest.raises(ValueError):
        van_kampen_fiber_sum(a, b, [])


def test_matching_must_be_bijective():
    a = BoundaryData(pres("gens: a, b; rels: ;"), (parse_word("a"), parse_word("b")), Word())
    with pytest.raises(ValueError):
        van_kampen_fiber_sum(a, a, [(0, 0), (0, 1)])


def test_symbol_collision_renamed():
    a = BoundaryData(pres("gens: a, b; rels: ;"), (parse_word("a"), parse_word("b")), Word())
    result = van_kampen_fiber_sum(a, a, [(0, 0), (1, 1)])
    assert result.generators == ("a", "b", "a_2", "b_2")
    assert parse_word("a*a_2^-1") in result.relators
    assert parse_word("b*b_2^-1") in result.relators


def test_kill_meridians_adds_meridian_relators():
    p = pres("gens: a, b; rels: ;")
    a = BoundaryData(p, (parse_word("a"), parse_word("b")), parse_word("a*b*a^-1*b^-1"))
    with_kill = van_kampen_fiber_sum(a, a, [(0, 0), (1, 1)], kill_meridians=True)
    without = van_kampen_fiber_sum(a, a, [(0, 0), (1, 1)], kill_meridians=False)
    assert parse_word("a*b*a^-1*b^-1") in with_kill.relators
    assert parse_word("a*b*a^-1*b^-1") not in without.relators
