import random

from hypothesis import given, strategies as st

from exotica import Word, commutator, parse_word, format_word, reduce, relation

letters = st.lists(
    st.tuples(st.sampled_from("abc"), st.sampled_from((1, -1))), max_size=30
)


def test_cancellation():
    assert reduce([("a", 1), ("a", -1)]).is_identity()
    assert reduce([("a", 1), ("b", 1), ("b", -1), ("a", 1)]) == parse_word("a^2")


def test_already_reduced_unchanged():
    w = parse_word("a*b*a^-1")
    assert Word(w.letters) == w


@given(letters)
def test_reduction_idempotent_and_shorter(raw):
    w = Word(tuple(raw))
    assert Word(w.letters) == w
    assert len(w) <= len(raw)


@given(letters, st.integers(0, 2**32))
def test_reduction_confluent(raw, seed):
    # cancelling adjacent inverse pairs in any order reaches the same word
    rng = random.Random(seed)
    current = list(raw)
    while True:
        sites = [
            i
            for i in range(len(current) - 1)
            if current[i][0] == current[i + 1][0]
            and current[i][1] == -current[i + 1][1]
        ]
        if not sites:
            break
        i = rng.choice(sites)
        del current[i : i + 2]
    assert tuple(current) == Word(tuple(raw)).letters


@given(letters)
def test_word_times_inverse_is_identity(raw):
    w = Word(tuple(raw))
    assert (w * w.inverse()).is_identity()
    assert (w.inverse() * w).is_identity()


def test_commutator_of_element_with_itself():
    a = parse_word("a")
    assert commutator(a, a).is_identity()


def test_commutator_definition():
    a, b = parse_word("a"), parse_word("b")
    assert commutator(a, b) == parse_word("a*b*a^-1*b^-1")


@given(letters, letters)
def test_commutator_abelianizes_to_zero(raw_g, raw_h):
    g, h = Word(tuple(raw_g)), Word(tuple(raw_h))
    vec = commutator(g, h).exponent_vector(("a", "b", "c"))
    assert vec == (0, 0, 0)


def test_relation_forms_relator():
    lhs, rhs = parse_word("a*b*a"), parse_word("b*a*b")
    assert relation(lhs, rhs) == parse_word("a*b*a*b^-1*a^-1*b^-1")


def test_chained_equality_to_identity():
    from exotica.words import chain_relators

    members = [parse_word("a*b"), parse_word("b^2")]
    assert chain_relators(*members) == members


def test_power_and_conjugate():
    a, b = parse_word("a"), parse_word("b")
    assert a**3 == parse_word("a^3")
    assert a**-2 == parse_word("a^-2")
    assert a.conjugate(b) == parse_word("b*a*b^-1")


def test_substitute():
    w = parse_word("a*c*a^-1")
    assert w.substitute("c", parse_word("a*b")) == parse_word("a^2*b*a^-1")


@given(letters)
def test_text_round_trip(raw):
    w = Word(tuple(raw))
    assert parse_word(format_word(w)) == w
