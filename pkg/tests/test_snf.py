import random

import pytest
from hypothesis import given, strategies as st

from exotica import SmithForm, determinantal_divisor, in_row_space, smith_normal_form


def test_identity():
    assert smith_normal_form([[1, 0], [0, 1]]).invariant_factors == (1, 1)


def test_rank_one_example():
    form = smith_normal_form([[1, -1], [2, -2]])
    assert form.invariant_factors == (1,)
    assert form.rank == 1
    assert form.rank_deficiency == 1


def test_empty_and_zero():
    assert smith_normal_form([]).invariant_factors == ()
    form = smith_normal_form([[0, 0], [0, 0]])
    assert form.invariant_factors == ()
    assert form.rank_deficiency == 2


def test_torsion():
    # Z^2 / <(2,0),(0,4)>  ->  factors 2, 4
    assert smith_normal_form([[2, 0], [0, 4]]).invariant_factors == (2, 4)
    # divisibility chain forces 1, 12 for [[4, 6], [6, 0]]? verify via minors:
    # D1 = gcd(4,6) = 2, D2 = |det| = 36 -> factors 2, 18
    assert smith_normal_form([[4, 6], [6, 0]]).invariant_factors == (2, 18)


def test_chain_validation():
    with pytest.raises(ValueError):
        SmithForm((2, 3), 0)
    with pytest.raises(ValueError):
        SmithForm((0,), 0)


def _oracle_check(matrix):
    """Product of the first k invariant factors equals the gcd of k x k minors."""
    form = smith_normal_form(matrix)
    product = 1
    for k, d in enumerate(form.invariant_factors, start=1):
        product *= d
        assert product == determinantal_divisor(matrix, k)
    assert determinantal_divisor(matrix, form.rank + 1) == 0


def test_against_minor_oracle_random_4x4():
    rng = random.Random(20240617)
    for _ in range(200):
        matrix = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(4)]
        _oracle_check(matrix)


def test_against_minor_oracle_rectangular():
    rng = random.Random(5)
    for rows, cols in ((1, 5), (5, 1), (3, 5), (5, 3), (2, 2)):
        for _ in range(20):
            matrix = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
            _oracle_check(matrix)


def test_against_minor_oracle_torsion_heavy():
    rng = random.Random(6)
    for _ in range(50):
        matrix = [
            [rng.randint(-500, 500) * rng.choice((1, 2, 6)) for _ in range(5)]
            for _ in range(5)
        ]
        _oracle_check(matrix)


def test_large_entries_terminate_quickly():
    rng = random.Random(7)
    matrix = [[rng.randint(-50, 50) for _ in range(8)] for _ in range(8)]
    form = smith_normal_form(matrix)
    assert form.invariant_factors[0] == determinantal_divisor(matrix, 1)


@given(
    st.lists(
        st.lists(st.integers(-9, 9), min_size=3, max_size=3),
        min_size=1,
        max_size=4,
    )
)
def test_divisibility_chain_always_holds(matrix):
    form = smith_normal_form(matrix)  # SmithForm validates the chain itself
    assert form.rank + form.rank_deficiency == min(len(matrix), 3)


def test_in_row_space():
    m = [[1, -1]]
    assert in_row_space(m, (2, -2))
    assert not in_row_space(m, (1, 1))
    assert in_row_space([], ())
    assert in_row_space([[2, 0], [0, 2]], (4, 2))
    assert not in_row_space([[2, 0], [0, 2]], (1, 0))
    assert in_row_space([[1, 0], [0, 1]], (7, -3))
