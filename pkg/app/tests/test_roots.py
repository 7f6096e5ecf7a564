import pytest

from src.crystal import InvalidRankError, InvalidWordError
from src.crystal.roots import (
    default_long_word,
    interval_of,
    interval_vector,
    is_long_word,
    positive_roots,
    reflect,
    simple_root,
    word_roots,
)
from src.models.roots import Interval, LongWord, SignedRootVector


@pytest.mark.parametrize("r, expected", [(1, 1), (2, 3), (3, 6), (4, 10)])
def test_positive_root_count(r, expected):
    roots = positive_roots(r)
    assert len(roots) == expected
    assert [root.sort_key() for root in roots] == sorted(root.sort_key() for root in roots)


def test_positive_roots_rejects_rank_zero():
    with pytest.raises(InvalidRankError):
        positive_roots(0)


def test_default_long_word_shape():
    assert default_long_word(1).word == (1,)
    assert default_long_word(2).word == (1, 2, 1)
    assert default_long_word(3).word == (1, 2, 1, 3, 2, 1)


def test_word_roots_rank_two():
    roots = word_roots(default_long_word(2))
    assert [str(root) for root in roots] == ["[1,1]", "[1,2]", "[2,2]"]


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_default_word_position_m_of_row_j_is_root_m_j(r):
    roots = word_roots(default_long_word(r))
    expected = [(m, j) for j in range(1, r + 1) for m in range(1, j + 1)]
    assert [root.sort_key() for root in roots] == expected


def test_word_roots_covers_every_positive_root_once():
    roots = word_roots(default_long_word(4))
    assert sorted(root.sort_key() for root in roots) == [root.sort_key() for root in positive_roots(4)]


def test_other_reduced_word_is_accepted():
    roots = word_roots(LongWord(rank=2, word=(2, 1, 2)))
    assert [str(root) for root in roots] == ["[2,2]", "[1,2]", "[1,1]"]


def test_non_reduced_word_raises():
    w = LongWord(rank=2, word=(1, 1, 2))
    with pytest.raises(InvalidWordError):
        word_roots(w)
    assert not is_long_word(w)


def test_long_word_model_rejects_bad_letters():
    with pytest.raises(ValueError):
        LongWord(rank=2, word=(1, 3, 1))
    with pytest.raises(ValueError):
        LongWord(rank=2, word=(1, 2))


def test_reflect_simple_root_negates_it():
    alpha = simple_root(2, 1).as_signed()
    assert reflect(alpha, 1).coeffs == (-1, 0)
    assert reflect(alpha, 2).coeffs == (1, 1)


def test_interval_vector_and_interval_of_are_inverse():
    for root in positive_roots(4):
        assert interval_of(interval_vector(4, root).as_signed()) == root


@pytest.mark.parametrize("coeffs", [(1, 0, 1), (0, 0, 0), (2, 0, 0), (-1, 0, 0)])
def test_interval_of_rejects_non_roots(coeffs):
    with pytest.raises(InvalidWordError):
        interval_of(SignedRootVector(coeffs=coeffs))


def test_interval_model_validation():
    assert Interval(a=2, b=3).height == 2
    with pytest.raises(ValueError):
        Interval(a=3, b=2)
