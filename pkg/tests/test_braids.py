import pytest
from hypothesis import given, strategies as st

from pi1lines.braids import (
    BraidWord,
    artin_apply,
    braid_equal,
    compose,
    format_braid,
    generator_images,
    half_twist,
    underlying_permutation,
)
from pi1lines.errors import GeneratorOutOfRange, StrandMismatch
from pi1lines.words import cyclic_reduce, inverse


@st.composite
def braids(draw, max_strands=6, max_len=30, strands=None):
    n = strands or draw(st.integers(min_value=2, max_value=max_strands))
    letters = draw(st.lists(st.integers(min_value=1, max_value=n - 1).flatmap(
        lambda i: st.sampled_from((i, -i))), max_size=max_len))
    return BraidWord(n, tuple(letters))


def boundary(n):
    return tuple(range(n, 0, -1))


def test_half_twist_words():
    assert half_twist(1, 2, 4).letters == (1,)
    assert half_twist(1, 3, 3).letters == (1, 2, 1)
    assert half_twist(2, 4, 5).letters == (2, 3, 2)
    with pytest.raises(IndexError):
        half_twist(2, 2, 3)
    with pytest.raises(IndexError):
        half_twist(1, 4, 3)


def test_half_twist_permutations():
    assert underlying_permutation(half_twist(1, 3, 3)) == {1: 3, 2: 2, 3: 1}
    assert braid_equal(half_twist(1, 3, 3), BraidWord(3, (2, 1, 2)))
    assert underlying_permutation(half_twist(2, 4, 5)) == {1: 1, 2: 4, 3: 3, 4: 2, 5: 5}
    assert underlying_permutation(half_twist(1, 4, 4)) == {1: 4, 2: 3, 3: 2, 4: 1}


def test_underlying_permutation_left_to_right():
    assert underlying_permutation(BraidWord(3, ())) == {1: 1, 2: 2, 3: 3}
    # (1 2) then (2 3): 1 -> 2 -> 3, 2 -> 1, 3 -> 2
    assert underlying_permutation(BraidWord(3, (1, 2))) == {1: 3, 2: 1, 3: 2}


def test_artin_single_letters():
    s1 = BraidWord(2, (1,))
    assert artin_apply(s1, (1,)) == (2,)
    assert artin_apply(s1, (2,)) == (2, 1, -2)
    s1i = BraidWord(2, (-1,))
    assert artin_apply(s1i, (2,)) == (1,)
    assert artin_apply(s1i, (1,)) == (-1, 2, 1)


def test_artin_half_twist_preserves_boundary():
    assert artin_apply(half_twist(1, 3, 3), (3, 2, 1)) == (3, 2, 1)


def test_artin_half_twist_on_top_generator():
    # the full half-twist sends x_n to x_n ... x_2 x_1 x_2^-1 ... x_n^-1
    for n in range(2, 7):
        conj = tuple(range(n, 1, -1))
        assert artin_apply(half_twist(1, n, n), (n,)) == conj + (1,) + inverse(conj)


def test_artin_out_of_range():
    with pytest.raises(GeneratorOutOfRange):
        artin_apply(BraidWord(2, (1,)), (3,))


def test_braid_equal_examples():
    assert braid_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
    assert braid_equal(BraidWord(4, (1, 3)), BraidWord(4, (3, 1)))
    assert not braid_equal(BraidWord(2, (1,)), BraidWord(2, (-1,)))
    with pytest.raises(StrandMismatch):
        braid_equal(BraidWord(2, ()), BraidWord(3, ()))


def test_full_twist_is_pure_but_nontrivial():
    for n in range(2, 6):
        d = half_twist(1, n, n)
        sq = d + d
        assert underlying_permutation(sq) == {i: i for i in range(1, n + 1)}
        assert not braid_equal(sq, BraidWord(n, ()))


def test_format_and_parse():
    b = BraidWord(4, (1, -2, 3))
    assert format_braid(b) == "s1 s2^-1 s3"
    assert BraidWord.parse("s1 s2^-1 s3", 4) == b


@given(braids())
def test_boundary_preserved(b):
    assert artin_apply(b, boundary(b.strands)) == boundary(b.strands)


@given(braids())
def test_images_are_conjugates_of_permuted_generators(b):
    perm = underlying_permutation(b)
    for i, img in enumerate(generator_images(b), 1):
        core = cyclic_reduce(img)
        assert core == (perm[i],)
        k = (len(img) - 1) // 2
        assert img[k] == perm[i] and img[:k] == inverse(img[k + 1:])


@given(braids(max_strands=5, max_len=15), st.data())
def test_homomorphism(b1, data):
    b2 = data.draw(braids(max_len=15, strands=b1.strands))
    w = data.draw(st.lists(st.integers(1, b1.strands).flatmap(lambda i: st.sampled_from((i, -i))), max_size=6))
    assert artin_apply(b1 + b2, w) == artin_apply(b2, artin_apply(b1, w))


@given(braids())
def test_inverse_braid_undoes(b):
    for i in range(1, b.strands + 1):
        assert artin_apply(b + b.inverse(), (i,)) == (i,)


@given(st.integers(min_value=3, max_value=7), st.data())
def test_braid_relations(n, data):
    i = data.draw(st.integers(1, n - 2))
    assert braid_equal(BraidWord(n, (i, i + 1, i)), BraidWord(n, (i + 1, i, i + 1)))
    j = data.draw(st.integers(1, n - 1))
    k = data.draw(st.integers(1, n - 1))
    if abs(j - k) >= 2:
        assert braid_equal(BraidWord(n, (j, k)), BraidWord(n, (k, j)))
    assert braid_equal(BraidWord(n, (j, -j)), BraidWord(n, ()))


def test_compose_order():
    a, b = BraidWord(3, (1,)), BraidWord(3, (2,))
    assert compose([a, b]).letters == (1, 2)
