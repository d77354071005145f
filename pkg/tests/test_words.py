from hypothesis import given, strategies as st

from pi1lines.words import (
    commutator,
    cyclic_canonical,
    exponent_sum,
    free_reduce,
    inverse,
    partially_commutative_reduce,
)

letters = st.integers(min_value=-4, max_value=4).filter(bool)
words = st.lists(letters, max_size=20).map(tuple)


def test_free_reduce_examples():
    assert free_reduce((1, -1)) == ()
    assert free_reduce((2, 1, -1, -2, 3)) == (3,)
    assert free_reduce((1, 2, -1)) == (1, 2, -1)


def test_cyclic_canonical_examples():
    assert cyclic_canonical((2, 1, -2, -1)) == cyclic_canonical((1, 2, -1, -2))
    assert cyclic_canonical((1, 2, -1)) == (2,)
    assert cyclic_canonical(()) == ()


def test_exponent_sum_examples():
    assert exponent_sum((1, 2, -1, -1), 1) == -1
    assert exponent_sum(commutator((1, 2), (3,)), 3) == 0
    assert exponent_sum((), 1) == 0


@given(words)
def test_free_reduce_idempotent_and_reduced(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert all(a != -b for a, b in zip(r, r[1:]))


@given(words, words)
def test_inverse_cancels(u, v):
    assert free_reduce(u + inverse(u)) == ()
    assert inverse(free_reduce(u + v)) == free_reduce(inverse(v) + inverse(u))


@given(words, st.integers(min_value=0, max_value=19))
def test_cyclic_canonical_invariant_under_rotation_and_inversion(w, k):
    w = free_reduce(w)
    c = cyclic_canonical(w)
    assert cyclic_canonical(c) == c
    assert cyclic_canonical(inverse(w)) == c
    if w:
        k %= len(w)
        assert cyclic_canonical(w[k:] + w[:k]) == c


@given(words, words)
def test_cyclic_canonical_invariant_under_conjugation(w, c):
    assert cyclic_canonical(c + w + inverse(c)) == cyclic_canonical(w)


def test_partially_commutative_reduce_strips_commuting_conjugator():
    # g = 4 commutes with 2 and 3: [x3 x2 x1 x2^-1 x3^-1, x4] ~ [x1, x4]
    conj = (3, 2)
    rel = commutator(conj + (1,) + inverse(conj), (4,))
    commutes = lambda u, v: {u, v} in ({2, 4}, {3, 4})
    reduced = partially_commutative_reduce(rel, commutes, cyclic=True)
    assert cyclic_canonical(reduced) == cyclic_canonical(commutator((1,), (4,)))


def test_partially_commutative_reduce_respects_non_commuting():
    rel = commutator((2, 1, -2), (3,))
    assert cyclic_canonical(partially_commutative_reduce(rel, lambda u, v: False, cyclic=True)) == cyclic_canonical(rel)


@given(words)
def test_partially_commutative_reduce_everything_commutes_gives_abelian_normal_form(w):
    reduced = partially_commutative_reduce(w, lambda u, v: True)
    for g in range(1, 5):
        assert exponent_sum(reduced, g) == exponent_sum(w, g)
        assert sum(1 for x in reduced if abs(x) == g) == abs(exponent_sum(w, g))
