"""Backend equivalence and free-reduction properties of the hot kernels."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from superelliptic import _kernels as K
from superelliptic.errors import BudgetError

letters = st.integers(min_value=-6, max_value=6).filter(lambda x: x != 0)
words = st.lists(letters, max_size=40).map(lambda ls: np.array(ls, dtype=np.int64))


def test_backend_selected():
    assert K.BACKEND in ("numba", "python")


@given(words)
def test_reduce_idempotent(w):
    once = K.reduce_word(w)
    twice = K.reduce_word(once)
    assert np.array_equal(once, twice)
    assert np.array_equal(once, K.reduce_word_py(w))


@given(words, words)
def test_concat_matches_reduce(a, b):
    ra, rb = K.reduce_word(a), K.reduce_word(b)
    merged = K.concat(ra, rb)
    assert np.array_equal(merged, K.reduce_word(np.concatenate([ra, rb])))
    assert np.array_equal(merged, K.concat_py(ra, rb))


@given(words, words, words)
def test_concat_associative_on_reduced(a, b, c):
    ra, rb, rc = (K.reduce_word(x) for x in (a, b, c))
    left = K.concat(K.concat(ra, rb), rc)
    right = K.concat(ra, K.concat(rb, rc))
    assert np.array_equal(left, right)


@settings(max_examples=60)
@given(
    st.lists(st.tuples(st.integers(1, 7), st.booleans()), max_size=18),
    st.integers(3, 8),
    st.booleans(),
)
def test_act_word_backends_agree(raw, m, sphere):
    top = m if sphere else m - 1
    word = np.array(
        [(i if pos else -i) for i, pos in raw if i <= top], dtype=np.int64
    )
    sphere_m = m if sphere else 0
    got = K.act_word(word, m, sphere_m, 10**6)
    ref = K.act_word_py(word, m, sphere_m, 10**6)
    assert len(got) == len(ref) == m
    for x, y in zip(got, ref):
        assert np.array_equal(x, y)


def test_act_word_inverse_cancels():
    # sigma_m then its inverse in the sphere model is the identity
    for m in (3, 5):
        word = np.array([m, -m], dtype=np.int64)
        for img, j in zip(K.act_word(word, m, m, 10**6), range(1, m + 1)):
            assert list(img) == [j]


def test_apply_subst_matches_python():
    rng = np.random.default_rng(11)
    for _ in range(50):
        m = 4
        images = [
            K.reduce_word(
                np.array(
                    [int(x) for x in rng.choice([-4, -3, -2, -1, 1, 2, 3, 4], size=rng.integers(1, 6))],
                    dtype=np.int64,
                )
            )
            for _ in range(m)
        ]
        images = [im if len(im) else np.array([1], dtype=np.int64) for im in images]
        offs = np.zeros(m + 1, dtype=np.int64)
        for j, im in enumerate(images, start=1):
            offs[j] = offs[j - 1] + len(im)
        flat = np.concatenate(images) if offs[-1] else np.zeros(0, dtype=np.int64)
        w = np.array([1, -2, 3, -4, 2], dtype=np.int64)
        a = K.apply_subst(w, flat, offs, 10**6)
        b = K.apply_subst_py(w, flat, offs, 10**6)
        assert np.array_equal(a, b)


def test_budget_is_enforced():
    # iterated sigma_1 conjugation grows x_2's image linearly; a tiny budget trips
    word = np.array([1] * 200, dtype=np.int64)
    with pytest.raises(BudgetError):
        K.act_word(word, 3, 0, budget=12)
    with pytest.raises(BudgetError):
        K.act_word_py(word, 3, 0, budget=12)
