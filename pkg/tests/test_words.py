"""Words, free reduction, serialization, and the permutation shadow."""

import pytest
from hypothesis import given, strategies as st

from superelliptic import Context, Permutation, Word, exponent_sum, psi, word_parse
from superelliptic.errors import ContextMismatchError, WordSyntaxError
from superelliptic.generators import gen_h, gen_r, gen_r1

CTX = Context(2, 3)


def wordstrat(ctx=CTX, max_size=30):
    top = ctx.num_arcs
    return st.lists(
        st.integers(-top, top).filter(lambda x: x != 0), max_size=max_size
    ).map(lambda ls: Word.from_letters(ctx, ls))


class TestParsing:
    def test_parse_h1_letters(self):
        w = word_parse("s1 s2 s1", CTX)
        assert w.letters == (1, 2, 1)
        assert len(w) == 3

    def test_parse_cancellation(self):
        assert word_parse("s1 s1^-1", CTX).is_identity

    def test_parse_no_reduction_on_same_sign(self):
        assert word_parse("s3^-1 s3^-1", CTX).letters == (-3, -3)

    def test_parse_rejects_garbage(self):
        for bad in ("sigma1", "s0", "s99", "s2^2", "s-1"):
            with pytest.raises(WordSyntaxError):
                word_parse(bad, CTX)

    @given(wordstrat())
    def test_roundtrip(self, w):
        assert word_parse(w.to_text(), CTX) == w

    def test_pairs_view(self):
        w = word_parse("s1 s3^-1", CTX)
        assert w.pairs == ((1, 1), (3, -1))


class TestGroupOps:
    def test_invert_reverses_and_flips(self):
        w = word_parse("s1 s2", CTX)
        assert w.inverse().letters == (-2, -1)
        h1 = word_parse("s1 s2 s1", CTX)
        assert h1.inverse().letters == (-1, -2, -1)
        assert Word.identity(CTX).inverse().is_identity

    def test_concat_single_cancellation(self):
        u = word_parse("s1 s2", CTX)
        v = word_parse("s2^-1 s3", CTX)
        assert (u * v).letters == (1, 3)

    def test_concat_context_mismatch(self):
        with pytest.raises(ContextMismatchError):
            word_parse("s1", CTX) * word_parse("s1", Context(3, 3))

    @given(wordstrat())
    def test_word_times_inverse_is_identity(self, w):
        assert (w * w.inverse()).is_identity

    @given(wordstrat(max_size=12), st.integers(-3, 3))
    def test_power_exponent_sum(self, w, e):
        assert exponent_sum(w**e) == e * exponent_sum(w)


class TestExponentSum:
    def test_examples(self):
        assert exponent_sum(word_parse("s1 s2 s1", CTX)) == 3
        assert exponent_sum(Word.identity(CTX)) == 0
        # adjacent twist word is sigma_i^2
        from superelliptic.generators import gen_t

        assert exponent_sum(gen_t(1, 2, CTX)) == 2

    @given(wordstrat(), wordstrat())
    def test_additive_under_concat(self, u, v):
        assert exponent_sum(u * v) == exponent_sum(u) + exponent_sum(v)


class TestPsi:
    def test_sigma_is_adjacent_transposition(self):
        w = word_parse("s2", CTX)
        assert psi(w, CTX) == Permutation.transposition(CTX.num_points, 2, 3)

    def test_h_is_distance_two_transposition(self):
        for i in range(1, 2 * CTX.n + 1):
            assert psi(gen_h(i, CTX), CTX) == Permutation.transposition(
                CTX.num_points, i, i + 2
            )

    def test_rotation_is_full_cycle(self):
        images = psi(gen_r1(CTX), CTX).images
        assert images == tuple(list(range(2, CTX.num_points + 1)) + [1])

    def test_half_turn_reverses(self):
        images = psi(gen_r(CTX), CTX).images
        assert images == tuple(CTX.num_points + 1 - x for x in range(1, CTX.num_points + 1))

    @given(wordstrat(max_size=14), wordstrat(max_size=14))
    def test_homomorphism(self, u, v):
        assert psi(u * v, CTX) == psi(u, CTX).compose(psi(v, CTX))

    @given(wordstrat(max_size=14))
    def test_inverse_words(self, w):
        assert psi(w.inverse(), CTX) == psi(w, CTX).inverse()


class TestPermutation:
    def test_serialization_roundtrip(self):
        p = Permutation((2, 1, 4, 3))
        assert p.to_text() == "[2,1,4,3]"
        assert Permutation.from_text(p.to_text()) == p

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation((1, 1, 3))

    def test_compose_applies_rightmost_first(self):
        a = Permutation.transposition(3, 1, 2)
        b = Permutation.transposition(3, 2, 3)
        assert a.compose(b)(3) == a(b(3)) == 1
