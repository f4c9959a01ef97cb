"""Parity classes, the parity subgroup, and curve monodromy."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from superelliptic import (
    Context,
    CurveClass,
    ParityClass,
    Permutation,
    Word,
    curve_monodromy,
    curve_parse,
    gamma_curve,
    in_W,
    is_liftable_word,
    parity,
    psi,
    w_parity_map,
    w_size,
)
from superelliptic.errors import WordSyntaxError
from superelliptic.generators import gen_F, gen_h, gen_r, gen_r1, gen_t
from superelliptic.liftability import enumerate_W

CTX = Context(2, 3)


class TestParity:
    def test_identity_preserves(self):
        assert parity(Permutation.identity(CTX.num_points), CTX) is ParityClass.PRESERVING

    def test_h_image_preserves(self):
        for i in range(1, 2 * CTX.n + 1):
            assert parity(psi(gen_h(i, CTX), CTX), CTX) is ParityClass.PRESERVING

    def test_adjacent_transposition_is_neither(self):
        for n in (1, 2, 3):
            ctx = Context(n, 3)
            assert parity(psi(Word(ctx, (1,)), ctx), ctx) is ParityClass.NEITHER

    def test_rotations_reverse(self):
        assert parity(psi(gen_r(CTX), CTX), CTX) is ParityClass.REVERSING
        assert parity(psi(gen_r1(CTX), CTX), CTX) is ParityClass.REVERSING

    def test_parity_map_values(self):
        assert w_parity_map(psi(gen_h(1, CTX), CTX), CTX) == 0
        assert w_parity_map(psi(gen_r(CTX), CTX), CTX) == 1
        rr = psi(gen_r(CTX), CTX)
        assert w_parity_map(rr.compose(rr), CTX) == 0

    def test_parity_map_rejects_neither(self):
        with pytest.raises(ValueError):
            w_parity_map(psi(Word(CTX, (1,)), CTX), CTX)

    def test_parity_map_is_homomorphism(self):
        rng = random.Random(3)
        members = list(enumerate_W(Context(1, 3)))
        ctx = Context(1, 3)
        for _ in range(200):
            a, b = rng.choice(members), rng.choice(members)
            assert w_parity_map(a.compose(b), ctx) == (
                w_parity_map(a, ctx) + w_parity_map(b, ctx)
            ) % 2


class TestWSize:
    @pytest.mark.parametrize("n,expected", [(1, 8), (2, 72), (3, 1152)])
    def test_formula_matches_enumeration(self, n, expected):
        ctx = Context(n, 3)
        assert w_size(ctx) == expected
        count = sum(1 for _ in enumerate_W(ctx))
        assert count == expected

    def test_index_in_symmetric_group(self):
        import math

        ctx = Context(1, 3)
        assert math.factorial(4) // w_size(ctx) == 3

    def test_kernel_generated_by_double_transpositions(self):
        # elements of trivial parity map = closure of the (i i+2) swaps
        for n in (1, 2):
            ctx = Context(n, 3)
            kernel = {
                p.images for p in enumerate_W(ctx) if w_parity_map(p, ctx) == 0
            }
            gens = [
                Permutation.transposition(ctx.num_points, i, i + 2)
                for i in range(1, 2 * n + 1)
            ]
            seen = {Permutation.identity(ctx.num_points).images}
            frontier = [Permutation.identity(ctx.num_points)]
            while frontier:
                cur = frontier.pop()
                for g in gens:
                    nxt = g.compose(cur)
                    if nxt.images not in seen:
                        seen.add(nxt.images)
                        frontier.append(nxt)
            assert seen == kernel


class TestLiftableWords:
    def test_named_generators_lift(self):
        for w in (gen_h(1, CTX), gen_t(2, 4, CTX), gen_r(CTX), gen_r1(CTX), gen_F(CTX)):
            assert is_liftable_word(w, CTX)

    def test_half_twist_does_not_lift(self):
        assert not is_liftable_word(Word(CTX, (1,)), CTX)

    def test_closure_under_product_and_inverse(self):
        rng = random.Random(9)
        pool = [gen_h(i, CTX) for i in range(1, 5)] + [gen_r1(CTX), gen_t(1, 2, CTX)]
        for _ in range(300):
            u = Word.identity(CTX)
            v = Word.identity(CTX)
            for _ in range(rng.randrange(1, 4)):
                u = u * rng.choice(pool) ** rng.choice((-1, 1))
                v = v * rng.choice(pool) ** rng.choice((-1, 1))
            assert is_liftable_word(u * v, CTX)
            assert is_liftable_word(u.inverse(), CTX)

    def test_in_W_matches_parity(self):
        assert in_W(psi(gen_r(CTX), CTX), CTX)
        assert not in_W(psi(Word(CTX, (1,)), CTX), CTX)


class TestCurves:
    def test_parse_and_roundtrip(self):
        c = curve_parse("x1 x2^-1", CTX)
        assert c.letters == (1, -2)
        assert curve_parse(c.to_text(), CTX) == c
        with pytest.raises(WordSyntaxError):
            curve_parse("y1", CTX)
        with pytest.raises(WordSyntaxError):
            curve_parse("x9", CTX)

    def test_cyclic_reduction(self):
        c = CurveClass.from_letters(CTX, (3, 1, 2, -3))
        assert c.letters == (1, 2)

    def test_adjacent_curves_lift(self):
        for k in (3, 4, 5):
            ctx = Context(2, k)
            for i in range(1, ctx.num_points):
                assert curve_monodromy(gamma_curve(i, i + 1, ctx), ctx) == 0

    def test_single_puncture_loop_does_not_lift(self):
        for k in (3, 4, 5):
            ctx = Context(2, k)
            assert curve_monodromy(CurveClass(ctx, (1,)), ctx) == 1 % k != 0

    def test_gamma_1_4(self):
        assert curve_monodromy(gamma_curve(1, 4, CTX), CTX) == 0

    @settings(max_examples=60)
    @given(
        st.lists(
            st.integers(-6, 6).filter(lambda x: x != 0), min_size=1, max_size=10
        ),
        st.integers(0, 9),
    )
    def test_monodromy_cyclic_and_inversion(self, letters, shift):
        c = CurveClass.from_letters(CTX, letters)
        m = curve_monodromy(c, CTX)
        assert curve_monodromy(c.cycled(shift), CTX) == m
        assert curve_monodromy(c.inverse(), CTX) == (-m) % CTX.k
