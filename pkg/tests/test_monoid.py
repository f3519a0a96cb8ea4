from itertools import product as cartesian

import pytest
from hypothesis import given

from hookmonoid.monoid import Hook1, durfee_split, durfee_square, factor, peel_inner, product, product_all
from hookmonoid.partitions import EMPTY, Partition, conjugate, delta_of, hook_type

from conftest import partitions, partitions_up_to

P = Partition


def test_hook1_as_partition():
    assert Hook1(2, 1).as_partition() == P((3, 1))
    assert Hook1(0, 0).as_partition() == P((1,))
    assert Hook1(1, 1).size == 3
    assert Hook1.from_partition(P((3, 1, 1))) == Hook1(2, 2)
    with pytest.raises(ValueError):
        Hook1.from_partition(P((2, 2)))
    with pytest.raises(ValueError):
        Hook1(-1, 0)


class TestProduct:
    def test_dot_times_dot_is_square(self):
        assert product(P((1,)), P((1,))) == P((2, 2))

    def test_hook_times_dot(self):
        assert product(P((3, 1)), P((1,))) == P((4, 2, 1))

    def test_identity_example(self):
        assert product(EMPTY, P((5, 4, 3, 2, 2))) == P((5, 4, 3, 2, 2))

    def test_inner_hook_insertion(self):
        # k = 3, t = 1 inserted into the 2-hook (2,2): weight 4 + 4*2 + 3
        assert product(P((2, 2)), Hook1(arm=1, leg=1)) == P((4, 4, 4, 3))

    def test_squares_are_powers_of_a_dot(self):
        for s in range(6):
            assert product_all([P((1,))] * s) == durfee_square(s)

    def test_identity(self):
        for a in partitions_up_to(12):
            assert product(a, EMPTY) == a
            assert product(EMPTY, a) == a

    def test_associative(self):
        small = list(partitions_up_to(6))
        for a, b, c in cartesian(small, repeat=3):
            assert product(product(a, b), c) == product(a, product(b, c))

    def test_laws_on_pairs(self):
        small = list(partitions_up_to(8))
        for a, b in cartesian(small, repeat=2):
            ab = product(a, b)
            assert ab.durfee == a.durfee + b.durfee
            assert ab.weight == a.weight + b.weight + a.durfee * b.outer_span
            assert conjugate(ab) == product(conjugate(a), conjugate(b))
            # o(a*b) = o(a) + o(b) + 1, with o(empty) + 1 = 0
            assert ab.outer_span == a.outer_span + b.outer_span

    def test_inner_hook_weight_law(self):
        for a in partitions_up_to(12):
            if not a:
                continue
            n, r = a.weight, a.durfee
            for k in range(1, 6):
                for t in range(k):
                    h = Hook1(arm=k - 1 - t, leg=t)
                    ah = product(a, h)
                    assert ah.weight == n + (k + 1) * r + k
                    assert ah.durfee == r + 1
                    assert peel_inner(ah) == (a, h)

    def test_hook_type_product_law(self):
        small = [p for p in partitions_up_to(7) if p]
        for a, b in cartesian(small, repeat=2):
            k1 = hook_type(b)[0]
            assert hook_type(product(a, b)) == tuple(k + k1 + 1 for k in hook_type(a)) + hook_type(b)


class TestPeel:
    @pytest.mark.parametrize(
        "p, q, h",
        [((4, 4, 4, 3), (2, 2), Hook1(1, 1)), ((2, 2), (1,), Hook1(0, 0)), ((7,), (), Hook1(6, 0))],
    )
    def test_examples(self, p, q, h):
        assert peel_inner(P(p)) == (P(q), h)

    def test_empty(self):
        with pytest.raises(ValueError):
            peel_inner(EMPTY)

    @given(partitions())
    def test_inverts_product(self, p):
        if p:
            q, h = peel_inner(p)
            assert product(q, h) == p


class TestFactor:
    def test_square(self):
        assert factor(P((2, 2))) == [Hook1(0, 0), Hook1(0, 0)]

    def test_small(self):
        assert factor(P((4, 2, 1))) == [Hook1(2, 1), Hook1(0, 0)]
        assert [h.size for h in factor(P((4, 4, 2, 1)))] == [2, 4]
        assert factor(EMPTY) == []

    def test_unique_factorization_up_to_15(self):
        for p in partitions_up_to(15):
            hooks = factor(p)
            assert product_all(hooks) == p
            if p:
                assert tuple(h.size for h in hooks) == delta_of(hook_type(p))

    def test_hook_sequences_multiply_injectively(self):
        # every hook sequence whose product weighs at most 12, built outward
        seen = {}

        def grow(seq, p):
            key = p.parts
            assert key not in seen, f"{seq} and {seen[key]} give the same partition"
            seen[key] = seq
            for k in range(1, 13):
                for t in range(k):
                    h = Hook1(k - 1 - t, t)
                    q = product(p, h)
                    if q.weight <= 12:
                        grow(seq + (h,), q)

        grow((), EMPTY)
        # and they exhaust every partition of weight <= 12
        assert len(seen) == sum(1 for _ in partitions_up_to(12))

    def test_factor_is_a_homomorphism(self):
        small = list(partitions_up_to(8))
        for a, b in cartesian(small, repeat=2):
            assert factor(product(a, b)) == factor(a) + factor(b)


class TestDurfeeSplit:
    def test_examples(self):
        assert durfee_split(P((2, 2))) == (EMPTY, 2)
        # difference sequence (4, 1): one trailing dot, leaving the hook (3,1)
        assert durfee_split(P((4, 2, 1))) == (P((3, 1)), 1)
        assert durfee_split(P((7,))) == (P((7,)), 0)
        assert durfee_split(EMPTY) == (EMPTY, 0)

    def test_split_is_a_factorization(self):
        for p in partitions_up_to(14):
            q, s = durfee_split(p)
            assert product(q, durfee_square(s)) == p
            # q has no square as right factor
            assert not factor(q) or factor(q)[-1] != Hook1(0, 0)
            if p.is_square():
                assert (q, s) == (EMPTY, p.durfee)
