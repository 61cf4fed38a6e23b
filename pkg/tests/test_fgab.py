import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from autcentral.fgab import (
    INF,
    FgAbelian,
    IntMatrix,
    direct_product,
    from_relations,
    is_isomorphic,
    normalize,
    smith_normal_form,
    summary,
)
from oracles import abelians, minor_gcd


def fa(free=0, **parts):
    return FgAbelian(free, tuple(sorted((int(p[1:]), tuple(e)) for p, e in parts.items())))


class TestCanonicalForm:
    def test_normalize_examples(self):
        assert normalize([6, 4]) == fa(p2=(2, 1), p3=(1,))
        assert normalize([INF, 1]) == FgAbelian(1)
        assert normalize([8, 8, INF, INF]) == fa(2, p2=(3, 3))

    def test_normalize_rejects_bad_orders(self):
        for bad in ([0], [-3], [2.5]):
            with pytest.raises(ValueError):
                normalize(bad)

    @pytest.mark.parametrize("free, parts", [
        (-1, ()),
        (0, ((3, (1,)), (2, (1,)))),
        (0, ((4, (1,)),)),
        (0, ((2, ()),)),
        (0, ((2, (1, 2)),)),
        (0, ((2, (0,)),)),
        (0, ((2, (1,)), (2, (1,)))),
    ])
    def test_constructor_validates(self, free, parts):
        with pytest.raises(ValueError):
            FgAbelian(free, parts)

    def test_trivial(self):
        T = normalize([])
        assert T == FgAbelian() and T.is_trivial and T.order == 1 and str(T) == "1"

    def test_direct_product_examples(self):
        assert direct_product(fa(p2=(2,)), fa(p2=(1,))) == fa(p2=(2, 1))
        assert direct_product(FgAbelian(1), FgAbelian()) == FgAbelian(1)
        assert direct_product(fa(p2=(1,), p3=(1,)), fa(p2=(3,))) == fa(p2=(3, 1), p3=(1,))

    def test_is_isomorphic_examples(self):
        assert is_isomorphic(fa(p2=(2, 1)), normalize([2, 4]))
        assert not is_isomorphic(FgAbelian(1), fa(p2=(1,)))
        assert not is_isomorphic(normalize([4, 2]), normalize([8]))

    def test_summary_examples(self):
        s = summary(fa(p2=(3, 1), p3=(2,)))
        assert (set(s.primes), s.exponent, s.torsion_rank) == ({2, 3}, 72, 3)
        s = summary(FgAbelian(2))
        assert (set(s.primes), s.exponent, s.torsion_rank, s.free_rank) == (set(), 1, 0, 2)
        s = summary(fa(p5=(1, 1, 1)))
        assert (set(s.primes), s.exponent, s.torsion_rank) == ({5}, 5, 3)

    def test_invariant_factors(self):
        assert normalize([4, 6]).invariant_factors() == [2, 12]
        assert normalize([INF]).invariant_factors() == []

    @given(abelians())
    def test_normalize_idempotent(self, A):
        assert normalize(A.cyclic_orders() + [INF] * A.free_rank) == A
        assert normalize(A.invariant_factors() + [INF] * A.free_rank) == A

    @given(abelians(), abelians(), abelians())
    def test_product_laws(self, A, B, C):
        assert is_isomorphic(direct_product(A, B), direct_product(B, A))
        assert is_isomorphic(direct_product(direct_product(A, B), C), direct_product(A, direct_product(B, C)))
        assert direct_product(A, FgAbelian()) == A

    @given(abelians(max_free=0))
    def test_order_is_product_of_cyclic_orders(self, A):
        assert A.order == math.prod(A.cyclic_orders())


def check_snf(A: IntMatrix):
    U, D, V = smith_normal_form(A)
    assert U @ A @ V == D
    assert abs(U.det()) == 1 and abs(V.det()) == 1
    assert D.is_diagonal()
    d = D.diagonal()
    assert all(x >= 0 for x in d)
    for a, b in zip(d, d[1:]):
        assert (b == 0) if a == 0 else (b % a == 0)
    rows = A.to_rows()
    for k in range(1, min(3, A.rows, A.cols) + 1):
        assert math.prod(d[:k]) == minor_gcd(rows, k)
    return d


class TestSmithNormalForm:
    def test_examples(self):
        assert check_snf(IntMatrix.from_rows([[2, 4], [6, 8]])) == [2, 4]
        assert check_snf(IntMatrix.identity(3)) == [1, 1, 1]
        U, D, V = smith_normal_form(IntMatrix.zeros(2, 2))
        assert D == IntMatrix.zeros(2, 2)

    def test_hand_example(self):
        A = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        assert check_snf(A) == [2, 6, 12]

    def test_non_square_and_degenerate_shapes(self):
        assert check_snf(IntMatrix.from_rows([[0, 0, 5]])) == [5]
        assert check_snf(IntMatrix.from_rows([[3], [0], [-9]])) == [3]
        assert check_snf(IntMatrix.from_rows([[1, 2], [2, 4]])) == [1, 0]

    def test_large_entries_stay_exact(self):
        big = 10 ** 30
        d = check_snf(IntMatrix.from_rows([[big, 0], [0, big * 3 + 1]]))
        assert d[0] == 1 and d[1] == big * (big * 3 + 1)

    def test_random_batch(self):
        rng = random.Random(20240611)
        for _ in range(200):
            A = IntMatrix.random(rng.randint(1, 6), rng.randint(1, 6), 20, rng)
            check_snf(A)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 4), st.integers(1, 4), st.data())
    def test_property(self, m, n, data):
        rows = data.draw(st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=m, max_size=m))
        check_snf(IntMatrix.from_rows(rows))


class TestFromRelations:
    def test_examples(self):
        assert from_relations(2, IntMatrix.from_rows([[2, 0], [0, 3]])) == fa(p2=(1,), p3=(1,))
        assert from_relations(2, IntMatrix.zeros(0, 2)) == FgAbelian(2)
        assert from_relations(3, IntMatrix.from_rows([[2, 4, 6]])) == fa(2, p2=(1,))

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            from_relations(3, IntMatrix.from_rows([[1, 2]]))

    @settings(max_examples=50, deadline=None)
    @given(st.data())
    def test_invariant_under_row_operations(self, data):
        n = data.draw(st.integers(1, 4))
        rows = data.draw(st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=1, max_size=4))
        base = from_relations(n, IntMatrix.from_rows(rows))
        shuffled = data.draw(st.permutations(rows))
        assert from_relations(n, IntMatrix.from_rows(shuffled)) == base
        if len(rows) > 1:
            i, j = data.draw(st.sampled_from([(a, b) for a in range(len(rows)) for b in range(len(rows)) if a != b]))
            q = data.draw(st.integers(-5, 5))
            mixed = [r[:] for r in rows]
            mixed[i] = [x + q * y for x, y in zip(mixed[i], mixed[j])]
            assert from_relations(n, IntMatrix.from_rows(mixed)) == base
