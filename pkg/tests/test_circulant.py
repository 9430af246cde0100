"""Circulant matrices: the isomorphism with the algebra, dense oracles."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mersroot import backend
from mersroot import circulant as cm
from mersroot import galgebra as ga
from mersroot.errors import BudgetExceededError, ModulusMismatchError

SMALL_PRIMES = (3, 5, 7, 11, 13)


def elements(p):
    return st.integers(0, (1 << p) - 1).map(lambda bits: ga.GroupAlgebraElement(p, bits))


class TestIsomorphism:
    def test_dictionary_images(self):
        assert cm.to_circulant(ga.identity(7)) == cm.identity(7)
        assert cm.to_circulant(ga.from_bitstring(7, "111")).first_column == 0b111
        assert cm.to_circulant(ga.norm_element(7)) == cm.all_ones(7)

    def test_round_trip(self):
        a = ga.GroupAlgebraElement(11, 0b10010110101)
        assert cm.from_circulant(cm.to_circulant(a)) == a

    @settings(max_examples=100)
    @given(st.sampled_from((5, 13, 127)), st.data())
    def test_ring_homomorphism(self, p, data):
        a = data.draw(elements(p))
        b = data.draw(elements(p))
        assert cm.to_circulant(a * b) == cm.matmul(cm.to_circulant(a), cm.to_circulant(b))
        assert cm.to_circulant(a + b).first_column == (
            cm.to_circulant(a).first_column ^ cm.to_circulant(b).first_column
        )


class TestMaterialization:
    def test_identity_and_all_ones(self):
        dense = cm.materialize(cm.identity(5))
        assert dense == cm.DenseBitMatrix.identity(5)
        dense_j = cm.materialize(cm.all_ones(5))
        assert all(row == 0b11111 for row in dense_j.rows)

    def test_first_column_is_the_column(self):
        c = 0b1011001
        dense = cm.materialize(cm.CirculantMatrix(7, c))
        column0 = 0
        for i in range(7):
            column0 |= dense.entry(i, 0) << i
        assert column0 == c

    def test_columns_rotate_down(self):
        c = 0b1011001
        dense = cm.materialize(cm.CirculantMatrix(7, c))
        for j in range(7):
            column = 0
            for i in range(7):
                column |= dense.entry(i, j) << i
            rotated = ((c << j) | (c >> (7 - j))) & 0b1111111 if j else c
            assert column == rotated, j


class TestMatmul:
    def test_identity(self):
        a = cm.CirculantMatrix(7, 0b1011001)
        assert cm.matmul(a, cm.identity(7)) == a

    def test_star_product(self):
        lhs = cm.matmul(cm.CirculantMatrix(7, 0b11), cm.CirculantMatrix(7, 0b111))
        assert lhs.first_column == 0b1001

    def test_all_ones_idempotent(self):
        for p in (3, 7, 11):
            j = cm.all_ones(p)
            assert cm.matmul(j, j) == j

    def test_dimension_mismatch(self):
        with pytest.raises(ModulusMismatchError):
            cm.matmul(cm.identity(5), cm.identity(7))

    @settings(max_examples=60)
    @given(st.sampled_from((5, 13, 31)), st.data())
    def test_convolution_equals_dense_product(self, p, data):
        a = cm.CirculantMatrix(p, data.draw(st.integers(0, (1 << p) - 1)))
        b = cm.CirculantMatrix(p, data.draw(st.integers(0, (1 << p) - 1)))
        assert cm.materialize(cm.matmul(a, b)) == cm.materialize(a).matmul(cm.materialize(b))


class TestMatpow:
    def test_star_orders(self):
        assert cm.matpow(cm.CirculantMatrix(7, 0b111), 7) == cm.identity(7)
        assert cm.matpow(cm.CirculantMatrix(5, 0b111), 5) != cm.identity(5)

    def test_permutation_order_divides_p(self):
        for p in (5, 7, 11):
            perm = cm.CirculantMatrix(p, 0b10)
            assert cm.matpow(perm, p) == cm.identity(p)

    def test_matches_dense_power(self):
        a = cm.CirculantMatrix(7, 0b1011001)
        assert cm.materialize(cm.matpow(a, 6)) == cm.materialize(a).matpow(6)


class TestDeterminant:
    def test_examples(self):
        assert cm.det_gf2(cm.identity(7)) == 1
        assert cm.det_gf2(cm.all_ones(7)) == 0
        assert cm.det_gf2(cm.CirculantMatrix(7, 0b111)) == 1

    def test_matches_is_unit_exhaustively(self):
        for p in SMALL_PRIMES:
            for bits in range(1 << p):
                expected = ga.is_unit(ga.GroupAlgebraElement(p, bits))
                assert cm.det_gf2(cm.CirculantMatrix(p, bits)) == int(expected), (p, bits)

    def test_matches_is_unit_sampled_large(self):
        rng = random.Random(7)
        for p, draws in ((31, 10_000), (127, 500)):
            for _ in range(draws):
                bits = rng.getrandbits(p)
                expected = ga.is_unit(ga.GroupAlgebraElement(p, bits))
                assert cm.det_gf2(cm.CirculantMatrix(p, bits)) == int(expected)

    def test_dense_matrix_input(self):
        dense = cm.DenseBitMatrix(3, (0b011, 0b110, 0b101))
        assert cm.det_gf2(dense) == 0  # rows sum to zero


class TestNullspace:
    def test_examples(self):
        assert not cm.nullspace_contains_all_ones(cm.all_ones(7))
        assert cm.nullspace_contains_all_ones(cm.CirculantMatrix(7, 0b11))
        assert not cm.nullspace_contains_all_ones(cm.identity(7))

    def test_against_dense_matvec(self):
        for p in (3, 5, 7):
            ones = (1 << p) - 1
            for bits in range(1 << p):
                a = cm.CirculantMatrix(p, bits)
                literal = cm.materialize(a).mul_vector(ones) == 0
                assert cm.nullspace_contains_all_ones(a) == literal

    def test_matches_augmentation(self):
        for p in SMALL_PRIMES:
            for bits in range(1 << p):
                a = cm.CirculantMatrix(p, bits)
                expected = ga.augmentation(cm.from_circulant(a)) == 0
                assert cm.nullspace_contains_all_ones(a) == expected


class TestPermutationPredicate:
    def test_examples(self):
        assert cm.is_permutation_circulant(cm.identity(7))
        assert not cm.is_permutation_circulant(cm.all_ones(7))
        assert cm.is_permutation_circulant(cm.CirculantMatrix(7, 0b10))


class TestInvertibleScan:
    @pytest.mark.parametrize("name", backend.available_backends())
    def test_counts(self, name):
        with backend.forced(name):
            assert cm.enumerate_invertible_circulants(5) == 15
            assert cm.enumerate_invertible_circulants(7) == 49
            assert cm.enumerate_invertible_circulants(3) == 3

    def test_matches_unit_count(self):
        for p in SMALL_PRIMES:
            assert cm.enumerate_invertible_circulants(p) == ga.unit_count(p)

    def test_list_variant(self):
        count, matrices = cm.enumerate_invertible_circulants(5, return_list=True)
        assert count == 15 == len(matrices)
        assert all(cm.det_gf2(m) == 1 for m in matrices)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            cm.enumerate_invertible_circulants(17)

    @pytest.mark.parametrize("name", backend.available_backends())
    def test_scan_flags_against_direct_computation(self, name):
        with backend.forced(name):
            p = 7
            inv, pow_identity = cm.scan_flags(p)
            for c in range(1 << p):
                a = cm.CirculantMatrix(p, c)
                assert inv[c] == cm.det_gf2(a)
                expected_pow = int(inv[c]) and cm.matpow(a, p) == cm.identity(p)
                assert pow_identity[c] == int(expected_pow)

    def test_commutativity_spot_check(self):
        # The invertible circulants form an abelian group.
        rng = random.Random(3)
        for _ in range(40):
            a = cm.CirculantMatrix(11, rng.getrandbits(11))
            b = cm.CirculantMatrix(11, rng.getrandbits(11))
            assert cm.matmul(a, b) == cm.matmul(b, a)
