"""Delta-ring checks on small group algebras and field classification."""

import pytest

from mersroot import backend
from mersroot import delta_rings as dr
from mersroot import galgebra as ga
from mersroot._smallfield import SmallField, is_prime_power, small_field
from mersroot.errors import BudgetExceededError


class TestSmallField:
    def test_prime_power_detection(self):
        assert is_prime_power(2) and is_prime_power(8) and is_prime_power(243)
        assert not is_prime_power(6) and not is_prime_power(1) and not is_prime_power(100)

    def test_fixed_moduli(self):
        assert small_field(4).modulus == [1, 1, 1]  # x**2 + x + 1
        assert small_field(8).modulus == [1, 1, 0, 1]  # x**3 + x + 1

    def test_gf8_sample_products(self):
        f8 = small_field(8)
        # x * x * x = x + 1 under x**3 + x + 1.
        assert f8.mul(0b010, 0b100) == 0b011
        assert f8.mul(f8.mul(2, 2), 2) == 3

    def test_inverses(self):
        for q in (2, 3, 4, 5, 7, 8, 9, 16, 25, 27):
            field = small_field(q)
            for a in range(1, q):
                assert field.mul(a, field.inv(a)) == 1

    def test_multiplicative_group_order(self):
        for q in (4, 8, 9, 27):
            field = small_field(q)
            orders = {field.element_order(a) for a in range(1, q)}
            assert max(orders) == q - 1  # cyclic
            assert all((q - 1) % o == 0 for o in orders)

    def test_axiom_check_runs_on_construction(self):
        SmallField(16)  # would raise on any table defect

    def test_rejects_non_prime_power(self):
        with pytest.raises(ValueError):
            small_field(12)


class TestDeltaRing:
    def test_diagonal_property_examples(self):
        assert dr.is_delta_n_ring(2, (2, 1), 2)
        assert dr.is_delta_n_ring(3, (2, 1), 2)

    def test_mersenne_field_example(self):
        assert dr.is_delta_n_ring(4, (3, 1), 3)

    def test_non_mersenne_failure(self):
        # GF(2)[C_5] has a unit of order 15.
        assert not dr.is_delta_n_ring(2, (5, 1), 5)
        units = ga.enumerate_units(5)
        orders = set()
        for u in units:
            k, v = 1, u
            while v.bits != 1:
                v = v * u
                k += 1
            orders.add(k)
        assert 15 in orders

    def test_diagonal_ranks(self):
        for r in (1, 2, 3):
            assert dr.is_delta_n_ring(2, (2, r), 2)
            assert dr.is_delta_n_ring(3, (2, r), 2)

    def test_mersenne_ranks_within_budget(self):
        assert dr.is_delta_n_ring(2, (3, 1), 3)
        assert dr.is_delta_n_ring(2, (3, 2), 3)
        assert dr.is_delta_n_ring(4, (3, 2), 3)
        assert dr.is_delta_n_ring(2, (7, 1), 7)

    def test_non_mersenne_primes_fail(self):
        for p in (5, 11, 13):
            assert not dr.is_delta_n_ring(2, (p, 1), p)

    def test_trivial_group(self):
        assert dr.is_delta_n_ring(2, (1, 0), 1)
        assert dr.is_delta_n_ring(3, (1, 0), 2)
        assert not dr.is_delta_n_ring(4, (1, 0), 1)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            dr.is_delta_n_ring(2, (29, 1), 29)

    @pytest.mark.parametrize("name", backend.available_backends())
    def test_backends_agree_on_census(self, name):
        with backend.forced(name):
            # GF(3)[C_2^2] splits into GF(3)**4, so 2**4 units, all of
            # order dividing 2; GF(4)[C_3] into GF(4)**3, 3**3 units.
            assert dr.unit_census(3, (2, 2), 2) == (16, 0)
            assert dr.unit_census(4, (3, 1), 3) == (27, 0)
            # GF(2)[C_5] has unit group C_15: five solutions of u**5 = 1.
            assert dr.unit_census(2, (5, 1), 5) == (15, 10)


class TestStrictness:
    def test_examples(self):
        assert dr.is_strict_delta_n(3, (2, 1), 2)
        assert dr.is_strict_delta_n(2, (1, 0), 1)
        assert dr.is_strict_delta_n(4, (3, 1), 3)

    def test_f2c2_is_strict_at_2(self):
        # Units of GF(2)[C_2] are {1, x}; x has order 2, so delta = 1 fails.
        assert dr.is_strict_delta_n(2, (2, 1), 2)

    def test_delta_one_fails_when_nontrivial_units_exist(self):
        assert not dr.is_delta_n_ring(2, (3, 1), 1)


class TestFieldClassification:
    def test_examples(self):
        assert dr.delta_field_classification(2) == [2, 3]
        assert dr.delta_field_classification(7) == [2, 8]
        assert dr.delta_field_classification(5) == [2]

    def test_rejects_composite_delta(self):
        with pytest.raises(ValueError):
            dr.delta_field_classification(6)

    def test_cross_check_by_enumeration(self):
        for delta in (2, 3, 5, 7, 11, 13):
            assert dr.enumerate_delta_fields(delta) == dr.delta_field_classification(delta)


class TestFrobeniusFixed:
    def test_examples(self):
        assert dr.frobenius_fixed_check(4, (3, 1))
        assert not dr.frobenius_fixed_check(2, (2, 1))  # (1+x)**3 = 0

    def test_gf2_cube_counterexample(self):
        # In GF(2)[C_2]: (1+x)**2 = 1 + x**2 = 0, so (1+x)**3 = 0 != 1+x.
        f2c2_units = dr.unit_census(2, (2, 1), 2)
        assert f2c2_units == (2, 0)

    def test_enumerated_small_case(self):
        assert dr.frobenius_fixed_check(4, (3, 2))

    def test_rejects_mismatched_field(self):
        with pytest.raises(ValueError):
            dr.frobenius_fixed_check(3, (7, 1))


class TestProductSearchCrossCheck:
    def test_agrees_with_gcd_path(self):
        # q = 2, r = 1: product search vs the polynomial-gcd unit test.
        by_search = dr.units_by_product_search(2, (5, 1))
        by_gcd = [u.bits for u in ga.enumerate_units(5)]
        assert by_search == sorted(by_gcd)

    def test_agrees_with_regular_representation(self):
        for q, group in ((3, (2, 1)), (4, (3, 1))):
            by_search = dr.units_by_product_search(q, group)
            n_units, _ = dr.unit_census(q, group, q)
            assert len(by_search) == n_units
