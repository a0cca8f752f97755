"""Model-level behavior, frozen against independently computed values."""

from fractions import Fraction

import pytest

from divgraph.errors import (
    DegreeCapExceeded,
    ElementForeignToModel,
    InvalidBounds,
)
from divgraph.polynomials import QPoly
from divgraph.models import (
    AntimatterModel,
    D1Model,
    D2Model,
    DVRModel,
    NumericalMonoidModel,
    ZxQModel,
    build_model,
)
from divgraph.models.base import WindowSpec
from divgraph.values import Vec, vec


def window(model, **bounds):
    fr = bounds.pop("include_fractional", False)
    return model.enumerate_window(WindowSpec(model.id, bounds, include_fractional=fr))


class TestDVR:
    m = DVRModel()

    def test_window_and_labels(self):
        w = window(self.m, max_exponent=4)
        assert sorted(e.label for e in w) == ["pi", "pi^2", "pi^3", "pi^4"]

    def test_atoms_and_divisibility(self):
        pi = self.m.element(vec(1))
        pi3 = self.m.element(vec(3))
        assert self.m.is_atom(pi) and not self.m.is_atom(pi3)
        assert self.m.divides(pi, pi3)
        assert not self.m.divides(pi3, pi)
        assert self.m.quotient(pi3, pi) == self.m.element(vec(2))

    def test_fractional_labels(self):
        assert self.m.element(vec(-2)).label == "1/pi^2"

    def test_foreign_element(self):
        with pytest.raises(ElementForeignToModel):
            self.m.is_atom(D2Model().element(vec(1, 0)))


class TestAntimatter:
    m = AntimatterModel()

    def test_no_atoms(self):
        assert self.m.atoms() == ()
        x = self.m.element(Vec((), Fraction(1, 2)))
        assert not self.m.is_atom(x)
        assert not self.m.is_atomic_element(x)

    def test_window_count(self):
        # distinct positive rationals p/q <= 2 with q <= 5
        w = window(self.m, max_value=2, max_den=5)
        assert len(w) == 20

    def test_halving_chain(self):
        # every element is divisible by its half: no minimal divisors
        x = self.m.element(Vec((), Fraction(1, 2)))
        half = self.m.element(Vec((), Fraction(1, 4)))
        assert self.m.divides(half, x)

    def test_empty_window(self):
        with pytest.raises(InvalidBounds):
            window(self.m, max_value=0, max_den=1)


class TestNumericalMonoid:
    def test_membership_2_3(self):
        m = NumericalMonoidModel((2, 3))
        members = [n for n in range(1, 10) if m._member(n)]
        assert members == [2, 3, 4, 5, 6, 7, 8, 9]  # gap only at 1

    def test_membership_3_5_7(self):
        m = NumericalMonoidModel((3, 5, 7))
        gaps = [n for n in range(1, 13) if not m._member(n)]
        assert gaps == [1, 2, 4]

    def test_atoms_exclude_decomposable_generators(self):
        m = NumericalMonoidModel((2, 3, 5))
        assert [a.label for a in m.atoms()] == ["2", "3"]

    def test_six_has_two_lengths(self):
        m = NumericalMonoidModel((2, 3))
        six = m.element(vec(6))
        search = m.factorizations(six, 10)
        lengths = sorted(len(f.atoms) for f in search.found)
        assert lengths == [2, 3]  # 3+3 and 2+2+2

    def test_invalid_generators(self):
        with pytest.raises(InvalidBounds):
            NumericalMonoidModel(())


class TestD1:
    m = D1Model()

    def test_monoid_membership(self):
        assert self.m.contains_value(vec(0, rat=Fraction(1, 2)))
        assert not self.m.contains_value(vec(0, rat=Fraction(-1, 2)))
        assert self.m.contains_value(vec(1, rat=0))
        assert not self.m.contains_value(vec(1, rat=Fraction(-1, 3)))
        assert self.m.contains_value(vec(2, rat=Fraction(-7, 3)))

    def test_single_atom(self):
        assert [a.value for a in self.m.atoms()] == [vec(1)]
        assert self.m.is_atom(self.m.element(vec(1)))
        assert not self.m.is_atom(self.m.element(vec(0, rat=Fraction(1, 2))))

    def test_labels(self):
        assert self.m.element(vec(3, rat=Fraction(-1, 3))).label == "y^3/x^(1/3)"
        assert self.m.element(vec(0, rat=Fraction(1, 2))).label == "x^(1/2)"

    def test_quotient_value(self):
        g = self.m.element(vec(3, rat=Fraction(-1, 3)))
        f = self.m.element(vec(0, rat=Fraction(1, 2)))
        assert self.m.quotient(g, f).value == vec(3, rat=Fraction(-5, 6))

    def test_atomic_elements_are_y_powers(self):
        assert self.m.is_atomic_element(self.m.element(vec(2)))
        assert not self.m.is_atomic_element(
            self.m.element(vec(2, rat=Fraction(-1, 2)))
        )


class TestD2:
    m = D2Model()

    def test_monoid_membership(self):
        assert self.m.contains_value(vec(0, 1))
        assert not self.m.contains_value(vec(0, -1))
        assert not self.m.contains_value(vec(1, -1))
        assert self.m.contains_value(vec(2, -5))

    def test_two_atoms(self):
        assert sorted(a.label for a in self.m.atoms()) == ["x", "y"]

    def test_non_atomic_witness(self):
        w = self.m.element(vec(2, -1))
        assert w.label == "y^2/x"
        assert self.m.in_domain(w)
        assert not self.m.is_atomic_element(w)

    def test_window_size(self):
        assert len(window(self.m, k_max=3, j_max=2)) == 15


class TestZxQ:
    m = ZxQModel()

    def test_integer_primes_are_atoms(self):
        for n, expect in [(2, True), (3, True), (4, False), (6, False), (1, False)]:
            assert self.m.is_atom(self.m.from_coeffs((n,))) is expect

    def test_polynomial_atoms(self):
        assert self.m.is_atom(self.m.from_coeffs((1, 1)))  # 1 + x
        assert self.m.is_atom(self.m.from_coeffs((1, 0, 1)))  # 1 + x^2
        assert not self.m.is_atom(self.m.from_coeffs((2, 2)))  # 2(1 + x)
        assert not self.m.is_atom(self.m.from_coeffs((0, 1)))  # x

    def test_order_zero_is_atomic(self):
        assert self.m.is_atomic_element(self.m.from_coeffs((6,)))
        assert not self.m.is_atomic_element(self.m.from_coeffs((0, 1)))

    def test_x_divisible_by_every_prime(self):
        x = self.m.from_coeffs((0, 1))
        for p in (2, 3, 5, 7, 11):
            assert self.m.divides(self.m.from_coeffs((p,)), x)

    def test_unique_factorization_of_order_zero(self):
        e = self.m.from_coeffs((2, 2))  # 2(1 + x)
        search = self.m.factorizations(e, 10)
        assert len(search.found) == 1
        assert sorted(a.label for a in search.found[0].atoms) == ["1+x", "2"]

    def test_positive_order_has_no_factorization(self):
        x = self.m.from_coeffs((0, 1))
        search = self.m.factorizations(x, 10)
        assert search.found == () and not search.bound_too_small

    def test_canonical_class_representatives(self):
        # x/2 and 2x are distinct classes; x and -x are the same class
        assert self.m.from_coeffs((0, Fraction(1, 2))).label != self.m.from_coeffs((0, 2)).label
        assert self.m.from_coeffs((0, 1)) == self.m.from_coeffs((0, -1))

    def test_degree_cap(self):
        quartic = self.m.from_coeffs((1, 0, 0, 0, 1))
        with pytest.raises(DegreeCapExceeded):
            self.m.is_atom(quartic)
        declared = ZxQModel(declared_atoms=[QPoly.of(1, 0, 0, 0, 1)])
        assert declared.is_atom(declared.from_coeffs((1, 0, 0, 0, 1)))

    def test_window_rejects_fractional_constant(self):
        spec = WindowSpec(self.m.id, {"elements": [(Fraction(1, 2),)]})
        with pytest.raises(InvalidBounds):
            self.m.enumerate_window(spec)


class TestFactory:
    def test_known_kinds(self):
        assert build_model("dvr", {}).id == "dvr"
        assert build_model("numerical-monoid", {"generators": (2, 3)}).id == "numerical-monoid<2,3>"

    def test_unknown_kind(self):
        from divgraph.errors import UnknownModelKind

        with pytest.raises(UnknownModelKind):
            build_model("nope", {})
