"""Model of the ring of polynomials with integer constant term and rational
higher coefficients.

Elements are canonical rational-function class representatives (the only
units are +-1, so a class is a sign-normalised reduced fraction).  The atoms
are the integer primes and the Q-irreducible polynomials with constant term
+-1; irreducibility is tested up to a configurable degree cap (rational-root
test for degrees 2-3) with an escape hatch for declared higher-degree atoms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from ..elements import Element
from ..errors import DegreeCapExceeded, EmptyWindow, InvalidBounds
from ..polynomials import ONE, QPoly, RationalFunction, factor_monic
from ..values import Ambient, Vec
from .base import DivisibilityModel, FactorSearch, Factorization, WindowSpec

_PROBE_PRIMES = (2, 3, 5)


def _prime_factors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class ZxQModel(DivisibilityModel):
    id = "zxq"
    ambient = Ambient(1)  # connectivity sees only the order at x = 0
    value_faithful = True

    def __init__(self, degree_cap: int = 3, declared_atoms: Iterable[QPoly] = ()):
        if degree_cap < 1:
            raise InvalidBounds("degree_cap must be >= 1")
        self.degree_cap = degree_cap
        self.declared_atoms = tuple(
            RationalFunction.from_poly(p) for p in declared_atoms
        )
        self._declared_labels = {rf.label() for rf in self.declared_atoms}

    # -- element plumbing ----------------------------------------------------

    def element_of(self, rf: RationalFunction) -> Element:
        return Element(self.id, rf.label(), symbolic=rf)

    def from_coeffs(self, coeffs: Iterable[Fraction]) -> Element:
        return self.element_of(RationalFunction.from_poly(QPoly.of(*coeffs)))

    def unit(self) -> Element:
        return self.element_of(RationalFunction.from_poly(ONE))

    def is_unit(self, a: Element) -> bool:
        self.check_owned(a)
        return a.symbolic.is_unit_class

    def in_domain(self, a: Element) -> bool:
        self.check_owned(a)
        return a.symbolic.in_domain()

    def divides(self, a: Element, b: Element) -> bool:
        self.check_owned(a, b)
        return b.symbolic.div(a.symbolic).in_domain()

    def quotient(self, a: Element, b: Element) -> Element:
        self.check_owned(a, b)
        return self.element_of(a.symbolic.div(b.symbolic))

    def multiply(self, a: Element, b: Element) -> Element:
        self.check_owned(a, b)
        return self.element_of(a.symbolic.mul(b.symbolic))

    # -- atoms ---------------------------------------------------------------

    def is_atom(self, a: Element) -> bool:
        self.check_owned(a)
        rf = a.symbolic
        if not rf.in_domain() or rf.is_unit_class:
            return False
        p = rf.to_poly()
        if p.degree == 0:
            n = p.constant
            return n.denominator == 1 and len(_prime_factors(int(n))) == 1 and abs(int(n)) > 1
        if abs(p.constant) != 1:
            return False
        if rf.label() in self._declared_labels:
            return True
        if p.degree == 1:
            return True
        if p.degree <= self.degree_cap:
            factors = factor_monic(p.monic(), self.degree_cap)
            return factors is not None and len(factors) == 1
        raise DegreeCapExceeded(
            f"irreducibility of degree-{p.degree} polynomial {rf.label()!r} exceeds the cap "
            f"({self.degree_cap}); declare it as an atom if it is one"
        )

    def is_atomic_element(self, a: Element) -> bool:
        self.check_owned(a)
        rf = a.symbolic
        return rf.in_domain() and not rf.is_unit_class and rf.order == 0

    def atoms(self) -> tuple[Element, ...]:
        # the atom set is infinite; consumers that need it are overridden below
        return ()

    def _atomize_order_zero(self, rf: RationalFunction) -> list[Element] | None:
        """Atoms whose product is the given order-0 integral class, or None
        when a factor above the degree cap resists factorisation."""
        p = rf.to_poly()
        assert rf.in_domain() and p.order == 0
        atoms: list[Element] = []
        if p.degree >= 1:
            factors = factor_monic(p.monic(), self.degree_cap)
            if factors is None:
                return None
            for f in [f for f in factors if f.degree >= 1]:
                scaled = f.scale(1 / f.constant)  # constant term 1: an atom form
                atoms.append(self.element_of(RationalFunction.from_poly(scaled)))
        for prime in _prime_factors(int(p.constant)):
            atoms.append(self.element_of(RationalFunction.from_poly(QPoly.const(prime))))
        return atoms

    def atom_divisors(self, a: Element) -> tuple[Element, ...]:
        self.check_owned(a)
        rf = a.symbolic
        if not rf.in_domain() or rf.is_unit_class:
            return ()
        if rf.order >= 1:
            # every integer prime divides; report a finite probe set
            return tuple(
                self.element_of(RationalFunction.from_poly(QPoly.const(p)))
                for p in _PROBE_PRIMES
            )
        atoms = self._atomize_order_zero(rf)
        if atoms is None:
            return ()
        uniq = {e.label: e for e in atoms}
        return tuple(sorted(uniq.values(), key=lambda e: e.label))

    def factorizations(self, a: Element, max_length: int) -> FactorSearch:
        self.check_owned(a)
        if max_length < 1:
            raise InvalidBounds("max_length must be >= 1")
        rf = a.symbolic
        if rf.is_unit_class or not rf.in_domain():
            return FactorSearch((), False)
        if rf.order >= 1:
            # atoms all have order 0, so no atom product can reach order >= 1;
            # emptiness is exact, not a bound artifact
            return FactorSearch((), False)
        atoms = self._atomize_order_zero(rf)
        if atoms is None:
            return FactorSearch((), True)
        if len(atoms) > max_length:
            return FactorSearch((), True)
        fac = Factorization(a, tuple(sorted(atoms, key=lambda e: e.label)))
        return FactorSearch((fac,), False)

    # -- window construction -------------------------------------------------

    def enumerate_window(self, spec: WindowSpec) -> tuple[Element, ...]:
        coeff_rows = spec.bounds.get("elements")
        if not coeff_rows:
            raise InvalidBounds("zxq windows are explicit: provide element coefficient rows")
        if spec.include_fractional:
            raise InvalidBounds("fractional windows are not supported for the zxq model")
        seen: dict[str, Element] = {}
        for row in coeff_rows:
            e = self.from_coeffs(row)
            if not self.in_domain(e):
                raise InvalidBounds(f"window element {e.label!r} has a non-integer constant term")
            if self.is_unit(e):
                continue
            seen[e.label] = e
        if not seen:
            raise EmptyWindow("zxq window is empty")
        return tuple(sorted(seen.values(), key=lambda e: e.label))

    # -- boundary and connectivity hooks -------------------------------------

    def boundary_probe(self, a: Element, window: frozenset[Element]) -> bool:
        self.check_owned(a)
        rf = a.symbolic
        if rf.order >= 1:
            # infinitely many primes divide, so some successor escapes any
            # finite window
            return True
        atoms = self._atomize_order_zero(rf)
        if atoms is None:
            return True  # unknown factors: be conservative
        for p in {e.label: e for e in atoms}.values():
            q = self.quotient(a, p)
            if not self.is_unit(q) and q not in window:
                return True
        return False

    def conn_value(self, a: Element) -> Vec:
        self.check_owned(a)
        return Vec((a.symbolic.order,))

    def atom_conn_values(self) -> tuple[Vec, ...]:
        return (Vec((0,)),)

    def certificate_atoms(self) -> tuple[Element, ...]:
        return (self.from_coeffs((2,)),)

    def _poly_atoms_and_constant(
        self, monic: QPoly
    ) -> tuple[list[Element], Fraction] | None:
        """Split a monic order-0 polynomial into constant-term-1 atoms and the
        leftover rational constant (the product of the factors' constants)."""
        atoms: list[Element] = []
        const = Fraction(1)
        if monic.degree >= 1:
            factors = factor_monic(monic, self.degree_cap)
            if factors is None:
                return None
            for f in factors:
                const *= f.constant
                atoms.append(
                    self.element_of(RationalFunction.from_poly(f.scale(1 / f.constant)))
                )
        return atoms, const

    def quotient_certificate(
        self, a: Element, b: Element
    ) -> tuple[tuple[Element, ...], tuple[Element, ...]] | None:
        """Atom multisets (P, Q) with a/b = prod(P)/prod(Q) up to a unit."""
        self.check_owned(a, b)
        r = a.symbolic.div(b.symbolic)
        if r.order != 0:
            return None
        up_split = self._poly_atoms_and_constant(r.num)
        down_split = self._poly_atoms_and_constant(r.den)
        if up_split is None or down_split is None:
            return None
        up, num_const = up_split
        down, den_const = down_split
        const = r.c * num_const / den_const
        prime = lambda p: self.element_of(RationalFunction.from_poly(QPoly.const(p)))
        up += [prime(p) for p in _prime_factors(const.numerator)]
        down += [prime(p) for p in _prime_factors(const.denominator)]
        # soundness: the certificate must reproduce the quotient class
        acc = RationalFunction.from_poly(ONE)
        for e in up:
            acc = acc.mul(e.symbolic)
        for e in down:
            acc = acc.div(e.symbolic)
        assert acc == r, "certificate does not reproduce the quotient"
        return tuple(sorted(up, key=lambda e: e.label)), tuple(
            sorted(down, key=lambda e: e.label)
        )

    def quasi_obstruction(self, window) -> dict | None:
        for e in sorted(window, key=lambda x: x.label):
            if e.symbolic.order >= 1:
                return {
                    "reason": (
                        "every atom has order 0 at x=0, while any multiple of this "
                        "element keeps order >= 1 and so is never a product of atoms"
                    ),
                    "witness": e.label,
                }
        return None
