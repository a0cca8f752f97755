"""Concrete models whose divisibility is decided entirely by value vectors.

Each model fixes an ambient Z^d (+) Q, a positive cone (the value monoid of
the integral elements), a finite set of atom values, and an analytic
characterisation of the atomic elements as the N-span of the atom values.
"""

from __future__ import annotations

import abc
from fractions import Fraction
from typing import Iterable

from ..elements import Element
from ..errors import EmptyWindow, InvalidBounds
from ..values import Ambient, Vec, fmt_exponent
from .base import DivisibilityModel, WindowSpec

UNIT_LABEL = "1"


class ValueModel(DivisibilityModel):
    """Base for models with value-decided divisibility (value_faithful)."""

    value_faithful = True

    # -- subclass hooks -----------------------------------------------------

    @abc.abstractmethod
    def contains_value(self, v: Vec) -> bool:
        """Membership of v in the value monoid (the zero value included)."""

    @abc.abstractmethod
    def is_atom_value(self, v: Vec) -> bool: ...

    @abc.abstractmethod
    def is_atomic_value(self, v: Vec) -> bool: ...

    @abc.abstractmethod
    def label_for(self, v: Vec) -> str:
        """Canonical label of a nonzero value."""

    # -- generic operations -------------------------------------------------

    def element(self, v: Vec) -> Element:
        if v.is_zero:
            return Element(self.id, UNIT_LABEL, v)
        return Element(self.id, self.label_for(v), v)

    def unit(self) -> Element:
        return self.element(self.ambient.zero())

    def is_unit(self, a: Element) -> bool:
        self.check_owned(a)
        return a.value.is_zero

    def divides(self, a: Element, b: Element) -> bool:
        self.check_owned(a, b)
        return self.contains_value(b.value - a.value)

    def quotient(self, a: Element, b: Element) -> Element:
        self.check_owned(a, b)
        return self.element(a.value - b.value)

    def multiply(self, a: Element, b: Element) -> Element:
        self.check_owned(a, b)
        return self.element(a.value + b.value)

    def is_atom(self, a: Element) -> bool:
        self.check_owned(a)
        return self.is_atom_value(a.value)

    def is_atomic_element(self, a: Element) -> bool:
        self.check_owned(a)
        return self.is_atomic_value(a.value)

    def in_domain(self, a: Element) -> bool:
        self.check_owned(a)
        return self.contains_value(a.value)

    def _window_from_values(self, values: Iterable[Vec], include_unit: bool) -> tuple[Element, ...]:
        seen: dict[str, Element] = {}
        for v in values:
            if v.is_zero and not include_unit:
                continue
            e = self.element(v)
            seen[e.label] = e
        if not seen:
            raise EmptyWindow(f"window bounds exclude every element of model {self.id!r}")
        return tuple(sorted(seen.values(), key=lambda e: e.label))


def _fraction_range(max_abs: int, max_den: int, include_negative: bool, include_zero: bool):
    out = set()
    for den in range(1, max_den + 1):
        for num in range(1, max_abs * den + 1):
            q = Fraction(num, den)
            out.add(q)
            if include_negative:
                out.add(-q)
    if include_zero:
        out.add(Fraction(0))
    return sorted(out)


class DVRModel(ValueModel):
    """Discrete rank-one valuation: classes pi^k, value group Z."""

    id = "dvr"
    ambient = Ambient(1)

    def contains_value(self, v: Vec) -> bool:
        return v.rat == 0 and v.ints[0] >= 0

    def is_atom_value(self, v: Vec) -> bool:
        return v.rat == 0 and v.ints[0] == 1

    def is_atomic_value(self, v: Vec) -> bool:
        return v.rat == 0 and v.ints[0] >= 1

    def label_for(self, v: Vec) -> str:
        k = v.ints[0]
        if k >= 1:
            return "pi" if k == 1 else f"pi^{k}"
        return "1/pi" if k == -1 else f"1/pi^{-k}"

    def atoms(self) -> tuple[Element, ...]:
        return (self.element(Vec((1,))),)

    def enumerate_window(self, spec: WindowSpec) -> tuple[Element, ...]:
        (n,) = self.require_positive(spec.bounds, "max_exponent")
        if spec.include_fractional:
            values = [Vec((k,)) for k in range(-n, n + 1)]
        else:
            values = [Vec((k,)) for k in range(1, n + 1)]
        return self._window_from_values(values, spec.include_fractional)


class AntimatterModel(ValueModel):
    """Nondiscrete rank-one valuation with value group Q: no atoms at all."""

    id = "antimatter"
    ambient = Ambient(0, with_rat=True)
    antimatter = True

    def contains_value(self, v: Vec) -> bool:
        return v.rat >= 0

    def is_atom_value(self, v: Vec) -> bool:
        return False

    def is_atomic_value(self, v: Vec) -> bool:
        return False

    def label_for(self, v: Vec) -> str:
        q = v.rat
        if q > 0:
            return "x" if q == 1 else f"x^{fmt_exponent(q)}"
        return "1/x" if q == -1 else f"1/x^{fmt_exponent(-q)}"

    def atoms(self) -> tuple[Element, ...]:
        return ()

    def enumerate_window(self, spec: WindowSpec) -> tuple[Element, ...]:
        max_value, max_den = self.require_positive(spec.bounds, "max_value", "max_den")
        qs = _fraction_range(max_value, max_den, spec.include_fractional, spec.include_fractional)
        return self._window_from_values(
            [Vec((), q) for q in qs], spec.include_fractional
        )


class NumericalMonoidModel(ValueModel):
    """Additive submonoid of N generated by a finite set of positive integers."""

    ambient = Ambient(1)

    def __init__(self, generators: Iterable[int]):
        gens = tuple(sorted(set(int(g) for g in generators)))
        if not gens or any(g < 1 for g in gens):
            raise InvalidBounds("numerical monoid generators must be positive integers")
        self.generators = gens
        self.id = "numerical-monoid<" + ",".join(str(g) for g in gens) + ">"
        self._member_cache: dict[int, bool] = {0: True}

    def _member(self, n: int) -> bool:
        if n < 0:
            return False
        cached = self._member_cache.get(n)
        if cached is not None:
            return cached
        top = max(self._member_cache) if self._member_cache else 0
        dp = [self._member_cache.get(i, False) for i in range(top + 1)] + [False] * (n - top)
        for i in range(1, n + 1):
            if not dp[i]:
                dp[i] = any(g <= i and dp[i - g] for g in self.generators)
            self._member_cache[i] = dp[i]
        return self._member_cache[n]

    def contains_value(self, v: Vec) -> bool:
        return v.rat == 0 and self._member(v.ints[0])

    def is_atom_value(self, v: Vec) -> bool:
        n = v.ints[0]
        if v.rat != 0 or n <= 0 or not self._member(n):
            return False
        return not any(self._member(h) and self._member(n - h) for h in range(1, n))

    def is_atomic_value(self, v: Vec) -> bool:
        # every nonzero monoid element is a sum of atoms
        return v.rat == 0 and v.ints[0] > 0 and self._member(v.ints[0])

    def label_for(self, v: Vec) -> str:
        return str(v.ints[0])

    def atoms(self) -> tuple[Element, ...]:
        out = [self.element(Vec((g,))) for g in self.generators if self.is_atom_value(Vec((g,)))]
        return tuple(sorted(out, key=lambda e: e.label))

    def enumerate_window(self, spec: WindowSpec) -> tuple[Element, ...]:
        (max_value,) = self.require_positive(spec.bounds, "max_value")
        if spec.include_fractional:
            values = [Vec((n,)) for n in range(-max_value, max_value + 1)]
        else:
            values = [Vec((n,)) for n in range(1, max_value + 1) if self._member(n)]
        return self._window_from_values(values, spec.include_fractional)


def _power_label(sym: str, q: Fraction) -> str:
    if q == 1:
        return sym
    return f"{sym}^{fmt_exponent(q)}"


class _TwoGeneratorValuationModel(ValueModel):
    """Shared label/arithmetic plumbing for the two rank-two monoids below.

    Values are (k, e) with k the y-exponent and e the x-exponent; e lives in
    Q for the first model and in Z for the second.
    """

    def _exp_pair(self, v: Vec) -> tuple[int, Fraction]:
        raise NotImplementedError

    def label_for(self, v: Vec) -> str:
        k, e = self._exp_pair(v)
        num, den = [], []
        if k > 0:
            num.append(_power_label("y", Fraction(k)))
        elif k < 0:
            den.append(_power_label("y", Fraction(-k)))
        if e > 0:
            num.append(_power_label("x", e))
        elif e < 0:
            den.append(_power_label("x", -e))
        num_s = "*".join(num) if num else "1"
        if not den:
            return num_s
        den_s = den[0] if len(den) == 1 else "(" + "*".join(den) + ")"
        return f"{num_s}/{den_s}"


class D1Model(_TwoGeneratorValuationModel):
    """Monoid generated by the values (0, a) for a in Q+, (1, 0), and (k, -a)
    for k >= 2, a in Q+, inside Z (+) Q ordered lexicographically."""

    id = "d1"
    ambient = Ambient(1, with_rat=True)

    def _exp_pair(self, v: Vec):
        return v.ints[0], v.rat

    def contains_value(self, v: Vec) -> bool:
        k, a = v.ints[0], v.rat
        if k < 0:
            return False
        if k == 0:
            return a >= 0
        if k == 1:
            return a >= 0
        return True

    def is_atom_value(self, v: Vec) -> bool:
        return v.ints[0] == 1 and v.rat == 0

    def is_atomic_value(self, v: Vec) -> bool:
        return v.rat == 0 and v.ints[0] >= 1

    def atoms(self) -> tuple[Element, ...]:
        return (self.element(Vec((1,))),)

    def quasi_complement(self, a: Element) -> Element | None:
        self.check_owned(a)
        if a.value.rat != 0:
            return self.element(Vec((2,), -a.value.rat))
        return None

    def enumerate_window(self, spec: WindowSpec) -> tuple[Element, ...]:
        k_max, den_max, alpha_max = self.require_positive(
            spec.bounds, "k_max", "den_max", "alpha_max"
        )
        fr = spec.include_fractional
        alphas = _fraction_range(alpha_max, den_max, True, True)
        values = []
        for k in range(-k_max if fr else 0, k_max + 1):
            for a in alphas:
                v = Vec((k,), a)
                if fr or self.contains_value(v):
                    values.append(v)
        return self._window_from_values(values, fr)


class D2Model(_TwoGeneratorValuationModel):
    """Discrete analogue of D1: value group Z (+) Z, atoms of value (1, 0)
    and (0, 1)."""

    id = "d2"
    ambient = Ambient(2)

    def _exp_pair(self, v: Vec):
        return v.ints[0], Fraction(v.ints[1])

    def contains_value(self, v: Vec) -> bool:
        if v.rat != 0:
            return False
        k, j = v.ints
        if k < 0:
            return False
        if k <= 1:
            return j >= 0
        return True

    def is_atom_value(self, v: Vec) -> bool:
        return v.rat == 0 and tuple(v.ints) in ((1, 0), (0, 1))

    def is_atomic_value(self, v: Vec) -> bool:
        k, j = v.ints
        return v.rat == 0 and k >= 0 and j >= 0 and (k, j) != (0, 0)

    def atoms(self) -> tuple[Element, ...]:
        out = [self.element(Vec((0, 1))), self.element(Vec((1, 0)))]
        return tuple(sorted(out, key=lambda e: e.label))

    def quasi_complement(self, a: Element) -> Element | None:
        self.check_owned(a)
        j = a.value.ints[1]
        if j < 0:
            return self.element(Vec((2, -j)))
        return None

    def enumerate_window(self, spec: WindowSpec) -> tuple[Element, ...]:
        k_max, j_max = self.require_positive(spec.bounds, "k_max", "j_max")
        fr = spec.include_fractional
        values = []
        for k in range(-k_max if fr else 0, k_max + 1):
            for j in range(-j_max, j_max + 1):
                v = Vec((k, j))
                if fr or self.contains_value(v):
                    values.append(v)
        return self._window_from_values(values, fr)
