"""Divisibility models and the factory used by the config layer."""

from __future__ import annotations

from ..errors import UnknownModelKind
from .base import DivisibilityModel, FactorSearch, Factorization, WindowSpec
from .valuebased import (
    AntimatterModel,
    D1Model,
    D2Model,
    DVRModel,
    NumericalMonoidModel,
    ValueModel,
)
from .zxq import ZxQModel

KINDS = ("dvr", "antimatter", "numerical-monoid", "d1", "d2", "zxq")


def build_model(kind: str, options: dict) -> DivisibilityModel:
    if kind == "dvr":
        return DVRModel()
    if kind == "antimatter":
        return AntimatterModel()
    if kind == "numerical-monoid":
        return NumericalMonoidModel(options.get("generators", ()))
    if kind == "d1":
        return D1Model()
    if kind == "d2":
        return D2Model()
    if kind == "zxq":
        from ..polynomials import QPoly

        declared = [QPoly.of(*row) for row in options.get("declared_atoms", ())]
        return ZxQModel(
            degree_cap=options.get("degree_cap", 3), declared_atoms=declared
        )
    raise UnknownModelKind(f"unknown model kind {kind!r}; known kinds: {', '.join(KINDS)}")


__all__ = [
    "AntimatterModel",
    "D1Model",
    "D2Model",
    "DVRModel",
    "DivisibilityModel",
    "FactorSearch",
    "Factorization",
    "KINDS",
    "NumericalMonoidModel",
    "ValueModel",
    "WindowSpec",
    "ZxQModel",
    "build_model",
]
