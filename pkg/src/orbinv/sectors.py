"""Inertia and double-inertia sectors of a quotient model.

The inertia of [M/G] is the disjoint union over conjugacy classes (g) of
[M^g / C_G(g)]; the double inertia is indexed by classes of commuting pairs,
with pieces [M^(g,h) / C_G(g) n C_G(h)].  One Sector is emitted per connected
component, ordered by class id and then by eigenvalue exponent.

The coarse E-polynomial of a sector is that of its component.  C_G(g) preserves
every eigenspace of g and, acting through a connected group, acts trivially on
the cohomology of its projectivization, so no invariant-part computation is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .epoly import EPolynomial
from .grp import commuting_pair_classes, conjugacy_classes
from .model import AFFINE, FixedComponent, QuotientModel, double_fixed, fixed_components

INERTIA = "inertia"
DOUBLE = "double"


@dataclass(frozen=True)
class Sector:
    kind: str
    index: int
    component: FixedComponent
    stabilizer_order: int
    epoly: EPolynomial
    euler: int
    age: Optional[Fraction]

    @property
    def dimension(self) -> int:
        return self.component.dimension

    @property
    def elements(self) -> tuple:
        return self.component.elements


def component_epoly(model: QuotientModel, comp: FixedComponent) -> EPolynomial:
    if model.kind == AFFINE:
        return EPolynomial.uv_power(comp.dimension)
    return EPolynomial.projective_space(comp.dimension)


def _sector(model, kind, index, comp, age) -> Sector:
    e = component_epoly(model, comp)
    return Sector(
        kind=kind,
        index=index,
        component=comp,
        stabilizer_order=comp.stabilizer_order,
        epoly=e,
        euler=1 if model.kind == AFFINE else comp.dimension + 1,
        age=age,
    )


def inertia_sectors(model: QuotientModel) -> list[Sector]:
    cache = model._cache
    if INERTIA not in cache:
        out = []
        for idx, cls in enumerate(conjugacy_classes(model.group)):
            for comp in fixed_components(model, cls.representative):
                out.append(_sector(model, INERTIA, idx, comp, comp.age))
        cache[INERTIA] = out
    return cache[INERTIA]


def double_inertia_sectors(model: QuotientModel) -> list[Sector]:
    cache = model._cache
    if DOUBLE not in cache:
        out = []
        for idx, pc in enumerate(commuting_pair_classes(model.group)):
            g, h = pc.representative
            for comp in double_fixed(model, g, h):
                if comp.stabilizer_order != pc.stabilizer_order:
                    raise ArithmeticError("pair stabilizer from orbit count disagrees with direct count")
                out.append(_sector(model, DOUBLE, idx, comp, None))
        cache[DOUBLE] = out
    return cache[DOUBLE]
