"""Orbifold invariants computed exactly from sector data.

Chern integrals over a sector [Y/H] with Y = P^d are (1/|H|) times the integral
over Y, with c(T_Y) = (1 + h)^(d+1) and c_1 of the ambient orbifold restricting to
n h (n = dim V).  On a point c_(top-1) is taken to be zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .epoly import EPolynomial
from .grp import centralizer, conjugacy_classes, count_commuting_pairs
from .model import (
    AFFINE,
    CheckResult,
    QuotientModel,
    eigen_decomposition,
    gorenstein_check,
    joint_fixed_euler,
    k_equivalence_check,
)
from .sectors import Sector, double_inertia_sectors, inertia_sectors


class NotApplicable(Exception):
    """The model lies outside the hypotheses of the requested computation."""

    def __init__(self, reason: str, certificate=()):
        self.reason = reason
        self.certificate = certificate
        super().__init__(reason)


class RouteDisagreement(ArithmeticError):
    def __init__(self, name, routes):
        self.routes = routes
        super().__init__(f"{name}: routes disagree: {routes}")


@dataclass(frozen=True)
class HodgeTable:
    """Chen-Ruan Hodge numbers; entries at non-integral (p, q) are kept apart."""

    integral: dict
    fractional: dict

    def get(self, p, q) -> int:
        key = (Fraction(p), Fraction(q))
        return self.integral.get(key, self.fractional.get(key, 0))

    def signed_sum(self) -> Fraction:
        # fractional entries carry no sign: the age shift is a grading, not a parity
        s = sum(((-1) ** int(p + q)) * h for (p, q), h in self.integral.items())
        return Fraction(s) + sum(self.fractional.values())

    def is_symmetric(self) -> bool:
        return all(self.get(q, p) == h for (p, q), h in {**self.integral, **self.fractional}.items())


@dataclass(frozen=True)
class IdentityCheck:
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def orbifold_E(model: QuotientModel) -> EPolynomial:
    total = EPolynomial()
    for s in inertia_sectors(model):
        total = total + s.epoly.shift(s.age)
    return total


def cr_hodge(model: QuotientModel) -> HodgeTable:
    if model.kind == AFFINE:
        raise NotApplicable("Chen-Ruan Hodge table needs a projective model")
    integral: dict = {}
    fractional: dict = {}
    for (p, q), c in orbifold_E(model).terms.items():
        if p.denominator == 1 and q.denominator == 1:
            h = c * (-1) ** int(p + q)
            integral[(p, q)] = integral.get((p, q), 0) + h
        else:
            fractional[(p, q)] = fractional.get((p, q), 0) + c
    for table in (integral, fractional):
        for k, h in table.items():
            if h < 0 or Fraction(h).denominator != 1:
                raise ArithmeticError(f"Hodge number at {k} is {h}")
            table[k] = int(h)
    return HodgeTable(integral, fractional)


def _route_a(model) -> Fraction:
    return sum((Fraction(s.euler, s.stabilizer_order) for s in double_inertia_sectors(model)), Fraction(0))


def _route_b(model) -> Fraction:
    G = model.group
    n = G.order
    t = G.table
    total = 0
    for g in range(n):
        for h in range(n):
            if t[g * n + h] == t[h * n + g]:
                total += joint_fixed_euler(model, g, h)
    return Fraction(total, n)


def stringy_euler_routes(model: QuotientModel) -> dict:
    return {
        "double_inertia_sectors": _route_a(model),
        "commuting_pairs": _route_b(model),
        "orbifold_E_at_1": orbifold_E(model).evaluate(1, 1),
    }


def stringy_euler(model: QuotientModel) -> Fraction:
    cache = model._cache
    if "e_str" not in cache:
        routes = stringy_euler_routes(model)
        if len(set(routes.values())) != 1:
            raise RouteDisagreement("stringy Euler characteristic", routes)
        cache["e_str_routes"] = routes
        cache["e_str"] = routes["double_inertia_sectors"]
    return cache["e_str"]


def coarse_euler_routes(model: QuotientModel) -> dict:
    sector_sum = sum((Fraction(s.euler, s.stabilizer_order) for s in inertia_sectors(model)), Fraction(0))
    G = model.group
    if model.kind == AFFINE:
        fix_total = G.order
    else:
        fix_total = sum(s.multiplicity for g in range(G.order) for s in eigen_decomposition(model, g).spaces)
    return {"inertia_sectors": sector_sum, "fixed_loci_average": Fraction(fix_total, G.order)}


def coarse_euler(model: QuotientModel) -> Fraction:
    routes = coarse_euler_routes(model)
    if len(set(routes.values())) != 1:
        raise RouteDisagreement("coarse Euler characteristic", routes)
    return routes["inertia_sectors"]


def _inertia_coarse_space_euler(model: QuotientModel) -> Fraction:
    # chi(M^g / C(g)) = (1/|C(g)|) sum over h in C(g) of chi(M^(g, h)), summed over classes
    G = model.group
    total = Fraction(0)
    for cls in conjugacy_classes(G):
        g = cls.representative
        cent = centralizer(G, g)
        total += Fraction(sum(joint_fixed_euler(model, g, h) for h in cent), len(cent))
    return total


def inertia_euler(model: QuotientModel) -> dict:
    """The two candidate normalizations of chi of the inertia stack, side by side.

    ``sector_weighted`` is sum chi(M^g)/|C(g)| over classes; ``coarse_space`` is
    the Euler characteristic of the coarse space of the inertia, sum chi(M^g/C(g)).
    """
    sectors = inertia_sectors(model)
    weighted = sum((Fraction(s.euler, s.stabilizer_order) for s in sectors), Fraction(0))
    coarse = _inertia_coarse_space_euler(model)
    return {
        "sector_weighted": weighted,
        "coarse_space": coarse,
        "sector_weighted_equals_coarse_euler": weighted == coarse_euler(model),
        "coarse_space_equals_stringy_euler": coarse == stringy_euler(model),
    }


def chi_p(sector: Sector, p: int) -> int:
    """chi(X_i, Omega^p) for a sector whose component is P^d with trivial cohomology action."""
    return (-1) ** p if 0 <= p <= sector.dimension else 0


def _require_trace_hypotheses(model: QuotientModel):
    if model.kind == AFFINE:
        raise NotApplicable("needs a projective model; [V/G] is not compact")
    gor = gorenstein_check(model)
    if not gor.ok:
        raise NotApplicable("model is not Gorenstein", _cert("gorenstein", gor))
    keq = k_equivalence_check(model)
    if not keq.ok:
        raise NotApplicable("model fails the K-equivalence check", _cert("k_equivalence", keq))


def _cert(name, res: CheckResult):
    return {"check": name, "criterion": res.criterion, "offenders": list(res.certificate)}


def c1_ctop1(model: QuotientModel) -> Fraction:
    """The stringy Chern number c_st^{1,n-1} as an integral over the double inertia."""
    _require_trace_hypotheses(model)
    n = model.n
    total = Fraction(0)
    for s in double_inertia_sectors(model):
        d = s.dimension
        if d >= 1:
            total += Fraction(n * comb(d + 1, d - 1), s.stabilizer_order)
    return total


def trace_lhs(model: QuotientModel) -> Fraction:
    half = Fraction(model.dimension, 2)
    total = Fraction(0)
    for s in inertia_sectors(model):
        for p in range(s.dimension + 1):
            total += (-1) ** p * (p + s.age - half) ** 2 * chi_p(s, p)
    return total


def trace_check(model: QuotientModel) -> IdentityCheck:
    _require_trace_hypotheses(model)
    rhs = Fraction(1, 12) * (model.dimension * stringy_euler(model) + 2 * c1_ctop1(model))
    return IdentityCheck(trace_lhs(model), rhs)


def evidence_check(model: QuotientModel) -> IdentityCheck:
    _require_trace_hypotheses(model)
    rhs = Fraction(model.dimension, 12) * stringy_euler(model) + Fraction(1, 6) * c1_ctop1(model)
    rhs4 = trace_check(model).rhs
    if rhs != rhs4:
        raise ArithmeticError("right-hand sides of the two trace identities differ")
    return IdentityCheck(trace_lhs(model), rhs)


def commuting_pair_count_matches(model: QuotientModel) -> bool:
    G = model.group
    return count_commuting_pairs(G) == G.order * len(conjugacy_classes(G))
