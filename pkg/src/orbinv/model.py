"""Quotient orbifolds [V/G] and [P(V)/G]: eigen-data, fixed loci, ages, hypothesis checks.

Eigenvalues of an element g of order m are written zeta_m^a with the exponent a
normalized to [0, m).  Ages are built from these normalized exponents:

* affine, age(g) = sum over eigenvalues of a/m;
* projective, at the component P(E_a) of the fixed locus of g, the normalized
  tangent weights give age = sum over b != a of mult_b * frac((b - a)/m).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional

from .cyclo import FieldTooSmall, Matrix, kernel_basis, intersect_subspaces, rank
from .grp import FiniteMatrixGroup, centralizer, conjugacy_classes, pair_centralizer

AFFINE = "affine"
PROJECTIVE = "projective"


class ModelError(ValueError):
    pass


class NonCommutingPair(ValueError):
    pass


@dataclass(frozen=True)
class Eigenspace:
    exponent: int
    multiplicity: int
    basis: tuple


@dataclass(frozen=True)
class EigenData:
    order: int
    spaces: tuple

    def multiplicity(self, a: int) -> int:
        for s in self.spaces:
            if s.exponent == a:
                return s.multiplicity
        return 0

    def exponents(self) -> list[int]:
        """Exponents with multiplicity, ascending (the eigenvalue multiset)."""
        out = []
        for s in self.spaces:
            out.extend([s.exponent] * s.multiplicity)
        return out


@dataclass(frozen=True)
class FixedComponent:
    elements: tuple
    labels: tuple
    dimension: int
    age: Optional[Fraction]
    stabilizer_order: int
    basis: tuple = dc_field(default=(), repr=False, compare=False)


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    criterion: str
    certificate: tuple = ()

    def __bool__(self):
        return self.ok


class QuotientModel:
    """G acting linearly on V = C^n, viewed as [V/G] or [P(V)/G]."""

    def __init__(self, kind: str, group: FiniteMatrixGroup, name: str = ""):
        if kind not in (AFFINE, PROJECTIVE):
            raise ModelError(f"unknown model kind {kind!r}")
        self.kind = kind
        self.group = group
        self.name = name
        self.n = group.dim
        self.field = group.field
        self._eigen = {}
        self._cache = {}
        orders = group.orders()
        L = self.field.root_order
        for g, m in enumerate(orders):
            if L % m:
                raise FieldTooSmall(
                    f"element {g} has order {m}, whose eigenvalues need a larger field than "
                    f"Q(zeta_{self.field.conductor}); raise root_order"
                )
        if kind == PROJECTIVE:
            for g in range(1, group.order):
                if group.elements[g].is_scalar():
                    raise ModelError(
                        f"element {g} is a nontrivial scalar matrix; the projectivized action is not faithful"
                    )

    @property
    def dimension(self) -> int:
        """Dimension of the stack: n for [V/G], n - 1 for [P(V)/G]."""
        return self.n if self.kind == AFFINE else self.n - 1

    @property
    def is_projective(self) -> bool:
        return self.kind == PROJECTIVE

    def __repr__(self):
        return f"<QuotientModel {self.name} {self.kind} n={self.n} |G|={self.group.order}>"


def eigen_decomposition(model: QuotientModel, g: int) -> EigenData:
    cached = model._eigen.get(g)
    if cached is not None:
        return cached
    G = model.group
    m = G.orders()[g]
    mat = G.elements[g]
    fld = model.field
    ident = Matrix.identity(fld, model.n)
    spaces = []
    found = 0
    for a in range(m):
        if found == model.n:
            break
        lam = fld.root_of_unity(a, m)
        basis = kernel_basis(mat - ident.scale(lam))
        if basis:
            spaces.append(Eigenspace(a, len(basis), tuple(basis)))
            found += len(basis)
    if found != model.n:
        raise ArithmeticError(
            f"eigenspace dimensions of element {g} sum to {found}, expected {model.n}"
        )
    data = EigenData(m, tuple(spaces))
    model._eigen[g] = data
    return data


def fixed_dimension(model: QuotientModel, g: int) -> int:
    """Dimension of the fixed subspace V^g."""
    return eigen_decomposition(model, g).multiplicity(0)


def age_affine(model: QuotientModel, g: int) -> Fraction:
    if model.kind != AFFINE:
        raise ModelError("age_affine needs an affine model")
    ed = eigen_decomposition(model, g)
    return sum((Fraction(s.multiplicity * s.exponent, ed.order) for s in ed.spaces), Fraction(0))


def _frac(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def projective_age(ed: EigenData, a: int) -> Fraction:
    m = ed.order
    return sum(
        (s.multiplicity * _frac(Fraction(s.exponent - a, m)) for s in ed.spaces if s.exponent != a),
        Fraction(0),
    )


def affine_component(model: QuotientModel, g: int) -> FixedComponent:
    ed = eigen_decomposition(model, g)
    basis = next((s.basis for s in ed.spaces if s.exponent == 0), ())
    return FixedComponent(
        elements=(g,),
        labels=(),
        dimension=len(basis),
        age=age_affine(model, g),
        stabilizer_order=len(centralizer(model.group, g)),
        basis=basis,
    )


def projective_components(model: QuotientModel, g: int) -> list[FixedComponent]:
    if model.kind != PROJECTIVE:
        raise ModelError("projective_components needs a projective model")
    ed = eigen_decomposition(model, g)
    stab = len(centralizer(model.group, g))
    return [
        FixedComponent(
            elements=(g,),
            labels=(s.exponent,),
            dimension=s.multiplicity - 1,
            age=projective_age(ed, s.exponent),
            stabilizer_order=stab,
            basis=s.basis,
        )
        for s in ed.spaces
    ]


def fixed_components(model: QuotientModel, g: int) -> list[FixedComponent]:
    if model.kind == AFFINE:
        return [affine_component(model, g)]
    return projective_components(model, g)


def double_fixed(model: QuotientModel, g: int, h: int) -> list[FixedComponent]:
    """Components of the common fixed locus of a commuting pair (g, h); ages are not set."""
    G = model.group
    if G.mul(g, h) != G.mul(h, g):
        raise NonCommutingPair(f"elements {g} and {h} do not commute")
    stab = len(pair_centralizer(G, g, h))
    eg = eigen_decomposition(model, g)
    eh = eigen_decomposition(model, h)
    if model.kind == AFFINE:
        fg = next((s.basis for s in eg.spaces if s.exponent == 0), ())
        fh = next((s.basis for s in eh.spaces if s.exponent == 0), ())
        common = intersect_subspaces(fg, fh) if fg and fh else []
        return [FixedComponent((g, h), (), len(common), None, stab, tuple(common))]
    out = []
    for sg in eg.spaces:
        for sh in eh.spaces:
            common = intersect_subspaces(sg.basis, sh.basis)
            if common:
                out.append(
                    FixedComponent((g, h), (sg.exponent, sh.exponent), len(common) - 1, None, stab, tuple(common))
                )
    return out


def joint_fixed_euler(model: QuotientModel, g: int, h: int) -> int:
    """Euler characteristic of the common fixed locus of commuting g, h.

    Computed from ranks of (h - mu) restricted to the eigenspaces of g, without
    building intersection bases.
    """
    if model.kind == AFFINE:
        return 1
    eg = eigen_decomposition(model, g)
    eh = eigen_decomposition(model, h)
    G = model.group
    hm = G.elements[h]
    fld = model.field
    total = 0
    for sg in eg.spaces:
        B = sg.basis
        for sh in eh.spaces:
            mu = fld.root_of_unity(sh.exponent, eh.order)
            rows = []
            for v in B:
                hv = hm.apply(v)
                rows.append([x - mu * y for x, y in zip(hv, v)])
            # columns (h - mu) v_i span the image of (h - mu) on E_a(g)
            total += len(B) - rank(Matrix(fld, rows))
    return total


def gorenstein_check(model: QuotientModel) -> CheckResult:
    """All inertia ages integral; for affine models also cross-checked against det = 1."""
    offenders = []
    for cls in conjugacy_classes(model.group):
        g = cls.representative
        for comp in fixed_components(model, g):
            if comp.age.denominator != 1:
                offenders.append({"element": g, "labels": list(comp.labels), "age": comp.age})
    ok = not offenders
    if model.kind == AFFINE:
        bad_det = [g for g, m in enumerate(model.group.elements) if m.determinant() != model.field.one]
        if (not bad_det) != ok:
            raise ArithmeticError("integral-age and determinant Gorenstein criteria disagree")
        return CheckResult(ok, "integral ages; agrees with det g = 1 for all g", tuple(offenders))
    return CheckResult(ok, "integral ages of all inertia components", tuple(offenders))


def k_equivalence_check(model: QuotientModel) -> CheckResult:
    """No nonidentity element fixes a divisor (no quasi-reflections).

    For projective models the absence of nontrivial scalars is enforced at
    construction and restated in the criterion.
    """
    offenders = []
    n = model.n
    for g in range(1, model.group.order):
        ed = eigen_decomposition(model, g)
        if model.kind == AFFINE:
            if ed.multiplicity(0) == n - 1:
                offenders.append({"element": g, "fixed_dimension": n - 1})
        else:
            mults = sorted(s.multiplicity for s in ed.spaces)
            if mults == sorted([n - 1, 1]) and len(mults) == 2:
                offenders.append({"element": g, "multiplicities": mults})
    if model.kind == AFFINE:
        crit = "no g != 1 with fixed subspace of dimension n-1"
    else:
        crit = "no g != 1 fixing a hyperplane of P(V) pointwise; no nontrivial scalars in G"
    return CheckResult(not offenders, crit, tuple(offenders))
