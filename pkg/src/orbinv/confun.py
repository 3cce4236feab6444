"""Constructible functions on finite orbifold models [S/G] and their pushforwards.

A finite model is a finite group acting on a finite point set.  Points of the
stack are the orbits, and the isotropy weight of a point is its stabilizer order.
Two pushforwards are implemented independently:

* ``stack_pushforward``: isotropy-weighted sum over the source orbits lying over
  the target point, scaled by the target isotropy;
* ``equivariant_pushforward``: the fiber sum of the lifted function on the
  underlying sets (identity homomorphism), otherwise the fiber sum through the
  presentation S x H -> T, (x, h) -> h f(x), divided by |G|.

The coarse space of [S/G] is the orbit set with the trivial group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .grp import (
    ABSTRACT_GROUPS,
    FiniteMatrixGroup,
    abstract_group,
    as_permutation,
)
from .kernels import kernels


class ConfunError(ValueError):
    pass


class NotInvariant(ConfunError):
    pass


class NotACovering(ConfunError):
    pass


class NotComposable(ConfunError):
    pass


class GSet:
    """A finite group acting on the points 0..m-1; ``act[g * m + x]`` is g.x."""

    def __init__(self, group: FiniteMatrixGroup, npoints: int, act: Sequence[int], name: str = "",
                 check: bool = True):
        self.group = group
        self.npoints = npoints
        self.act = list(act)
        self.name = name
        n, m = group.order, npoints
        if len(self.act) != n * m:
            raise ConfunError("action table has the wrong size")
        if check:
            self._check_axioms()
        orbit_of = [-1] * m
        orbits = []
        trans = [0] * m
        for x in range(m):
            if orbit_of[x] >= 0:
                continue
            k = len(orbits)
            members = []
            for g in range(n):
                y = self.act[g * m + x]
                if orbit_of[y] < 0:
                    orbit_of[y] = k
                    trans[y] = g
                    members.append(y)
            orbits.append(tuple(sorted(members)))
        self.orbit_of = orbit_of
        self.orbits = orbits
        self.reps = [o[0] for o in orbits]
        self.transversal = trans
        self.stab_order = [n // len(orbits[orbit_of[x]]) for x in range(m)]

    def _check_axioms(self):
        G, m = self.group, self.npoints
        n = G.order
        if any(self.act[x] != x for x in range(m)):
            raise ConfunError("identity does not act trivially")
        for g in range(n):
            row = self.act[g * m : (g + 1) * m]
            if sorted(row) != list(range(m)):
                raise ConfunError(f"element {g} does not act by a permutation")
        t = G.table
        for a in range(n):
            for b in range(n):
                ab = t[a * n + b]
                for x in range(m):
                    if self.act[ab * m + x] != self.act[a * m + self.act[b * m + x]]:
                        raise ConfunError("action is not compatible with multiplication")

    def __repr__(self):
        return f"<GSet {self.name} |G|={self.group.order} points={self.npoints} orbits={len(self.orbits)}>"

    def __len__(self):
        return self.npoints

    def apply(self, g: int, x: int) -> int:
        return self.act[g * self.npoints + x]

    def stabilizer(self, x: int) -> list[int]:
        m = self.npoints
        return [g for g in range(self.group.order) if self.act[g * m + x] == x]

    def isotropy(self) -> list[int]:
        """e(x) = |Stab_G(x)| per point."""
        return list(self.stab_order)

    def fixed_points(self, elements: Iterable[int]) -> list[int]:
        elements = list(elements)
        m = self.npoints
        return [x for x in range(m) if all(self.act[g * m + x] == x for g in elements)]


@dataclass(frozen=True)
class ConstructibleFunction:
    space: GSet = dc_field(compare=False, repr=False)
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.space.npoints:
            raise ConfunError("function has the wrong number of values")
        if not all(type(v) is Fraction for v in self.values):
            object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    def is_invariant(self) -> bool:
        S = self.space
        return all(self.values[x] == self.values[S.reps[S.orbit_of[x]]] for x in range(S.npoints))

    def orbit_value(self, k: int) -> Fraction:
        return self.values[self.space.reps[k]]

    def __add__(self, other):
        return ConstructibleFunction(self.space, tuple(a + b for a, b in zip(self.values, other.values)))

    def __mul__(self, c):
        return ConstructibleFunction(self.space, tuple(a * Fraction(c) for a in self.values))

    __rmul__ = __mul__


def constant(space: GSet, c=1) -> ConstructibleFunction:
    return ConstructibleFunction(space, (Fraction(c),) * space.npoints)


def indicator(space: GSet, points: Iterable[int]) -> ConstructibleFunction:
    pts = set(points)
    return ConstructibleFunction(space, tuple(Fraction(1 if x in pts else 0) for x in range(space.npoints)))


@dataclass(frozen=True)
class ModelMap:
    """Equivariant map: homomorphism ``hom`` (ids of G -> ids of H) and point map ``points``."""

    source: GSet
    target: GSet
    hom: tuple
    points: tuple

    def __post_init__(self):
        S, T = self.source, self.target
        G, H = S.group, T.group
        if len(self.hom) != G.order or len(self.points) != S.npoints:
            raise ConfunError("map tables have the wrong size")
        n, t = G.order, G.table
        hn, ht = H.order, H.table
        trivial = hn == 1 or (G is H and self.hom == tuple(range(n)))
        for a in range(0 if trivial else n):
            for b in range(n):
                if self.hom[t[a * n + b]] != ht[self.hom[a] * hn + self.hom[b]]:
                    raise ConfunError("group map is not a homomorphism")
        for g in range(n):
            for x in range(S.npoints):
                if self.points[S.apply(g, x)] != T.apply(self.hom[g], self.points[x]):
                    raise ConfunError("point map is not equivariant")

    @property
    def is_identity_hom(self) -> bool:
        return self.source.group is self.target.group and self.hom == tuple(range(self.source.group.order))


# -- constructors ---------------------------------------------------------------


def trivial_group() -> FiniteMatrixGroup:
    return abstract_group("1")


def natural_gset(G: FiniteMatrixGroup, name: str = "") -> GSet:
    """A permutation matrix group acting on coordinate indices."""
    m = G.dim
    act = []
    for mat in G.elements:
        act.extend(as_permutation(mat))
    return GSet(G, m, act, name=name)


def gset_from_generators(G: FiniteMatrixGroup, perms: Sequence[Sequence[int]], npoints: int,
                         name: str = "") -> GSet:
    """Action defined by one point permutation per generator of G."""
    if len(perms) != len(G.generators):
        raise ConfunError(f"need {len(G.generators)} action permutations, got {len(perms)}")
    for p in perms:
        if sorted(p) != list(range(npoints)):
            raise ConfunError(f"{list(p)} is not a permutation of {npoints} points")
    n, m = G.order, npoints
    rows = [None] * n
    rows[0] = list(range(m))
    for i in range(1, n):
        par, s = rows[G.parent[i]], perms[G.via[i]]
        rows[i] = [par[s[x]] for x in range(m)]
    # every Cayley edge must agree with the tree-defined action
    for s, p in enumerate(perms):
        for a in range(n):
            b = G.rgen[s][a]
            if rows[b] != [rows[a][p[x]] for x in range(m)]:
                raise ConfunError("action tables do not define a group action")
    return GSet(G, m, [y for r in rows for y in r], name=name)


def point_gset(G: FiniteMatrixGroup, name: str = "") -> GSet:
    """BG: one point with the whole group as isotropy."""
    return GSet(G, 1, [0] * G.order, name=name or f"B{G.name}")


def coset_gset(G: FiniteMatrixGroup, K: Sequence[int], name: str = "") -> GSet:
    """Left cosets G/K with the translation action."""
    n, t = G.order, G.table
    K = sorted(set(K))
    coset_of = [-1] * n
    cosets = []
    for g in range(n):
        if coset_of[g] >= 0:
            continue
        c = len(cosets)
        members = [t[g * n + k] for k in K]
        for x in members:
            coset_of[x] = c
        cosets.append(g)
    m = len(cosets)
    act = [coset_of[t[a * n + rep]] for a in range(n) for rep in cosets]
    return GSet(G, m, act, name=name, check=False)


def disjoint_union(parts: Sequence[GSet], name: str = "") -> GSet:
    G = parts[0].group
    n = G.order
    m = sum(p.npoints for p in parts)
    act = [0] * (n * m)
    off = 0
    for p in parts:
        if p.group is not G:
            raise ConfunError("disjoint union needs a common group")
        for g in range(n):
            for x in range(p.npoints):
                act[g * m + off + x] = off + p.apply(g, x)
        off += p.npoints
    return GSet(G, m, act, name=name, check=False)


_TRIVIAL = None


def coarse_space(S: GSet) -> GSet:
    """The orbit set with the trivial group; built once per G-set."""
    X = getattr(S, "_coarse", None)
    if X is None:
        global _TRIVIAL
        if _TRIVIAL is None:
            _TRIVIAL = trivial_group()
        k = len(S.orbits)
        X = S._coarse = GSet(_TRIVIAL, k, list(range(k)), name=f"{S.name}/G", check=False)
    return X


def coarse_map(S: GSet, target: Optional[GSet] = None) -> ModelMap:
    if target is None:
        f = getattr(S, "_coarse_map", None)
        if f is None:
            f = S._coarse_map = ModelMap(S, coarse_space(S), (0,) * S.group.order, tuple(S.orbit_of))
        return f
    return ModelMap(S, target, (0,) * S.group.order, tuple(S.orbit_of))


def identity_map(S: GSet) -> ModelMap:
    return ModelMap(S, S, tuple(range(S.group.order)), tuple(range(S.npoints)))


def compose(f: ModelMap, g: ModelMap) -> ModelMap:
    """f o g (apply g first)."""
    if g.target is not f.source:
        raise NotComposable("target of the first map is not the source of the second")
    return ModelMap(
        g.source,
        f.target,
        tuple(f.hom[h] for h in g.hom),
        tuple(f.points[y] for y in g.points),
    )


def _require_invariant(phi: ConstructibleFunction, f: ModelMap):
    if phi.space is not f.source:
        raise ConfunError("function does not live on the source of the map")
    if not phi.is_invariant():
        raise NotInvariant("constructible function is not invariant under the group")


# -- pushforwards ---------------------------------------------------------------


def stack_pushforward(f: ModelMap, phi: ConstructibleFunction) -> ConstructibleFunction:
    """(f_* phi)(t) = e_T(t) * sum over source orbits O over [t] of phi(O) / e_S(O)."""
    _require_invariant(phi, f)
    S, T = f.source, f.target
    # accumulate |G| * sum phi(O) / e_S(O) = sum phi(O) * |O|, divide once
    weights = [0] * len(T.orbits)
    for k, rep in enumerate(S.reps):
        v = phi.values[rep]
        if v:
            weights[T.orbit_of[f.points[rep]]] += v * len(S.orbits[k])
    n = S.group.order
    scaled = [Fraction(w) / n if w else Fraction(0) for w in weights]
    return ConstructibleFunction(T, tuple(T.stab_order[t] * scaled[T.orbit_of[t]] for t in range(T.npoints)))


def equivariant_pushforward(f: ModelMap, phi: ConstructibleFunction) -> ConstructibleFunction:
    _require_invariant(phi, f)
    S, T = f.source, f.target
    out = [Fraction(0)] * T.npoints
    if f.is_identity_hom:
        for x in range(S.npoints):
            out[f.points[x]] += phi.values[x]
        return ConstructibleFunction(T, tuple(out))
    H = T.group
    for x in range(S.npoints):
        v = phi.values[x]
        if not v:
            continue
        y = f.points[x]
        for h in range(H.order):
            out[T.apply(h, y)] += v
    n = S.group.order
    return ConstructibleFunction(T, tuple(v / n for v in out))


def weighted_euler(phi: ConstructibleFunction) -> Fraction:
    """chi(S, phi / e_S): sum over orbits of the isotropy-weighted values."""
    S = phi.space
    return sum((phi.values[r] / S.stab_order[r] for r in S.reps), Fraction(0))


# -- inertia --------------------------------------------------------------------


@dataclass(frozen=True)
class InertiaModel:
    space: GSet
    pairs: tuple          # point id -> (x, g)
    projection: ModelMap  # (x, g) -> x


def inertia_model(S: GSet) -> InertiaModel:
    """Points (x, g) with g x = x, acted on by h (x, g) = (h x, h g h^-1)."""
    G = S.group
    n, t, inv = G.order, G.table, G.inverses
    pairs = [(x, g) for x in range(S.npoints) for g in range(n) if S.apply(g, x) == x]
    index = {p: i for i, p in enumerate(pairs)}
    m = len(pairs)
    act = [0] * (n * m)
    for h in range(n):
        hi = inv[h]
        for i, (x, g) in enumerate(pairs):
            act[h * m + i] = index[(S.apply(h, x), t[t[h * n + g] * n + hi])]
    I = GSet(G, m, act, name=f"I{S.name}", check=False)
    p = ModelMap(I, S, tuple(range(n)), tuple(x for x, _ in pairs))
    return InertiaModel(I, tuple(pairs), p)


@dataclass(frozen=True)
class InertiaPushforwardResult:
    ok: bool
    stack_values: tuple
    equivariant_values: tuple
    alpha_values: tuple
    counterexample: Optional[int] = None


def verify_inertia_pushforward(S: GSet) -> InertiaPushforwardResult:
    """pi_* p_* 1 = 1 on the coarse space, by both pushforwards, plus the averaged-indicator identity.

    The averaged indicator alpha = (1/|G|) sum_g 1_{S^g} is pushed along the atlas
    S -> coarse space, a map of plain sets.
    """
    I = inertia_model(S)
    X = coarse_space(S)
    pi = coarse_map(S, X)
    one = constant(I.space)
    via_stack = stack_pushforward(pi, stack_pushforward(I.projection, one))
    via_equiv = equivariant_pushforward(pi, equivariant_pushforward(I.projection, one))
    n = S.group.order
    alpha = tuple(Fraction(len(S.stabilizer(x)), n) for x in range(S.npoints))
    atlas_values = [Fraction(0)] * len(S.orbits)
    for x in range(S.npoints):
        atlas_values[S.orbit_of[x]] += alpha[x]
    bad = None
    for k in range(len(S.orbits)):
        if not (via_stack.values[k] == via_equiv.values[k] == atlas_values[k] == 1):
            bad = k
            break
    return InertiaPushforwardResult(bad is None, via_stack.values, via_equiv.values, tuple(atlas_values), bad)


def stringy_function(S: GSet) -> ConstructibleFunction:
    """p-bar_* 1 on the coarse space, pushed from the coarse space of the inertia."""
    I = inertia_model(S)
    IX = coarse_space(I.space)
    X = coarse_space(S)
    points = tuple(S.orbit_of[I.pairs[r][0]] for r in I.space.reps)
    pbar = ModelMap(IX, X, (0,), points)
    return stack_pushforward(pbar, constant(IX))


def stabilizer_class_count(S: GSet, x: int) -> int:
    """Number of conjugacy classes of Stab(x), by direct conjugation inside it."""
    G = S.group
    n, t, inv = G.order, G.table, G.inverses
    stab = S.stabilizer(x)
    seen = set()
    count = 0
    for g in stab:
        if g in seen:
            continue
        count += 1
        for k in stab:
            seen.add(t[t[inv[k] * n + g] * n + k])
    return count


def commuting_fixed_triples(S: GSet) -> int:
    G = S.group
    n, t = G.order, G.table
    total = 0
    for x in range(S.npoints):
        stab = S.stabilizer(x)
        total += sum(1 for g in stab for h in stab if t[g * n + h] == t[h * n + g])
    return total


def covering_degrees(f: ModelMap) -> list[Fraction]:
    """Fiber cardinality over each target point after base change to the atlas of T.

    The base change of [S/G] -> [T/H] along T -> [T/H] is (S x H)/G, a free
    quotient when the kernel of the homomorphism meets every isotropy group
    trivially, mapping [x, h] to h f(x).
    """
    S, T = f.source, f.target
    H = T.group
    counts = [0] * T.npoints
    for x in range(S.npoints):
        y = f.points[x]
        for h in range(H.order):
            counts[T.apply(h, y)] += 1
    return [Fraction(c, S.group.order) for c in counts]


@dataclass(frozen=True)
class EtaleResult:
    ok: bool
    degree: Fraction
    pushforward: tuple
    expected: tuple

    def __bool__(self):
        return self.ok


def verify_etale_lemma(f: ModelMap) -> EtaleResult:
    """Check f_* 1 = deg(f) * 1_{f(S)} for a covering map."""
    S = f.source
    kernel = [g for g in range(1, S.group.order) if f.hom[g] == 0]
    for x in range(S.npoints):
        if any(S.apply(g, x) == x for g in kernel):
            raise NotACovering(f"isotropy of point {x} meets the kernel; the map is not representable")
    degs = covering_degrees(f)
    image = {d for d in degs if d}
    if len(image) > 1:
        raise NotACovering(f"fiber cardinalities vary over the image: {sorted(image)}")
    deg = image.pop() if image else Fraction(0)
    push = stack_pushforward(f, constant(S))
    expected = tuple(deg if d else Fraction(0) for d in degs)
    return EtaleResult(push.values == expected, deg, push.values, expected)


def functoriality_check(f: ModelMap, g: ModelMap, phi: ConstructibleFunction) -> bool:
    """(f o g)_* phi == f_* g_* phi for both pushforwards."""
    fg = compose(f, g)
    ok_stack = stack_pushforward(fg, phi).values == stack_pushforward(f, stack_pushforward(g, phi)).values
    ok_equiv = (
        equivariant_pushforward(fg, phi).values
        == equivariant_pushforward(f, equivariant_pushforward(g, phi)).values
    )
    return ok_stack and ok_equiv


# -- enumeration ----------------------------------------------------------------


def subgroups(G: FiniteMatrixGroup) -> list[frozenset]:
    n, t = G.order, G.table
    def close(gens):
        elems = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = t[x * n + s]
                if y not in elems:
                    elems.add(y)
                    frontier.append(y)
        return frozenset(elems)
    found = {frozenset([0])}
    frontier = [frozenset([0])]
    while frontier:
        nxt = []
        for H in frontier:
            for g in range(n):
                if g not in H:
                    K = close(list(H) + [g])
                    if K not in found:
                        found.add(K)
                        nxt.append(K)
        frontier = nxt
    return sorted(found, key=lambda H: (len(H), sorted(H)))


def subgroup_class_representatives(G: FiniteMatrixGroup) -> list[frozenset]:
    n, t, inv = G.order, G.table, G.inverses
    reps = []
    seen = set()
    for H in subgroups(G):
        if H in seen:
            continue
        reps.append(H)
        for k in range(n):
            seen.add(frozenset(t[t[inv[k] * n + h] * n + k] for h in H))
    return reps


def gsets_up_to(G: FiniteMatrixGroup, max_points: int) -> list[GSet]:
    """All nonempty G-sets with at most ``max_points`` points, up to isomorphism."""
    blocks = [coset_gset(G, K) for K in subgroup_class_representatives(G)]
    blocks = [b for b in blocks if b.npoints <= max_points]
    out = []

    def rec(i, remaining, chosen):
        if i == len(blocks):
            if chosen:
                name = G.name + ":" + "+".join(f"G/K{j}" for j, _ in chosen)
                out.append(disjoint_union([b for _, b in chosen], name=name))
            return
        b = blocks[i]
        k = 0
        while k * b.npoints <= remaining:
            rec(i + 1, remaining - k * b.npoints, chosen + [(i, b)] * k)
            k += 1

    rec(0, max_points, [])
    return out


def homomorphisms(G: FiniteMatrixGroup, H: FiniteMatrixGroup) -> list[tuple]:
    """All homomorphisms G -> H as id tables, via images of the generators."""
    n, hn, ht = G.order, H.order, H.table
    ngen = len(G.generators)
    out = []
    for images in itertools.product(range(hn), repeat=ngen):
        phi = [0] * n
        for i in range(1, n):
            phi[i] = ht[phi[G.parent[i]] * hn + images[G.via[i]]]
        ok = all(
            phi[G.rgen[s][a]] == ht[phi[a] * hn + images[s]]
            for s in range(ngen)
            for a in range(n)
        )
        if ok:
            out.append(tuple(phi))
    return out


def equivariant_maps(S: GSet, T: GSet) -> Iterable[ModelMap]:
    """Every equivariant map S -> T along the identity homomorphism."""
    if S.group is not T.group:
        raise ConfunError("maps along the identity need a common group")
    choices = _choices(S, T)
    ident = tuple(range(S.group.order))
    for images in itertools.product(*choices):
        points = tuple(T.apply(S.transversal[x], images[S.orbit_of[x]]) for x in range(S.npoints))
        yield ModelMap(S, T, ident, points)


def _choices(S: GSet, T: GSet) -> list[list[int]]:
    return [T.fixed_points(S.stabilizer(r)) for r in S.reps]


# -- exhaustive verification ----------------------------------------------------


@dataclass
class SuiteResult:
    max_points: int
    max_group_order: int
    groups: list = dc_field(default_factory=list)
    models: int = 0
    maps: int = 0
    coverings: int = 0
    checks: int = 0
    homomorphisms: int = 0
    chains: int = 0
    failures: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {
            "max_points": self.max_points,
            "max_group_order": self.max_group_order,
            "groups": list(self.groups),
            "models": self.models,
            "maps": self.maps,
            "coverings": self.coverings,
            "checks": self.checks,
            "homomorphisms": self.homomorphisms,
            "chains": self.chains,
            "failures": list(self.failures[:20]),
            "ok": self.ok,
        }


def catalog_groups(max_order: int) -> list[FiniteMatrixGroup]:
    out = []
    for name in ABSTRACT_GROUPS:
        G = abstract_group(name)
        if G.order <= max_order:
            out.append(G)
    return out


def check_model(S: GSet) -> list[str]:
    """Per-model theorem checks; returns failure descriptions."""
    bad = []
    res = verify_inertia_pushforward(S)
    if not res.ok:
        bad.append(f"{S.name}: coarse pushforward of inertia fails at orbit {res.counterexample}")
    phi = stringy_function(S)
    for k, r in enumerate(S.reps):
        if phi.values[k] != stabilizer_class_count(S, r):
            bad.append(f"{S.name}: stringy function at orbit {k} is {phi.values[k]}")
    if sum(phi.values) != Fraction(commuting_fixed_triples(S), S.group.order):
        bad.append(f"{S.name}: stringy function mass disagrees with commuting triples")
    I = inertia_model(S)
    if len(I.pairs) != sum(S.stab_order):
        bad.append(f"{S.name}: inertia point count")
    return bad


def _check_api_map(f: ModelMap) -> list[str]:
    """Run the public pushforwards on one map against the indicator of every source orbit."""
    bad = []
    S = f.source
    pi = coarse_map(f.target)
    for k, orb in enumerate(S.orbits):
        phi = indicator(S, orb)
        a = stack_pushforward(f, phi)
        b = equivariant_pushforward(f, phi)
        if a.values != b.values:
            bad.append(f"{S.name} -> {f.target.name}: pushforwards differ on orbit {k}")
        if weighted_euler(a) != weighted_euler(phi):
            bad.append(f"{S.name} -> {f.target.name}: mass not preserved")
        if not functoriality_check(pi, f, phi):
            bad.append(f"{S.name} -> {f.target.name}: functoriality through the coarse map")
    return bad


def _canonical_coverings(G: FiniteMatrixGroup) -> list[tuple]:
    """All projections G/K -> G/H for subgroups K <= H, with expected degree [H:K]."""
    subs = subgroups(G)
    spaces = {K: coset_gset(G, K) for K in subs}
    ident = tuple(range(G.order))
    out = []
    for K in subs:
        src = spaces[K]
        for H in subs:
            if not K <= H:
                continue
            tgt = spaces[H]
            # gK -> gH, with g the transversal element carrying the base coset to x
            points = [tgt.apply(src.transversal[x], 0) for x in range(src.npoints)]
            out.append((ModelMap(src, tgt, ident, tuple(points)), Fraction(len(H), len(K))))
    return out


def _fold_map(S: GSet) -> ModelMap:
    D = disjoint_union([S, S], name=f"2{S.name}")
    return ModelMap(D, S, tuple(range(S.group.order)), tuple(x % S.npoints for x in range(D.npoints)))


def exhaustive_suite(max_points: int = 6, max_group_order: int = 8, chain_points: int = 2,
                     api_points: int = 4) -> SuiteResult:
    """Verify the pushforward statements on every finite model within the bounds.

    Models are taken up to isomorphism (disjoint unions of coset spaces), which
    loses nothing since every statement is invariant under isomorphism.  Maps are
    swept by the compiled kernel against indicators of source orbits; by
    linearity this covers every invariant function.  Composable chains are
    checked through the public API for models up to ``chain_points`` points, and
    the kernel is cross-checked against the public pushforwards on one map per
    pair of models with at most ``api_points`` points each.
    """
    result = SuiteResult(max_points, max_group_order)
    groups = catalog_groups(max_group_order)
    for G in groups:
        result.groups.append(G.name)
        models = gsets_up_to(G, max_points)
        result.models += len(models)
        for S in models:
            result.failures.extend(check_model(S))
        packed = [_pack(S) for S in models]
        for S, ps in zip(models, packed):
            for T, pt in zip(models, packed):
                choices = _choices(S, T)
                maps, checks, cover, fails, first = kernels.gset_sweep(
                    G.order, ps[0], ps[1], ps[2], ps[3], ps[4], ps[5],
                    pt[0], pt[1], pt[2], pt[3], pt[4], choices,
                )
                result.maps += maps
                result.checks += checks
                result.coverings += cover
                if fails:
                    result.failures.append(f"{S.name} -> {T.name}: {fails} maps fail, first {first}")
                if maps and S.npoints <= api_points and T.npoints <= api_points:
                    images = [c[0] for c in choices]
                    f = ModelMap(S, T, tuple(range(G.order)),
                                 tuple(T.apply(S.transversal[x], images[S.orbit_of[x]]) for x in range(S.npoints)))
                    result.failures.extend(_check_api_map(f))
        for f, deg in _canonical_coverings(G):
            res = verify_etale_lemma(f)
            result.checks += 1
            if not res.ok or res.degree != deg:
                result.failures.append(f"{G.name}: coset projection degree {res.degree} != {deg}")
        for S in models:
            if S.npoints * 2 <= max_points:
                res = verify_etale_lemma(_fold_map(S))
                result.checks += 1
                if not res.ok or res.degree != 2:
                    result.failures.append(f"{S.name}: fold map degree {res.degree}")
        small = [S for S in models if S.npoints <= chain_points]
        for S in small:
            for T in small:
                first_maps = list(equivariant_maps(S, T))
                if not first_maps:
                    continue
                for U in small:
                    second = list(equivariant_maps(T, U))
                    for g in first_maps:
                        for f in second:
                            for orb in S.orbits:
                                result.chains += 1
                                if not functoriality_check(f, g, indicator(S, orb)):
                                    result.failures.append(f"{S.name} -> {T.name} -> {U.name}: functoriality")
    _point_maps(groups, result)
    return result


def _pack(S: GSet):
    return (S.act, S.npoints, S.reps, S.orbit_of, S.stab_order, S.transversal)


def _point_maps(groups, result: SuiteResult):
    """BG -> BH along every homomorphism, and pt -> BG -> BH chains."""
    pt = point_gset(trivial_group(), name="pt")
    for G in groups:
        BG = point_gset(G)
        to_bg = ModelMap(pt, BG, (0,), (0,))
        one_pt = constant(pt)
        if stack_pushforward(to_bg, one_pt).values != (Fraction(G.order),):
            result.failures.append(f"pt -> B{G.name}: pushforward of 1 is not |G|")
        for H in groups:
            BH = point_gset(H)
            for psi in homomorphisms(G, H):
                result.homomorphisms += 1
                f = ModelMap(BG, BH, psi, (0,))
                one = constant(BG)
                a = stack_pushforward(f, one)
                b = equivariant_pushforward(f, one)
                result.checks += 1
                if a.values != b.values or a.values != (Fraction(H.order, G.order),):
                    result.failures.append(f"B{G.name} -> B{H.name} along {psi}: {a.values} vs {b.values}")
                result.chains += 1
                if not functoriality_check(f, to_bg, one_pt):
                    result.failures.append(f"pt -> B{G.name} -> B{H.name}: functoriality")


def model_suite(S: GSet) -> SuiteResult:
    """Theorem checks for one G-set: per-model checks, every self-map, fold and coset coverings."""
    G = S.group
    result = SuiteResult(S.npoints, G.order, groups=[G.name], models=1)
    result.failures.extend(check_model(S))
    choices = _choices(S, S)
    ps = _pack(S)
    maps, checks, cover, fails, first = kernels.gset_sweep(G.order, *ps, *ps[:5], choices)
    result.maps, result.checks, result.coverings = maps, checks, cover
    if fails:
        result.failures.append(f"{S.name}: {fails} self-maps fail, first {first}")
    for f in itertools.islice(equivariant_maps(S, S), 64):
        result.failures.extend(_check_api_map(f))
        result.chains += 1
        if not functoriality_check(f, f, constant(S)):
            result.failures.append(f"{S.name}: functoriality of a self-map composite")
    res = verify_etale_lemma(_fold_map(S))
    result.checks += 1
    if not res.ok or res.degree != 2:
        result.failures.append(f"{S.name}: fold map degree {res.degree}")
    for f, deg in _canonical_coverings(G):
        res = verify_etale_lemma(f)
        result.checks += 1
        if not res.ok or res.degree != deg:
            result.failures.append(f"{G.name}: coset projection degree {res.degree} != {deg}")
    return result
