"""Finite matrix groups: breadth-first closure and conjugacy structure.

Elements get ids in breadth-first order from the generators, so ids are stable for
a given generator list.  The full Cayley table is built lazily by the kernel and
drives classes, centralizers and commuting-pair orbits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .cyclo import Cyclotomic, CyclotomicField, Matrix, field, rank
from .kernels import kernels

DEFAULT_CAP = 20000


class GroupError(ValueError):
    pass


class GroupTooLarge(GroupError):
    def __init__(self, cap, partial):
        self.cap = cap
        self.partial = partial
        super().__init__(
            f"group closure exceeded cap {cap} ({partial} elements found); "
            "a generator may have infinite order"
        )


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: tuple
    centralizer_order: int

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class CommutingPairClass:
    representative: tuple
    orbit_size: int
    stabilizer_order: int


class FiniteMatrixGroup:
    """A finite group of invertible matrices with stable element ids.

    ``elements[0]`` is the identity.  ``parent``/``via`` form the breadth-first
    spanning tree: element i equals elements[parent[i]] * generators[via[i]].
    """

    def __init__(self, fld: CyclotomicField, dim: int, elements, generators, parent, via, rgen, name=""):
        self.field = fld
        self.dim = dim
        self.elements = list(elements)
        self.generators = list(generators)
        self.parent = list(parent)
        self.via = list(via)
        self.rgen = [list(r) for r in rgen]
        self.name = name
        self.index = {m: i for i, m in enumerate(self.elements)}
        self._table = None
        self._inv = None
        self._classes = None
        self._labels = None
        self._pairs = None
        self._orders = None

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    identity = 0

    def __repr__(self):
        return f"<FiniteMatrixGroup {self.name or ''} order={self.order} dim={self.dim}>"

    # -- tables -----------------------------------------------------------------

    def _build_table(self):
        n = self.order
        if self.rgen:
            self._table, self._inv = kernels.cayley_table(self.rgen, self.parent, self.via, n)
        else:
            self._table, self._inv = [0], [0]

    @property
    def table(self) -> list:
        if self._table is None:
            self._build_table()
        return self._table

    @property
    def inverses(self) -> list:
        if self._inv is None:
            self._build_table()
        return self._inv

    def mul(self, a: int, b: int) -> int:
        return self.table[a * self.order + b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, k: int, x: int) -> int:
        """k^-1 x k."""
        return self.mul(self.mul(self.inv(k), x), k)

    def id_of(self, m: Matrix) -> int:
        return self.index[m]

    def word(self, i: int) -> list[int]:
        """Generator indices whose product, left to right, is element i."""
        out = []
        while i:
            out.append(self.via[i])
            i = self.parent[i]
        return out[::-1]

    def orders(self) -> list[int]:
        if self._orders is None:
            n = self.order
            t = self.table
            out = [1] * n
            for g in range(1, n):
                k, x = 1, g
                while x:
                    x = t[x * n + g]
                    k += 1
                out[g] = k
            self._orders = out
        return self._orders

    def exponent(self) -> int:
        from math import lcm

        return lcm(*self.orders())


def generate_group(generators: Sequence[Matrix], cap: int = DEFAULT_CAP, *,
                   fld: Optional[CyclotomicField] = None, dim: Optional[int] = None,
                   name: str = "") -> FiniteMatrixGroup:
    """Breadth-first closure of the generators under right multiplication."""
    generators = list(generators)
    if generators:
        fld = generators[0].field
        dim = generators[0].nrows
    elif fld is None or dim is None:
        raise GroupError("an empty generator list needs an explicit field and dimension")
    for k, g in enumerate(generators):
        if g.field is not fld:
            raise GroupError(f"generator {k} lives in a different field")
        if g.shape != (dim, dim):
            raise GroupError(f"generator {k} has shape {g.shape}, expected {(dim, dim)}")
        if rank(g) < dim:
            raise GroupError(f"generator {k} is not invertible")
    ident = Matrix.identity(fld, dim)
    elements = [ident]
    index = {ident: 0}
    parent = [-1]
    via = [-1]
    ngen = len(generators)
    rgen = [[] for _ in range(ngen)]
    i = 0
    while i < len(elements):
        x = elements[i]
        for s, g in enumerate(generators):
            y = x * g
            j = index.get(y)
            if j is None:
                if len(elements) >= cap:
                    raise GroupTooLarge(cap, len(elements))
                j = len(elements)
                index[y] = j
                elements.append(y)
                parent.append(i)
                via.append(s)
            rgen[s].append(j)
        i += 1
    return FiniteMatrixGroup(fld, dim, elements, generators, parent, via, rgen, name=name)


def conjugacy_classes(G: FiniteMatrixGroup) -> list[ConjugacyClass]:
    if G._classes is None:
        n = G.order
        labels, reps = kernels.conjugacy_labels(G.table, G.inverses, n)
        members = [[] for _ in reps]
        for x, c in enumerate(labels):
            members[c].append(x)
        t = G.table
        classes = []
        for rep, mem in zip(reps, members):
            cent = sum(1 for h in range(n) if t[rep * n + h] == t[h * n + rep])
            if cent * len(mem) != n:
                raise ArithmeticError("class size times centralizer order differs from |G|")
            classes.append(ConjugacyClass(rep, tuple(mem), cent))
        G._classes = classes
        G._labels = labels
    return G._classes


def class_of(G: FiniteMatrixGroup, g: int) -> int:
    conjugacy_classes(G)
    return G._labels[g]


def commuting_pair_classes(G: FiniteMatrixGroup) -> list[CommutingPairClass]:
    if G._pairs is None:
        n = G.order
        reps, sizes = kernels.commuting_pair_orbits(G.table, G.inverses, n)
        out = []
        for rep, size in zip(reps, sizes):
            if n % size:
                raise ArithmeticError("pair orbit size does not divide |G|")
            out.append(CommutingPairClass(tuple(rep), size, n // size))
        G._pairs = out
    return G._pairs


def count_commuting_pairs(G: FiniteMatrixGroup) -> int:
    return kernels.count_commuting_pairs(G.table, G.order)


def centralizer(G: FiniteMatrixGroup, g: int) -> list[int]:
    n = G.order
    t = G.table
    return [h for h in range(n) if t[g * n + h] == t[h * n + g]]


def pair_centralizer(G: FiniteMatrixGroup, g: int, h: int) -> list[int]:
    cg = set(centralizer(G, g))
    return [k for k in centralizer(G, h) if k in cg]


def element_order(G: FiniteMatrixGroup, g: int) -> int:
    return G.orders()[g]


def determinant(G: FiniteMatrixGroup, g: int) -> Cyclotomic:
    return G.elements[g].determinant()


def class_equation_sum(G: FiniteMatrixGroup) -> Fraction:
    """Sum over conjugacy classes of 1/|C_G(g)|; equals 1 for every finite group."""
    return sum((Fraction(1, c.centralizer_order) for c in conjugacy_classes(G)), Fraction(0))


# -- abstract groups as permutation matrix groups ------------------------------


def permutation_group(perms: Sequence[Sequence[int]], degree: Optional[int] = None,
                      cap: int = DEFAULT_CAP, name: str = "") -> FiniteMatrixGroup:
    """Group generated by permutation matrices over Q; perm[i] is the image of i."""
    if perms:
        degree = len(perms[0])
    if degree is None:
        raise GroupError("degree required for the trivial permutation group")
    fld = field(1)
    for p in perms:
        if sorted(p) != list(range(degree)):
            raise GroupError(f"{list(p)} is not a permutation of 0..{degree - 1}")
    gens = [Matrix.permutation(fld, p) for p in perms]
    return generate_group(gens, cap, fld=fld, dim=degree, name=name)


def as_permutation(m: Matrix) -> tuple[int, ...]:
    """Inverse of :meth:`Matrix.permutation` for permutation matrices."""
    n = m.ncols
    out = []
    for i in range(n):
        col = [m.rows[j][i] for j in range(n)]
        out.append(next(j for j, x in enumerate(col) if x))
    return tuple(out)


def _cycle(n):
    return [tuple((i + 1) % n for i in range(n))]


def _direct(*factors):
    total = sum(len(f[0]) for f in factors)
    out = []
    off = 0
    for f in factors:
        k = len(f[0])
        for p in f:
            out.append(tuple(range(off)) + tuple(off + x for x in p) + tuple(range(off + k, total)))
        off += k
    return out


def _regular(mats):
    # left regular representation of the matrix group generated by mats
    H = generate_group(mats)
    perms = []
    for g in mats:
        perms.append(tuple(H.index[g * x] for x in H.elements))
    return perms


def _q8_perms():
    F = field(4)
    i = Matrix.from_strings(F, [["z", "0"], ["0", "-z"]])
    j = Matrix.from_strings(F, [["0", "1"], ["-1", "0"]])
    return _regular([i, j])


ABSTRACT_GROUPS = {
    "1": lambda: [],
    "Z2": lambda: _cycle(2),
    "Z3": lambda: _cycle(3),
    "Z4": lambda: _cycle(4),
    "Z2xZ2": lambda: _direct(_cycle(2), _cycle(2)),
    "Z5": lambda: _cycle(5),
    "Z6": lambda: _cycle(6),
    "S3": lambda: [(1, 0, 2), (1, 2, 0)],
    "Z7": lambda: _cycle(7),
    "Z8": lambda: _cycle(8),
    "Z2xZ4": lambda: _direct(_cycle(2), _cycle(4)),
    "Z2xZ2xZ2": lambda: _direct(_cycle(2), _cycle(2), _cycle(2)),
    "D4": lambda: [(1, 2, 3, 0), (3, 2, 1, 0)],
    "Q8": _q8_perms,
}


def abstract_group(name: str) -> FiniteMatrixGroup:
    """Catalog group of order at most 8 as a permutation matrix group."""
    try:
        perms = ABSTRACT_GROUPS[name]()
    except KeyError:
        raise GroupError(f"unknown catalog group {name!r}") from None
    return permutation_group(perms, degree=1, name=name)


def cyclic_group(n: int) -> FiniteMatrixGroup:
    if n == 1:
        return permutation_group([], degree=1, name="1")
    return permutation_group(_cycle(n), name=f"Z{n}")
