"""Independent brute-force oracles.

Nothing here imports orbinv.  Diagonal models are described by exponent vectors
(entry e means zeta_N^e); permutation models by permutation tuples.  E-polynomials
in uv only are returned as {exponent: coefficient} with Fraction exponents.
"""

from collections import Counter
from fractions import Fraction
from itertools import product


def frac(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def diag_elements(N, rows):
    """All exponent vectors in the abelian group generated by ``rows`` (mod N)."""
    n = len(rows[0]) if rows else 0
    seen = {(0,) * n}
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for r in rows:
                w = tuple((a + b) % N for a, b in zip(v, r))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(seen)


def diag_affine_age(N, v):
    return sum((Fraction(a, N) for a in v), Fraction(0))


def diag_affine_E(N, elements):
    """Abelian: every element is its own class, sector (uv)^(age + dim fixed)."""
    out = Counter()
    for v in elements:
        out[diag_affine_age(N, v) + sum(1 for a in v if a == 0)] += 1
    return dict(out)


def diag_projective_E(N, elements):
    out = Counter()
    for v in elements:
        classes = Counter(v)
        for a, mult in classes.items():
            age = sum((frac(Fraction(b - a, N)) for b in v if b != a), Fraction(0))
            for i in range(mult):
                out[age + i] += 1
    return dict(out)


def diag_projective_e_str(elements):
    """(1/|G|) sum over all pairs of chi of the joint fixed locus in P^(n-1)."""
    total = 0
    for g, h in product(elements, repeat=2):
        joint = Counter(zip(g, h))
        total += sum(joint.values())  # chi(P^(k-1)) = k per joint eigenspace
    return Fraction(total, len(elements))


def diag_projective_coarse(elements):
    return Fraction(sum(len(v) for v in elements), len(elements))


def compose(p, q):
    """p o q."""
    return tuple(p[i] for i in q)


def perm_closure(gens):
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def inverse(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def perm_classes(elements):
    seen = set()
    classes = []
    for g in elements:
        if g in seen:
            continue
        cls = {compose(compose(inverse(k), g), k) for k in elements}
        seen |= cls
        classes.append(sorted(cls))
    return classes


def cycle_lengths(p):
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen:
            continue
        k, j = 0, i
        while j not in seen:
            seen.add(j)
            j = p[j]
            k += 1
        out.append(k)
    return out


def perm_affine_E(gens):
    """Permutation representation on C^n: an l-cycle contributes eigenvalues all l-th roots."""
    out = Counter()
    for cls in perm_classes(perm_closure(gens)):
        lens = cycle_lengths(cls[0])
        age = sum((Fraction(l - 1, 2) for l in lens), Fraction(0))
        out[age + len(lens)] += 1
    return dict(out)


def commuting_pairs(elements):
    return sum(1 for g in elements for h in elements if compose(g, h) == compose(h, g))


def gset_inertia_count(elements, npoints, action):
    """#{(x, g) : g x = x} for a permutation-group action given as element -> point map."""
    return sum(1 for g in elements for x in range(npoints) if action(g)[x] == x)


def cyclic_centralizer_sum(n):
    # abelian: n classes, each centralizer is the whole group
    return Fraction(n, n)


def projective_space_E(d):
    return {Fraction(i): 1 for i in range(d + 1)}


def line_bundle_over(E_base):
    """E_c of the total space of a line bundle: multiply by uv."""
    return {k + 1: c for k, c in E_base.items()}


def pn_trace_values(n):
    """Trivial group on P^n: (lhs, rhs) of the trace identity by direct Hodge sums.

    lhs = sum_p (-1)^p (p - n/2)^2 chi(Omega^p) with chi(Omega^p) = (-1)^p;
    rhs = (1/12)(n chi + 2 c1 c_(n-1)), chi = n + 1, c1 = (n+1)h, c_(n-1) = C(n+1, n-1)h^(n-1).
    """
    from math import comb

    half = Fraction(n, 2)
    lhs = sum(((p - half) ** 2 for p in range(n + 1)), Fraction(0))
    rhs = Fraction(1, 12) * (n * (n + 1) + 2 * (n + 1) * comb(n + 1, n - 1))
    return lhs, rhs
