"""Pure-Python implementations of the hot kernels.

Every function here has a compiled twin in ``_ckernels.pyx`` with the same
signature and the same output, element for element.  Tables are flat row-major
lists: ``table[a * n + b]`` is the id of the product a*b.
"""

BACKEND = "python"


def poly_mulmod(a, b, red):
    """Product of two power-basis integer vectors, reduced by the rows ``red``.

    ``red[k]`` holds x^(deg + k) modulo the cyclotomic polynomial.
    """
    deg = len(a)
    prod = [0] * (2 * deg - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    out = prod[:deg]
    for k in range(deg, 2 * deg - 1):
        c = prod[k]
        if c:
            row = red[k - deg]
            for i in range(deg):
                if row[i]:
                    out[i] += c * row[i]
    return tuple(out)


def cayley_table(rgen, parent, via, n):
    """Full multiplication table and inverse list from the right Cayley graph.

    Element ids follow breadth-first order: id i > 0 equals parent[i] * gen[via[i]]
    with parent[i] < i, and rgen[s][j] is the id of (element j) * gen[s].
    """
    table = [0] * (n * n)
    inv = [0] * n
    for a in range(n):
        base = a * n
        table[base] = a
        for i in range(1, n):
            table[base + i] = rgen[via[i]][table[base + parent[i]]]
        row = table[base : base + n]
        inv[a] = row.index(0)
    return table, inv


def conjugacy_labels(table, inv, n):
    """Class label per element; classes numbered by their smallest member."""
    labels = [-1] * n
    reps = []
    for x in range(n):
        if labels[x] >= 0:
            continue
        c = len(reps)
        reps.append(x)
        for k in range(n):
            y = table[table[inv[k] * n + x] * n + k]
            labels[y] = c
    return labels, reps


def count_commuting_pairs(table, n):
    count = 0
    for g in range(n):
        row = g * n
        for h in range(n):
            if table[row + h] == table[h * n + g]:
                count += 1
    return count


def commuting_pair_orbits(table, inv, n):
    """Orbits of ordered commuting pairs under simultaneous conjugation.

    Pairs are scanned lexicographically; each orbit is represented by its first
    pair.  Returns (representatives, orbit sizes).
    """
    seen = bytearray(n * n)
    reps = []
    sizes = []
    for g in range(n):
        row = g * n
        for h in range(n):
            if seen[row + h] or table[row + h] != table[h * n + g]:
                continue
            size = 0
            for k in range(n):
                ki = inv[k] * n
                g2 = table[table[ki + g] * n + k]
                h2 = table[table[ki + h] * n + k]
                idx = g2 * n + h2
                if not seen[idx]:
                    seen[idx] = 1
                    size += 1
            reps.append((g, h))
            sizes.append(size)
    return reps, sizes


def gset_sweep(order, act_s, m_s, reps_s, orbit_s, stab_s, trans_s,
               act_t, m_t, reps_t, orbit_t, stab_t, choices):
    """Check every equivariant map S -> T over one group of the given order.

    A map is determined by the image of each source orbit representative; the
    allowed images of representative i are ``choices[i]`` (points of T fixed by
    its stabilizer).  All values are scaled by the group order so they are
    integers.  Per map and per source orbit O, with phi the indicator of O:

    * stack route   order * e_T(t) / e_S(O) on the target orbit hit by O
    * fiber route   order * #{x in O : f(x) = t}
    * functoriality through the coarse map of T, and mass preservation
    * for coverings (constant fiber size d over the image) f_* 1 == d * 1_image

    Returns (maps, checks, coverings, failures, first_failure) where
    first_failure is (kind, images) or None.
    """
    k = len(reps_s)
    n_maps = 0
    n_checks = 0
    n_cover = 0
    n_fail = 0
    first = None
    if k == 0:
        return 0, 0, 0, 0, None
    if any(len(c) == 0 for c in choices):
        return 0, 0, 0, 0, None
    sizes = [len(c) for c in choices]
    idx = [0] * k
    f = [0] * m_s
    stack = [0] * m_t
    fiber = [0] * m_t
    total = [0] * m_t
    nreps_t = len(reps_t)
    while True:
        images = [choices[i][idx[i]] for i in range(k)]
        for x in range(m_s):
            f[x] = act_t[trans_s[x] * m_t + images[orbit_s[x]]]
        n_maps += 1
        bad = None
        for t in range(m_t):
            total[t] = 0
        for i in range(k):
            rep = reps_s[i]
            hit = orbit_t[images[i]]
            w = order // stab_s[rep]
            for t in range(m_t):
                fiber[t] = 0
            for x in range(m_s):
                if orbit_s[x] == i:
                    fiber[f[x]] += 1
            for t in range(m_t):
                stack[t] = stab_t[t] * w if orbit_t[t] == hit else 0
                n_checks += 1
                if stack[t] != order * fiber[t]:
                    bad = bad or "stack-vs-fiber"
                total[t] += stack[t]
            mass = 0
            for u in range(nreps_t):
                tu = reps_t[u]
                lhs = w if u == hit else 0
                rhs = stack[tu] // stab_t[tu]
                n_checks += 1
                if lhs != rhs or stack[tu] % stab_t[tu]:
                    bad = bad or "functoriality"
                mass += rhs
            n_checks += 1
            if mass != w:
                bad = bad or "mass"
        for t in range(m_t):
            fiber[t] = 0
        for x in range(m_s):
            fiber[f[x]] += 1
        deg = 0
        covering = True
        for t in range(m_t):
            if fiber[t]:
                if deg == 0:
                    deg = fiber[t]
                elif fiber[t] != deg:
                    covering = False
        if covering:
            n_cover += 1
            for t in range(m_t):
                n_checks += 1
                expect = order * deg if fiber[t] else 0
                if total[t] != expect:
                    bad = bad or "etale"
        if bad is not None:
            n_fail += 1
            if first is None:
                first = (bad, tuple(images))
        # odometer
        j = 0
        while j < k:
            idx[j] += 1
            if idx[j] < sizes[j]:
                break
            idx[j] = 0
            j += 1
        if j == k:
            break
    return n_maps, n_checks, n_cover, n_fail, first
