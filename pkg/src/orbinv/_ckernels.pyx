# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``; same signatures, same outputs."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

BACKEND = "cython"



cdef int* _ints(seq, Py_ssize_t n) except NULL:
    cdef int* out = <int*> malloc(max(n, 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = seq[i]
    return out


def _poly_mulmod_slow(a, b, red):
    cdef Py_ssize_t deg = len(a), i, j, k
    prod = [0] * (2 * deg - 1)
    for i in range(deg):
        x = a[i]
        if x:
            for j in range(deg):
                y = b[j]
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


def poly_mulmod(a, b, red):
    cdef Py_ssize_t deg = len(a), i, j, k
    cdef long long ma = 0, mb = 0, mr = 1, v, c
    cdef long long A[64]
    cdef long long B[64]
    cdef long long P[127]
    if deg > 64:
        return _poly_mulmod_slow(a, b, red)
    try:
        for i in range(deg):
            v = a[i]
            A[i] = v
            if v < 0:
                v = -v
            if v > ma:
                ma = v
            v = b[i]
            B[i] = v
            if v < 0:
                v = -v
            if v > mb:
                mb = v
    except OverflowError:
        return _poly_mulmod_slow(a, b, red)
    if ma >= (1LL << 24) or mb >= (1LL << 24):
        return _poly_mulmod_slow(a, b, red)
    for row in red:
        for x in row:
            v = x
            if v < 0:
                v = -v
            if v > mr:
                mr = v
    # |P| < deg * 2^48 and each reduced entry is below |P| * (1 + deg * mr)
    if deg * (1 + deg * mr) >= 32768:
        return _poly_mulmod_slow(a, b, red)
    for k in range(2 * deg - 1):
        P[k] = 0
    for i in range(deg):
        if A[i]:
            for j in range(deg):
                if B[j]:
                    P[i + j] += A[i] * B[j]
    for k in range(deg, 2 * deg - 1):
        c = P[k]
        if c:
            row = red[k - deg]
            for i in range(deg):
                v = row[i]
                if v:
                    P[i] += c * v
    return tuple([P[i] for i in range(deg)])


def cayley_table(rgen, parent, via, int n):
    cdef int ngen = len(rgen)
    cdef int* R = <int*> malloc(max(ngen * n, 1) * sizeof(int))
    cdef int* par = _ints(parent, n)
    cdef int* vi = _ints(via, n)
    cdef int* T = <int*> malloc(<size_t> n * n * sizeof(int))
    cdef int a, i, s
    cdef long base
    if R == NULL or T == NULL:
        raise MemoryError()
    try:
        for s in range(ngen):
            row = rgen[s]
            for i in range(n):
                R[s * n + i] = row[i]
        inv = [0] * n
        for a in range(n):
            base = <long> a * n
            T[base] = a
            for i in range(1, n):
                T[base + i] = R[vi[i] * n + T[base + par[i]]]
            for i in range(n):
                if T[base + i] == 0:
                    inv[a] = i
                    break
        table = [T[i] for i in range(<long> n * n)]
        return table, inv
    finally:
        free(R)
        free(par)
        free(vi)
        free(T)


def conjugacy_labels(table, inv, int n):
    cdef int* T = _ints(table, <Py_ssize_t> n * n)
    cdef int* I = _ints(inv, n)
    cdef int* lab = <int*> malloc(n * sizeof(int))
    cdef int x, k, y, c = 0
    try:
        for x in range(n):
            lab[x] = -1
        reps = []
        for x in range(n):
            if lab[x] >= 0:
                continue
            reps.append(x)
            for k in range(n):
                y = T[<long> T[<long> I[k] * n + x] * n + k]
                lab[y] = c
            c += 1
        return [lab[x] for x in range(n)], reps
    finally:
        free(T)
        free(I)
        free(lab)


def count_commuting_pairs(table, int n):
    cdef int* T = _ints(table, <Py_ssize_t> n * n)
    cdef int g, h
    cdef long count = 0
    try:
        for g in range(n):
            for h in range(n):
                if T[<long> g * n + h] == T[<long> h * n + g]:
                    count += 1
        return count
    finally:
        free(T)


def commuting_pair_orbits(table, inv, int n):
    cdef int* T = _ints(table, <Py_ssize_t> n * n)
    cdef int* I = _ints(inv, n)
    cdef char* seen = <char*> malloc(<size_t> n * n)
    cdef int g, h, k, g2, h2, size
    cdef long ki
    if seen == NULL:
        raise MemoryError()
    memset(seen, 0, <size_t> n * n)
    try:
        reps = []
        sizes = []
        for g in range(n):
            for h in range(n):
                if seen[<long> g * n + h] or T[<long> g * n + h] != T[<long> h * n + g]:
                    continue
                size = 0
                for k in range(n):
                    ki = <long> I[k] * n
                    g2 = T[<long> T[ki + g] * n + k]
                    h2 = T[<long> T[ki + h] * n + k]
                    if not seen[<long> g2 * n + h2]:
                        seen[<long> g2 * n + h2] = 1
                        size += 1
                reps.append((g, h))
                sizes.append(size)
        return reps, sizes
    finally:
        free(T)
        free(I)
        free(seen)


def gset_sweep(int order, act_s, int m_s, reps_s, orbit_s, stab_s, trans_s,
               act_t, int m_t, reps_t, orbit_t, stab_t, choices):
    cdef int k = len(reps_s)
    cdef int nrt = len(reps_t)
    cdef int i, j, t, x, u, tu, hit, w, deg, lhs, rhs, mass
    cdef long n_maps = 0, n_checks = 0, n_cover = 0, n_fail = 0
    cdef bint covering
    cdef int bad
    if k == 0:
        return 0, 0, 0, 0, None
    for c in choices:
        if len(c) == 0:
            return 0, 0, 0, 0, None
    cdef int* AT = _ints(act_t, len(act_t))
    cdef int* RS = _ints(reps_s, k)
    cdef int* OS = _ints(orbit_s, m_s)
    cdef int* SS = _ints(stab_s, m_s)
    cdef int* TS = _ints(trans_s, m_s)
    cdef int* RT = _ints(reps_t, nrt)
    cdef int* OT = _ints(orbit_t, m_t)
    cdef int* ST = _ints(stab_t, m_t)
    cdef int* sizes = <int*> malloc(k * sizeof(int))
    cdef int* idx = <int*> malloc(k * sizeof(int))
    cdef int* img = <int*> malloc(k * sizeof(int))
    cdef int* f = <int*> malloc(max(m_s, 1) * sizeof(int))
    cdef long* stack = <long*> malloc(m_t * sizeof(long))
    cdef long* fiber = <long*> malloc(m_t * sizeof(long))
    cdef long* total = <long*> malloc(m_t * sizeof(long))
    cdef int** CH = <int**> malloc(k * sizeof(int*))
    kinds = (None, "stack-vs-fiber", "functoriality", "mass", "etale")
    first = None
    for i in range(k):
        CH[i] = NULL
    try:
        for i in range(k):
            sizes[i] = len(choices[i])
            CH[i] = _ints(choices[i], sizes[i])
            idx[i] = 0
        while True:
            for i in range(k):
                img[i] = CH[i][idx[i]]
            for x in range(m_s):
                f[x] = AT[TS[x] * m_t + img[OS[x]]]
            n_maps += 1
            bad = 0
            for t in range(m_t):
                total[t] = 0
            for i in range(k):
                hit = OT[img[i]]
                w = order // SS[RS[i]]
                for t in range(m_t):
                    fiber[t] = 0
                for x in range(m_s):
                    if OS[x] == i:
                        fiber[f[x]] += 1
                for t in range(m_t):
                    stack[t] = ST[t] * w if OT[t] == hit else 0
                    n_checks += 1
                    if stack[t] != order * fiber[t] and bad == 0:
                        bad = 1
                    total[t] += stack[t]
                mass = 0
                for u in range(nrt):
                    tu = RT[u]
                    lhs = w if u == hit else 0
                    rhs = stack[tu] // ST[tu]
                    n_checks += 1
                    if (lhs != rhs or stack[tu] % ST[tu]) and bad == 0:
                        bad = 2
                    mass += rhs
                n_checks += 1
                if mass != w and bad == 0:
                    bad = 3
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
                    if total[t] != (order * deg if fiber[t] else 0) and bad == 0:
                        bad = 4
            if bad:
                n_fail += 1
                if first is None:
                    first = (kinds[bad], tuple([img[i] for i in range(k)]))
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
    finally:
        for i in range(k):
            free(CH[i])
        free(CH)
        free(AT); free(RS); free(OS); free(SS); free(TS); free(RT); free(OT); free(ST)
        free(sizes); free(idx); free(img); free(f); free(stack); free(fiber); free(total)
