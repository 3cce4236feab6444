"""Exact arithmetic in cyclotomic fields Q(zeta_N) and dense linear algebra over them.

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) reduced modulo the
N-th cyclotomic polynomial, as an integer numerator vector over a positive common
denominator.  The representation is canonical, so equality and hashing are plain
tuple comparisons.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .kernels import kernels


class ConductorMismatch(ValueError):
    pass


class FieldTooSmall(ValueError):
    """A root of unity was requested that does not live in the current field."""


class SingularMatrix(ZeroDivisionError):
    pass


class LiteralError(ValueError):
    def __init__(self, text, position, reason):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"bad cyclotomic literal {text!r} at position {position}: {reason}")


def totient(n: int) -> int:
    result = n
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_exact_div(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic; coefficients low to high
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + dd]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


# -- rational polynomial helpers used by the Euclidean inverse ------------------


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _qpoly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        _trim(a)
    return _trim(q), a


def _qpoly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _qpoly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim([Fraction(x) for x in out])


class CyclotomicField:
    """The field Q(zeta_N).  Obtain instances through :func:`field`."""

    def __init__(self, conductor: int):
        self.conductor = conductor
        self.modulus = cyclotomic_polynomial(conductor)
        self.degree = len(self.modulus) - 1
        deg = self.degree
        # rows[k - deg] = coefficients of x^k mod Phi_N, for deg <= k <= 2 deg - 2
        rows = []
        cur = [-c for c in self.modulus[:deg]]
        for _ in range(max(deg - 1, 0)):
            rows.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c - top * m for c, m in zip(cur, self.modulus)]
        self.reduction = tuple(rows)
        # largest order of a root of unity in the field
        self.root_order = conductor if conductor % 2 == 0 else 2 * conductor
        self.zero = Cyclotomic(self, (0,) * deg, 1)
        self.one = self.from_int(1)
        self._zeta = [self._monomial(k) for k in range(conductor)]
        self._log = {z._key: k for k, z in enumerate(self._zeta)}

    def __repr__(self):
        return f"CyclotomicField({self.conductor})"

    def __reduce__(self):
        return field, (self.conductor,)

    def _monomial(self, k: int) -> "Cyclotomic":
        # z^k reduced, via repeated multiplication by z
        vec = [0] * self.degree
        if self.degree == 1:
            # Q itself: z = 1 (N = 1) or z = -1 (N = 2)
            vec[0] = 1 if self.conductor == 1 or k % 2 == 0 else -1
            return Cyclotomic(self, tuple(vec), 1)
        vec[0] = 1
        for _ in range(k):
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                vec = [c - top * m for c, m in zip(vec, self.modulus)]
        return Cyclotomic(self, tuple(vec), 1)

    def from_int(self, n: int) -> "Cyclotomic":
        return Cyclotomic(self, (n,) + (0,) * (self.degree - 1), 1)

    def from_rational(self, q) -> "Cyclotomic":
        q = Fraction(q)
        return Cyclotomic.make(self, (q.numerator,) + (0,) * (self.degree - 1), q.denominator)

    def from_coefficients(self, coeffs: Iterable) -> "Cyclotomic":
        """Element with the given rational power-basis coefficients (padded with zeros)."""
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > self.degree:
            raise ValueError("too many coefficients for this field")
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Cyclotomic.make(self, tuple(int(c * den) for c in coeffs), den)

    def zeta(self, k: int = 1) -> "Cyclotomic":
        return self._zeta[k % self.conductor]

    def root_of_unity(self, k: int, m: int) -> "Cyclotomic":
        """zeta_m^k as an element of this field."""
        L = self.root_order
        if L % m:
            raise FieldTooSmall(
                f"primitive {m}-th roots of unity are not in Q(zeta_{self.conductor}); raise root_order"
            )
        e = (k % m) * (L // m)
        if L == self.conductor:
            return self._zeta[e]
        # N odd: zeta_2N = -zeta_N^((N+1)/2)
        N = self.conductor
        z = self._zeta[(e * ((N + 1) // 2)) % N]
        return -z if e % 2 else z

    def parse(self, text: str) -> "Cyclotomic":
        return parse_literal(text, self)


@lru_cache(maxsize=None)
def field(conductor: int) -> CyclotomicField:
    if not isinstance(conductor, int) or conductor < 1:
        raise ValueError("conductor must be a positive integer")
    return CyclotomicField(conductor)


class Cyclotomic:
    """Immutable element of Q(zeta_N)."""

    __slots__ = ("field", "num", "den", "_key", "_hash")

    def __init__(self, fld: CyclotomicField, num: tuple, den: int):
        # callers guarantee normalization; use Cyclotomic.make otherwise
        self.field = fld
        self.num = num
        self.den = den
        self._key = (num, den)
        self._hash = hash((fld.conductor, num, den))

    @classmethod
    def make(cls, fld, num, den) -> "Cyclotomic":
        if den < 0:
            num = tuple(-c for c in num)
            den = -den
        g = math.gcd(den, *num)
        if g != 1:
            num = tuple(c // g for c in num)
            den //= g
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if not any(num):
            den = 1
        return cls(fld, tuple(num), den)

    # -- structure --------------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self.field.conductor

    @property
    def coefficients(self) -> tuple:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def _check(self, other):
        if isinstance(other, Cyclotomic):
            if other.field is not self.field:
                raise ConductorMismatch(
                    f"conductors differ: {self.field.conductor} vs {other.field.conductor}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        if not any(other.num):
            return self
        if not any(self.num):
            return other
        a, b = self.den, other.den
        if a == b:
            return Cyclotomic.make(self.field, tuple(x + y for x, y in zip(self.num, other.num)), a)
        return Cyclotomic.make(
            self.field, tuple(x * b + y * a for x, y in zip(self.num, other.num)), a * b
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.field, tuple(-x for x in self.num), self.den)

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        if not any(self.num) or not any(other.num):
            return self.field.zero
        num = kernels.poly_mulmod(self.num, other.num, self.field.reduction)
        return Cyclotomic.make(self.field, num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_N."""
        if not any(self.num):
            raise ZeroDivisionError("inverse of zero")
        nz = [i for i, c in enumerate(self.num) if c]
        if len(nz) == 1 and nz[0] == 0:
            return Cyclotomic.make(self.field, (self.den,) + (0,) * (self.field.degree - 1), self.num[0])
        fld = self.field
        a = _trim([Fraction(c, self.den) for c in self.num])
        m = [Fraction(c) for c in fld.modulus]
        # invariant: s * a == r (mod m)
        r0, r1 = m, a
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
        c = r1[0]
        coeffs = [x / c for x in s1]
        _, coeffs = _qpoly_divmod(coeffs, m) if len(coeffs) > fld.degree else (None, coeffs)
        return fld.from_coefficients(coeffs)

    def __truediv__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.field is other.field and self._key == other._key
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return any(self.num)

    # -- roots of unity and reporting -------------------------------------------

    def root_of_unity_log(self) -> Optional[int]:
        """k in [0, N) with self == zeta_N^k, or None."""
        return self.field._log.get(self._key)

    def to_complex(self) -> complex:
        N = self.field.conductor
        z = cmath.exp(2j * cmath.pi / N)
        return sum((c / self.den) * z**i for i, c in enumerate(self.num))

    def __repr__(self):
        return f"Cyclotomic({self.field.conductor}, {self})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            atom = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not atom:
                t = str(c)
            elif c == 1:
                t = atom
            elif c == -1:
                t = "-" + atom
            else:
                t = f"{c}*{atom}"
            terms.append(t)
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out


# -- module-level operation names ---------------------------------------------


def cyc_add(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a + b


def cyc_sub(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a - b


def cyc_mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a * b


def cyc_inv(a: Cyclotomic) -> Cyclotomic:
    return a.inverse()


def root_of_unity_log(a: Cyclotomic) -> Optional[int]:
    return a.root_of_unity_log()


# -- literal parsing ------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(z)|(\^)|(\*)|([+-]))")


def parse_literal(text: str, fld: CyclotomicField) -> Cyclotomic:
    """Parse ``expr ::= term (("+"|"-") term)*`` with ``term ::= [rational "*"] atom``.

    A single leading sign is accepted.  ``z`` is zeta_N of ``fld``.
    """
    if not isinstance(text, str):
        raise LiteralError(repr(text), 0, "entry must be a string")
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m or m.end() == pos:
            raise LiteralError(text, pos, "unexpected character")
        kind = m.lastindex
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    if not tokens:
        raise LiteralError(text, 0, "empty literal")

    RAT, Z, CARET, STAR, SIGN = 1, 2, 3, 4, 5
    i = 0
    total = fld.zero

    def rational(tok):
        s, p = tok[1], tok[2]
        if "/" in s:
            a, b = s.split("/")
            if int(b) == 0:
                raise LiteralError(text, p, "zero denominator")
            return Fraction(int(a), int(b))
        return Fraction(int(s))

    def atom():
        nonlocal i
        if i >= len(tokens):
            raise LiteralError(text, len(text), "expected a number or z")
        kind, s, p = tokens[i]
        if kind == RAT:
            i += 1
            return fld.from_rational(rational(tokens[i - 1]))
        if kind == Z:
            i += 1
            if i < len(tokens) and tokens[i][0] == CARET:
                i += 1
                if i >= len(tokens) or tokens[i][0] != RAT or "/" in tokens[i][1]:
                    where = tokens[i][2] if i < len(tokens) else len(text)
                    raise LiteralError(text, where, "expected an integer exponent after '^'")
                k = int(tokens[i][1])
                i += 1
                return fld.zeta(k)
            return fld.zeta(1)
        raise LiteralError(text, p, f"unexpected {s!r}")

    def term():
        nonlocal i
        if i < len(tokens) and tokens[i][0] == RAT and i + 1 < len(tokens) and tokens[i + 1][0] == STAR:
            coeff = rational(tokens[i])
            i += 2
            return atom() * coeff
        return atom()

    sign = 1
    if tokens[0][0] == SIGN:
        sign = -1 if tokens[0][1] == "-" else 1
        i = 1
    total = term() * sign
    while i < len(tokens):
        kind, s, p = tokens[i]
        if kind != SIGN:
            raise LiteralError(text, p, f"expected '+' or '-', got {s!r}")
        i += 1
        t = term()
        total = total + t if s == "+" else total - t
    return total


# -- matrices -------------------------------------------------------------------


class Matrix:
    """Immutable dense matrix over one cyclotomic field."""

    __slots__ = ("field", "rows", "nrows", "ncols", "_hash")

    def __init__(self, fld: CyclotomicField, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must be non-empty")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("matrix rows have unequal lengths")
        self.field = fld
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self._hash = hash(rows)

    @classmethod
    def identity(cls, fld, n) -> "Matrix":
        z, o = fld.zero, fld.one
        return cls(fld, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, fld, nrows, ncols) -> "Matrix":
        return cls(fld, [[fld.zero] * ncols for _ in range(nrows)])

    @classmethod
    def diagonal(cls, fld, entries) -> "Matrix":
        n = len(entries)
        return cls(fld, [[entries[i] if i == j else fld.zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_strings(cls, fld, rows) -> "Matrix":
        return cls(fld, [[parse_literal(s, fld) if isinstance(s, str) else fld.from_rational(s) for s in r] for r in rows])

    @classmethod
    def permutation(cls, fld, perm) -> "Matrix":
        """Matrix sending basis vector e_i to e_perm[i]."""
        n = len(perm)
        rows = [[fld.zero] * n for _ in range(n)]
        for i, j in enumerate(perm):
            rows[j][i] = fld.one
        return cls(fld, rows)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{body}]"

    def __add__(self, other):
        _same_shape(self, other)
        return Matrix(self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        _same_shape(self, other)
        return Matrix(self.field, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        return Matrix(self.field, [[a * other for a in r] for r in self.rows])

    def scale(self, c: Cyclotomic) -> "Matrix":
        return Matrix(self.field, [[a * c for a in r] for r in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows)))

    def apply(self, v) -> tuple:
        return tuple(_dot(r, v, self.field) for r in self.rows)

    def trace(self) -> Cyclotomic:
        acc = self.field.zero
        for i in range(min(self.nrows, self.ncols)):
            acc = acc + self.rows[i][i]
        return acc

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_scalar(self) -> bool:
        d = self.rows[0][0]
        return all(
            (x == d) if i == j else x.is_zero()
            for i, r in enumerate(self.rows)
            for j, x in enumerate(r)
        )

    def is_identity(self) -> bool:
        return self.is_scalar() and self.rows[0][0] == self.field.one

    def determinant(self) -> Cyclotomic:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        rows = [list(r) for r in self.rows]
        n = self.nrows
        det = self.field.one
        for c in range(n):
            p = next((r for r in range(c, n) if rows[r][c]), None)
            if p is None:
                return self.field.zero
            if p != c:
                rows[c], rows[p] = rows[p], rows[c]
                det = -det
            piv = rows[c][c]
            det = det * piv
            inv = piv.inverse()
            for r in range(c + 1, n):
                f = rows[r][c]
                if f:
                    f = f * inv
                    rows[r] = [x - f * y if y else x for x, y in zip(rows[r], rows[c])]
        return det


def _same_shape(a: Matrix, b: Matrix):
    if a.field is not b.field:
        raise ConductorMismatch("matrices over different fields")
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def _dot(r, v, fld):
    acc = fld.zero
    for a, b in zip(r, v):
        if any(a.num) and any(b.num):
            acc = acc + a * b
    return acc


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.field is not b.field:
        raise ConductorMismatch("matrices over different fields")
    if a.ncols != b.nrows:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    fld = a.field
    cols = list(zip(*b.rows))
    zero = fld.zero
    out = []
    for r in a.rows:
        nz = [(k, x) for k, x in enumerate(r) if any(x.num)]
        row = []
        for col in cols:
            acc = zero
            for k, x in nz:
                y = col[k]
                if any(y.num):
                    acc = acc + x * y
            row.append(acc)
        out.append(row)
    return Matrix(fld, out)


def rref(m: Matrix) -> tuple[list[list[Cyclotomic]], list[int]]:
    """Reduced row echelon form and pivot columns.

    Columns are scanned left to right; the pivot is the first row at or below the
    current one with a nonzero entry.
    """
    rows = [list(r) for r in m.rows]
    nr, nc = m.nrows, m.ncols
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if any(rows[i][c].num)), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv if any(x.num) else x for x in rows[r]]
        pivot_row = rows[r]
        for i in range(nr):
            if i != r:
                f = rows[i][c]
                if any(f.num):
                    rows[i] = [x - f * y if any(y.num) else x for x, y in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def _normalize_leading(v: list, fld) -> tuple:
    lead = next(x for x in v if any(x.num))
    if lead == fld.one:
        return tuple(v)
    inv = lead.inverse()
    return tuple(x * inv if any(x.num) else x for x in v)


def kernel_basis(m: Matrix) -> list[tuple]:
    """Basis of {v : m v = 0}, one vector per free column, leading coefficient 1."""
    rows, pivots = rref(m)
    fld = m.field
    pivset = set(pivots)
    basis = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = [fld.zero] * m.ncols
        v[f] = fld.one
        for r, c in enumerate(pivots):
            x = rows[r][f]
            if any(x.num):
                v[c] = -x
        basis.append(_normalize_leading(v, fld))
    return basis


def mat_inverse(m: Matrix) -> Matrix:
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = m.nrows
    fld = m.field
    ident = Matrix.identity(fld, n)
    aug = Matrix(fld, [list(r) + list(s) for r, s in zip(m.rows, ident.rows)])
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return Matrix(fld, [r[n:] for r in rows])


def span_basis(vectors: Sequence[tuple], dim: int, fld) -> list[tuple]:
    """Canonical (reduced echelon) basis for the span of ``vectors``."""
    vectors = [v for v in vectors if any(any(x.num) for x in v)]
    if not vectors:
        return []
    rows, pivots = rref(Matrix(fld, vectors))
    return [tuple(rows[i]) for i in range(len(pivots))]


def intersect_subspaces(*bases: Sequence[tuple]) -> list[tuple]:
    """Basis (reduced echelon form) of the intersection of the spanned subspaces."""
    if not bases:
        raise ValueError("need at least one subspace")
    current = list(bases[0])
    if not current:
        return []
    fld = current[0][0].field
    dim = len(current[0])
    current = span_basis(current, dim, fld)
    for other in bases[1:]:
        other = list(other)
        if not current or not other:
            return []
        k = len(current)
        cols = [list(v) for v in current] + [[-x for x in v] for v in other]
        system = Matrix(fld, list(zip(*cols)))
        sols = kernel_basis(system)
        combos = []
        for s in sols:
            vec = [fld.zero] * dim
            for coeff, b in zip(s[:k], current):
                if any(coeff.num):
                    vec = [x + coeff * y for x, y in zip(vec, b)]
            combos.append(tuple(vec))
        current = span_basis(combos, dim, fld)
    return current
