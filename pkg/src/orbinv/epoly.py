"""Two-variable polynomials in u, v with rational exponents and coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class EPolynomial:
    """Finite sum of c * u^p v^q, stored as {(p, q): c} without zero coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (p, q), c in items:
            key = (Fraction(p), Fraction(q))
            acc[key] = acc.get(key, Fraction(0)) + Fraction(c)
        self.terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def monomial(cls, p, q, c=1) -> "EPolynomial":
        return cls({(p, q): c})

    @classmethod
    def uv_power(cls, k) -> "EPolynomial":
        return cls({(k, k): 1})

    @classmethod
    def projective_space(cls, d: int) -> "EPolynomial":
        """E(P^d) = 1 + uv + ... + (uv)^d."""
        return cls({(i, i): 1 for i in range(d + 1)})

    def __add__(self, other: "EPolynomial") -> "EPolynomial":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return EPolynomial(out)

    def __mul__(self, other):
        if not isinstance(other, EPolynomial):
            return EPolynomial({k: c * Fraction(other) for k, c in self.terms.items()})
        out: dict = {}
        for (p1, q1), c1 in self.terms.items():
            for (p2, q2), c2 in other.terms.items():
                k = (p1 + p2, q1 + q2)
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return EPolynomial(out)

    __rmul__ = __mul__

    def shift(self, age) -> "EPolynomial":
        """Multiply by (uv)^age."""
        a = Fraction(age)
        return EPolynomial({(p + a, q + a): c for (p, q), c in self.terms.items()})

    def evaluate(self, u=1, v=1) -> Fraction:
        """Value at rational u, v; rational exponents need u = v = 1 or perfect powers."""
        total = Fraction(0)
        for (p, q), c in self.terms.items():
            total += c * _rpow(Fraction(u), p) * _rpow(Fraction(v), q)
        return total

    def dual(self, dim) -> "EPolynomial":
        """(uv)^dim * E(1/u, 1/v)."""
        d = Fraction(dim)
        return EPolynomial({(d - p, d - q): c for (p, q), c in self.terms.items()})

    def sorted_terms(self) -> list[tuple]:
        return sorted((p, q, c) for (p, q), c in self.terms.items())

    def __eq__(self, other):
        return isinstance(other, EPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"EPolynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for p, q, c in self.sorted_terms():
            if p == q:
                mono = "" if p == 0 else ("uv" if p == 1 else f"(uv)^{p}")
            else:
                mono = "*".join(x for x in (_pw("u", p), _pw("v", q)) if x)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def _pw(var, e):
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def _rpow(x: Fraction, e: Fraction) -> Fraction:
    if e.denominator == 1:
        return x ** int(e)
    if x == 1:
        return Fraction(1)
    # exact rational roots only
    num = _iroot(x.numerator, e.denominator)
    den = _iroot(x.denominator, e.denominator)
    if num is None or den is None:
        raise ValueError(f"{x}^{e} is not rational")
    return Fraction(num, den) ** e.numerator


def _iroot(n: int, k: int):
    if n < 0:
        if k % 2 == 0:
            return None
        r = _iroot(-n, k)
        return None if r is None else -r
    r = round(n ** (1.0 / k))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**k == n:
            return c
    return None
