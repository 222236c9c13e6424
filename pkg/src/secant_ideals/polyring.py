"""Sparse exact polynomials in the ambient coordinates {s_alpha}.

SPolynomial stores plain monomial coefficients a_m (f = sum a_m * m) as exact
Fractions.  The normalized coefficients c(f; m) relative to the basis vectors
(1/prod i_p!) * m are produced at interfaces via c(f; m) = a_m * prod i_p!.

TPolynomial lives downstairs in C[t_0..t_n]; it is the image of the pullback
s_alpha -> t^alpha.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping

from .multiindex import (
    SMonomial,
    MultiIndex,
    apply_perm,
    contains,
    exponents,
    factor_pairs,
    format_smonomial,
    grevlex_key,
    monomial,
    monomial_degree,
    monomial_div,
    monomial_key,
    monomial_mul,
    monomial_weight,
)


def factorial_product(m: SMonomial) -> int:
    """prod of mult! over the factors of m (the basis normalization v!(m))."""
    out = 1
    for _, mult in m:
        out *= factorial(mult)
    return out


def pair_v(q: SMonomial) -> int:
    """v(q) of the coefficient relations: 2 for a square s_alpha^2, else 1."""
    return 2 if len(q) == 1 and q[0][1] == 2 else 1


class SPolynomial:
    """Sparse polynomial in the s-variables with exact rational coefficients."""

    __slots__ = ("terms", "n", "d")

    def __init__(self, terms=None, n=None, d=None):
        self.terms = {}
        if terms:
            for m, c in (terms.items() if isinstance(terms, Mapping) else terms):
                if c:
                    c = c if isinstance(c, Fraction) else Fraction(c)
                    acc = self.terms.get(m)
                    new = c if acc is None else acc + c
                    if new:
                        self.terms[m] = new
                    elif acc is not None:
                        del self.terms[m]
        self.n = n
        self.d = d

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n=None, d=None):
        return cls({}, n, d)

    @classmethod
    def from_monomial(cls, m: SMonomial, coeff=1, n=None, d=None):
        return cls({m: Fraction(coeff)}, n, d)

    @classmethod
    def variable(cls, alpha: MultiIndex, n=None, d=None):
        return cls({((alpha, 1),): Fraction(1)}, n, d)

    # -- ring structure -----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, SPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            new = out.get(m, 0) + c
            if new:
                out[m] = new
            elif m in out:
                del out[m]
        return SPolynomial(out, self.n or other.n, self.d or other.d)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SPolynomial({m: -c for m, c in self.terms.items()}, self.n, self.d)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return SPolynomial.zero(self.n, self.d)
        return SPolynomial({m: coeff * c for m, coeff in self.terms.items()}, self.n, self.d)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                new = out.get(m, 0) + c1 * c2
                if new:
                    out[m] = new
                elif m in out:
                    del out[m]
        return SPolynomial(out, self.n or other.n, self.d or other.d)

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        if exp < 0:
            raise ValueError("negative power of a polynomial")
        out = SPolynomial({(): Fraction(1)}, self.n, self.d)
        for _ in range(exp):
            out = out * self
        return out

    # -- inspection ----------------------------------------------------------

    def degree(self):
        return max((monomial_degree(m) for m in self.terms), default=None)

    def is_homogeneous(self) -> bool:
        degs = {monomial_degree(m) for m in self.terms}
        return len(degs) <= 1

    def weight(self):
        """Common weight of all monomials, or None if mixed/zero."""
        ws = {monomial_weight(m) for m in self.terms}
        return ws.pop() if len(ws) == 1 else None

    def coefficient(self, m: SMonomial) -> Fraction:
        """Plain coefficient a_m."""
        return self.terms.get(m, Fraction(0))

    def c(self, m: SMonomial) -> Fraction:
        """Normalized coefficient c(f; m) = a_m * prod i_p!."""
        return self.terms.get(m, Fraction(0)) * factorial_product(m)

    def variables(self) -> set:
        return {alpha for m in self.terms for alpha, _ in m}

    def support(self) -> list:
        return sorted(self.terms, key=monomial_key)

    # -- operations ----------------------------------------------------------

    def apply_perm(self, tau):
        return SPolynomial(
            {apply_perm(tau, m): c for m, c in self.terms.items()}, self.n, self.d
        )

    def partial_derivative(self, m: SMonomial):
        """Iterated formal partial derivative by every factor of m."""
        cur = self
        for alpha, mult in m:
            for _ in range(mult):
                nxt = {}
                for mm, c in cur.terms.items():
                    dd = dict(mm)
                    e = dd.get(alpha, 0)
                    if not e:
                        continue
                    if e == 1:
                        del dd[alpha]
                    else:
                        dd[alpha] = e - 1
                    key = tuple(sorted(dd.items(), key=lambda t: grevlex_key(t[0])))
                    new = nxt.get(key, 0) + c * e
                    if new:
                        nxt[key] = new
                    elif key in nxt:
                        del nxt[key]
                cur = SPolynomial(nxt, self.n, self.d)
        return cur

    def veronese_pullback(self) -> "TPolynomial":
        """Substitute s_alpha -> t^alpha and expand."""
        out = {}
        for m, c in self.terms.items():
            w = monomial_weight(m)
            new = out.get(w, 0) + c
            if new:
                out[w] = new
            elif w in out:
                del out[w]
        return TPolynomial(out)

    def evaluate(self, point: Mapping) -> Fraction:
        """Exact value at a point assigning rationals to every s_alpha in the support."""
        acc = Fraction(0)
        for m, c in self.terms.items():
            val = c
            for alpha, mult in m:
                if alpha not in point:
                    raise KeyError(f"point missing value for s_{''.join(map(str, alpha))}")
                val *= Fraction(point[alpha]) ** mult
            acc += val
        return acc

    # -- interchange ----------------------------------------------------------

    def to_records(self) -> list:
        """[[numerator, denominator, [[alpha, mult], ...]], ...] in canonical order."""
        return [
            [c.numerator, c.denominator, [[list(alpha), mult] for alpha, mult in m]]
            for m, c in sorted(self.terms.items(), key=lambda t: monomial_key(t[0]))
        ]

    @classmethod
    def from_records(cls, records, n=None, d=None):
        terms = {}
        for num, den, factors in records:
            m = monomial((tuple(alpha), mult) for alpha, mult in factors)
            terms[m] = Fraction(num, den)
        return cls(terms, n, d)

    def text(self) -> str:
        """Paper-style rendering, e.g. '-2 s_2100*s_1110 + ...'."""
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda t: monomial_key(t[0])):
            mono = format_smonomial(m)
            if c == 1:
                parts.append(f"+ {mono}")
            elif c == -1:
                parts.append(f"- {mono}")
            elif c > 0:
                parts.append(f"+ {c} {mono}")
            else:
                parts.append(f"- {-c} {mono}")
        joined = " ".join(parts)
        return joined[2:] if joined.startswith("+ ") else "-" + joined[2:]

    def __repr__(self):
        k = len(self.terms)
        return f"SPolynomial({k} term{'s' if k != 1 else ''})"


class TPolynomial:
    """Sparse polynomial in t_0..t_n with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in (terms.items() if isinstance(terms, Mapping) else terms):
                if c:
                    self.terms[w] = Fraction(c)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, TPolynomial) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            new = out.get(w, 0) + c
            if new:
                out[w] = new
            elif w in out:
                del out[w]
        return TPolynomial(out)

    def __mul__(self, other):
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = tuple(a + b for a, b in zip(w1, w2))
                new = out.get(w, 0) + c1 * c2
                if new:
                    out[w] = new
                elif w in out:
                    del out[w]
        return TPolynomial(out)

    def __repr__(self):
        return f"TPolynomial({len(self.terms)} terms)"


# ---------------------------------------------------------------------------
# Prolongation components


def weight_of(m: SMonomial) -> MultiIndex:
    """Weight sum i_p * alpha_p of a monomial (zero-length tuple for degree 0)."""
    return monomial_weight(m)


def psi_component(f: SPolynomial, m: SMonomial, k: int) -> TPolynomial:
    """v_d^* of the (k-1)-fold partial derivative of f by the monomial m."""
    if monomial_degree(m) != k - 1:
        raise ValueError(f"deg(m) = {monomial_degree(m)} != k-1 = {k - 1}")
    if f.degree() not in (None, k + 1):
        raise ValueError(f"deg(f) = {f.degree()} != k+1 = {k + 1}")
    return f.partial_derivative(m).veronese_pullback()


def psi_is_zero(f: SPolynomial, k: int) -> bool:
    """True iff every component Psi_m(f) vanishes, i.e. f lies in the degree-(k+1) secant ideal piece.

    Components with m not dividing any monomial of f are identically zero, so it
    suffices to aggregate, for each division h = m*q of a support monomial into
    a degree-(k-1) monomial m and a degree-2 monomial q, the contribution
    c(f; h)/v(q) to the bucket of (m, weight(q)); f is in the kernel iff every
    bucket sums to zero.
    """
    if f.is_zero():
        return True
    if f.degree() != k + 1:
        raise ValueError(f"deg(f) = {f.degree()} != k+1 = {k + 1}")
    buckets = {}
    for h, a in f.terms.items():
        ch = a * factorial_product(h)
        for q in factor_pairs(h):
            m = monomial_div(h, q)
            key = (m, monomial_weight(q))
            new = buckets.get(key, 0) + ch / pair_v(q)
            if new:
                buckets[key] = new
            elif key in buckets:
                del buckets[key]
    return not buckets


# ---------------------------------------------------------------------------
# Sample points and flattenings


def _mix_seed(k: int, d: int, n: int, seed: int) -> int:
    return ((seed * 1000003 + k) * 1009 + d) * 101 + n


def secant_sample(k: int, d: int, n: int, seed: int = 0) -> dict:
    """Exact point of the cone over sigma_k: s_alpha = sum_i lambda_i t_(i)^alpha.

    The t-tuples have entries uniform in [-9, 9] (never the zero tuple) and the
    weights lambda_i lie in [1, 9]; everything is deterministic in (k, d, n, seed).
    """
    if k < 1:
        raise ValueError("need k >= 1")
    rng = random.Random(_mix_seed(k, d, n, seed))
    pts = []
    for _ in range(k):
        while True:
            t = tuple(rng.randint(-9, 9) for _ in range(n + 1))
            if any(t):
                break
        lam = rng.randint(1, 9)
        pts.append((lam, t))
    point = {}
    for alpha in exponents(n, d):
        val = 0
        for lam, t in pts:
            term = lam
            for tv, av in zip(t, alpha):
                term *= tv**av
            val += term
        point[alpha] = Fraction(val)
    return point


def veronese_point(t: tuple, d: int) -> dict:
    """s_alpha = t^alpha for an explicit parameter tuple."""
    n = len(t) - 1
    point = {}
    for alpha in exponents(n, d):
        val = Fraction(1)
        for tv, av in zip(t, alpha):
            val *= Fraction(tv) ** av
        point[alpha] = val
    return point


def symmetric_flattening(a: int, b: int, n: int, point: Mapping | None = None):
    """The catalecticant matrix phi_{a,b} with (alpha, gamma) entry s_{alpha+gamma}.

    Rows are indexed by exponents(n, a), columns by exponents(n, b); requires
    a + b = d implicitly via the point/symbolic entries of degree a + b.
    Returns rows of Fractions when a point is given, else single-term
    SPolynomials.
    """
    if a < 0 or b < 0:
        raise ValueError("need a, b >= 0")
    rows = exponents(n, a)
    cols = exponents(n, b)
    out = []
    for alpha in rows:
        row = []
        for gamma in cols:
            s = tuple(x + y for x, y in zip(alpha, gamma))
            if point is None:
                row.append(SPolynomial.variable(s, n=n, d=a + b))
            else:
                row.append(Fraction(point[s]))
        out.append(row)
    return out
