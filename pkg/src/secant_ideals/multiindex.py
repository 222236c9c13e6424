"""Exponent vectors, weight-constrained monomial enumeration, and symmetric-group orbits.

A multi-index is a plain tuple of nonnegative ints of length n+1.  It serves
both as an exponent vector alpha of an ambient coordinate s_alpha (|alpha| = d)
and as a weight beta of a monomial in the s-variables.  A monomial in the
s-variables ("SMonomial") is a tuple of (alpha, multiplicity) pairs with
distinct alphas in canonical order.

Canonical order on fixed-degree multi-indices is graded reverse lexicographic,
descending; for equal total degree this is ascending lexicographic order of the
reversed tuple.  All enumeration functions return results in canonical order so
matrix layouts are reproducible.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial
from collections import Counter
from typing import Iterable, Iterator

MultiIndex = tuple
Permutation = tuple
SMonomial = tuple


def grevlex_key(alpha: MultiIndex):
    """Sort key realizing grevlex-descending order for equal-degree indices."""
    return tuple(reversed(alpha))


@lru_cache(maxsize=None)
def exponents(n: int, d: int) -> tuple:
    """All alpha in Z_{>=0}^{n+1} with |alpha| = d, in canonical order.

    The count is C(n+d, d).
    """
    if n < 0 or d < 0:
        raise ValueError(f"need n >= 0 and d >= 0, got n={n}, d={d}")
    out = []

    def rec(prefix, rem, slots):
        if slots == 1:
            out.append(prefix + (rem,))
            return
        for v in range(rem, -1, -1):
            rec(prefix + (v,), rem - v, slots - 1)

    rec((), d, n + 1)
    out.sort(key=grevlex_key)
    assert len(out) == comb(n + d, d)
    return tuple(out)


def total(alpha: MultiIndex) -> int:
    return sum(alpha)


def contains(delta: MultiIndex, beta: MultiIndex) -> bool:
    """True iff delta <= beta componentwise (the partial order on weights)."""
    if len(delta) != len(beta):
        raise ValueError(f"length mismatch: {len(delta)} vs {len(beta)}")
    return all(d <= b for d, b in zip(delta, beta))


def sub_weights(beta: MultiIndex, target: int) -> list:
    """All delta with delta <= beta componentwise and |delta| = target, canonical order."""
    out = []

    def rec(prefix, rem, pos):
        if pos == len(beta):
            if rem == 0:
                out.append(tuple(prefix))
            return
        tail_cap = sum(beta[pos:])
        if rem > tail_cap:
            return
        for v in range(min(beta[pos], rem), -1, -1):
            prefix.append(v)
            rec(prefix, rem - v, pos + 1)
            prefix.pop()

    rec([], target, 0)
    out.sort(key=grevlex_key)
    return out


# ---------------------------------------------------------------------------
# SMonomial construction and arithmetic


def monomial(factors: Iterable) -> SMonomial:
    """Canonicalize an iterable of (alpha, mult) pairs into an SMonomial."""
    acc = {}
    for alpha, mult in factors:
        if mult:
            acc[alpha] = acc.get(alpha, 0) + mult
    return tuple(sorted(acc.items(), key=lambda t: grevlex_key(t[0])))


def monomial_degree(m: SMonomial) -> int:
    return sum(mult for _, mult in m)


def monomial_weight(m: SMonomial) -> MultiIndex:
    """Componentwise sum of the factors' exponent vectors, with multiplicity."""
    if not m:
        return ()
    acc = [0] * len(m[0][0])
    for alpha, mult in m:
        for i, a in enumerate(alpha):
            acc[i] += mult * a
    return tuple(acc)


def monomial_mul(m1: SMonomial, m2: SMonomial) -> SMonomial:
    return monomial(list(m1) + list(m2))


def monomial_div(m: SMonomial, q: SMonomial):
    """m / q as an SMonomial, or None when q does not divide m."""
    acc = dict(m)
    for alpha, mult in q:
        have = acc.get(alpha, 0)
        if have < mult:
            return None
        if have == mult:
            del acc[alpha]
        else:
            acc[alpha] = have - mult
    return tuple(sorted(acc.items(), key=lambda t: grevlex_key(t[0])))


def monomial_key(m: SMonomial):
    """Total-order key for monomials of one weight space (deterministic layout)."""
    return tuple(grevlex_key(alpha) for alpha, mult in m for _ in range(mult))


def factor_pairs(m: SMonomial) -> Iterator:
    """Distinct degree-2 sub-monomials q of m, as SMonomials.

    q = alpha^2 requires multiplicity >= 2; q = alpha*gamma takes two distinct
    factors.  Every division m/q is valid by construction.
    """
    k = len(m)
    for i in range(k):
        alpha, mult = m[i]
        if mult >= 2:
            yield ((alpha, 2),)
        for j in range(i + 1, k):
            gamma, _ = m[j]
            yield ((alpha, 1), (gamma, 1))


def monomials_of_weight(beta: MultiIndex, d: int, e: int) -> list:
    """All degree-e monomials in the s-variables of weight beta, canonical order.

    Each result is a multiset {(alpha_p, i_p)} with sum i_p = e, |alpha_p| = d
    and sum i_p*alpha_p = beta.  Requires |beta| = d*e.
    """
    if total(beta) != d * e:
        raise ValueError(f"|beta| = {total(beta)} != d*e = {d * e}")
    n = len(beta) - 1
    alphas = exponents(n, d)
    na = len(alphas)
    # residual-weight pruning: suffix maxima per coordinate
    sufmax = [(0,) * (n + 1)] * (na + 1)
    run = [0] * (n + 1)
    for i in range(na - 1, -1, -1):
        run = [max(run[j], alphas[i][j]) for j in range(n + 1)]
        sufmax[i] = tuple(run)
    res = []
    acc = []

    def rec(i, rem_e, residual):
        if rem_e == 0:
            if not any(residual):
                res.append(tuple(acc))
            return
        if i == na:
            return
        sm = sufmax[i]
        for j in range(n + 1):
            if residual[j] > rem_e * sm[j]:
                return
        alpha = alphas[i]
        mx = rem_e
        for j in range(n + 1):
            if alpha[j]:
                q = residual[j] // alpha[j]
                if q < mx:
                    mx = q
        for mult in range(mx, 0, -1):
            acc.append((alpha, mult))
            rec(i + 1, rem_e - mult, tuple(residual[j] - mult * alpha[j] for j in range(n + 1)))
            acc.pop()
        rec(i + 1, rem_e, residual)

    rec(0, e, tuple(beta))
    res.sort(key=monomial_key)
    return res


def count_monomials_of_weight(beta: MultiIndex, d: int, e: int) -> int:
    """len(monomials_of_weight(beta, d, e)) without materializing the list."""
    if total(beta) != d * e:
        raise ValueError(f"|beta| = {total(beta)} != d*e = {d * e}")
    import numpy as np

    n = len(beta) - 1
    shape = (e + 1,) + tuple(b + 1 for b in beta)
    table = np.zeros(shape, dtype=np.int64)
    table[(0,) + (0,) * (n + 1)] = 1
    for alpha in exponents(n, d):
        if not contains(alpha, beta):
            continue
        for j in range(1, e + 1):
            dst = (j,) + tuple(slice(alpha[i], beta[i] + 1) for i in range(n + 1))
            src = (j - 1,) + tuple(slice(0, beta[i] + 1 - alpha[i]) for i in range(n + 1))
            table[dst] += table[src]
    return int(table[(e,) + tuple(beta)])


# ---------------------------------------------------------------------------
# Permutations of the n+1 coordinate slots


def identity_perm(n: int) -> Permutation:
    return tuple(range(n + 1))


def transposition(n: int, i: int, j: int) -> Permutation:
    img = list(range(n + 1))
    img[i], img[j] = img[j], img[i]
    return tuple(img)


def all_perms(n: int) -> list:
    from itertools import permutations

    return [tuple(p) for p in permutations(range(n + 1))]


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """Composition such that apply_perm(compose(sigma, tau), x) = apply_perm(sigma, apply_perm(tau, x))."""
    return tuple(tau[sigma[i]] for i in range(len(sigma)))


def inverse(tau: Permutation) -> Permutation:
    inv = [0] * len(tau)
    for i, t in enumerate(tau):
        inv[t] = i
    return tuple(inv)


def apply_perm(tau: Permutation, x):
    """Permuted entries: (tau x)_i = x_{tau(i)} on multi-indices; factorwise on monomials."""
    if not x:
        return x
    if isinstance(x[0], int):
        if len(tau) != len(x):
            raise ValueError("permutation/index length mismatch")
        return tuple(x[t] for t in tau)
    return monomial(((tuple(alpha[t] for t in tau), mult) for alpha, mult in x))


def perm_sign(tau: Permutation) -> int:
    seen = [False] * len(tau)
    sign = 1
    for i in range(len(tau)):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = tau[j]
            ln += 1
        if ln % 2 == 0:
            sign = -sign
    return sign


def orbit_size(beta: MultiIndex) -> int:
    """Size of the S_{n+1}-orbit of beta: (n+1)!/prod over repeated values."""
    sz = factorial(len(beta))
    for c in Counter(beta).values():
        sz //= factorial(c)
    return sz


def orbit_rep(beta: MultiIndex) -> MultiIndex:
    """Weakly decreasing representative of the orbit of beta."""
    return tuple(sorted(beta, reverse=True))


def orbit_reps(n: int, total_weight: int) -> list:
    """One weakly decreasing representative per orbit of weights with |beta| = total.

    Returns (rep, orbit_size) pairs; reps sorted by canonical order.
    """
    if total_weight < 0:
        raise ValueError("total must be >= 0")
    reps = []

    def rec(prefix, rem, slots, cap):
        if slots == 1:
            if rem <= cap:
                reps.append(prefix + (rem,))
            return
        lo = -(-rem // slots)  # ceil: keep weakly decreasing feasible
        for v in range(min(rem, cap), lo - 1, -1):
            rec(prefix + (v,), rem - v, slots - 1, v)

    rec((), total_weight, n + 1, total_weight)
    reps.sort(key=grevlex_key)
    return [(r, orbit_size(r)) for r in reps]


def weight_orbit(beta: MultiIndex) -> list:
    """All distinct permutations of beta, canonical order."""
    from itertools import permutations

    return sorted(set(permutations(beta)), key=grevlex_key)


# ---------------------------------------------------------------------------
# Text forms


def format_multiindex(alpha: MultiIndex) -> str:
    return ",".join(str(a) for a in alpha)


def parse_multiindex(text: str) -> MultiIndex:
    try:
        entries = tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad multi-index text {text!r}") from exc
    if any(a < 0 for a in entries):
        raise ValueError(f"negative entry in multi-index {text!r}")
    return entries


def format_smonomial(m: SMonomial) -> str:
    """Paper-style subscript text, e.g. 's_0012*s_0003' or 's_310^2'."""
    if not m:
        return "1"
    parts = []
    for alpha, mult in m:
        sub = "".join(str(a) for a in alpha)
        parts.append(f"s_{sub}" + (f"^{mult}" if mult > 1 else ""))
    return "*".join(parts)


def parse_smonomial(text: str, n: int) -> SMonomial:
    text = text.strip()
    if text in ("1", ""):
        return ()
    factors = []
    for tok in text.split("*"):
        tok = tok.strip()
        if "^" in tok:
            base, pw = tok.split("^")
            mult = int(pw)
        else:
            base, mult = tok, 1
        if not base.startswith("s_"):
            raise ValueError(f"bad monomial token {tok!r}")
        digits = base[2:]
        if len(digits) != n + 1:
            raise ValueError(f"token {tok!r} has {len(digits)} digits, expected {n + 1}")
        factors.append((tuple(int(c) for c in digits), mult))
    return monomial(factors)
