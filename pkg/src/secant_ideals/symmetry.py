"""Averaging operators and invariant/anti-invariant splittings of weight spaces.

For a weight beta with repeated entries, each transposition tau fixing beta
splits L_beta into the +1 and -1 eigenspaces of the coordinate swap; up to
three pairwise disjoint transpositions give up to eight sign components whose
kernels sum to kappa_beta.  Bases are signed orbit sums of monomials: a
monomial fixed by tau contributes only to the + part.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Optional

from .multiindex import (
    MultiIndex,
    SMonomial,
    apply_perm,
    compose,
    factor_pairs,
    identity_perm,
    monomial_div,
    monomial_key,
    monomial_weight,
    monomials_of_weight,
    total,
    transposition,
)
from .polyring import SPolynomial, factorial_product, pair_v
from . import linalg


@dataclass(frozen=True)
class SplitSpec:
    """Pairwise disjoint transpositions fixing beta, with a sign per transposition."""

    transpositions: tuple  # ((i, j), ...)
    signs: tuple  # (+1 | -1, ...)

    def __post_init__(self):
        seen = set()
        for i, j in self.transpositions:
            if i == j:
                raise ValueError("transposition must move two distinct slots")
            if i in seen or j in seen:
                raise ValueError("transpositions must be pairwise disjoint")
            seen.update((i, j))
        if len(self.signs) != len(self.transpositions):
            raise ValueError("one sign per transposition required")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    def validate_for(self, beta: MultiIndex):
        for i, j in self.transpositions:
            if i >= len(beta) or j >= len(beta):
                raise ValueError(f"transposition ({i}{j}) out of range for beta")
            if beta[i] != beta[j]:
                raise ValueError(f"transposition ({i}{j}) does not fix beta = {beta}")

    def pattern(self) -> str:
        return "".join("+" if s == 1 else "-" for s in self.signs)

    def text(self) -> str:
        return ",".join(
            f"({i}{j}){'+' if s == 1 else '-'}"
            for (i, j), s in zip(self.transpositions, self.signs)
        )


def parse_split_spec(text: str) -> SplitSpec:
    """Parse e.g. '(01)-,(23)+' into a SplitSpec."""
    trans = []
    signs = []
    for tok in text.split(","):
        tok = tok.strip()
        if not (tok.startswith("(") and len(tok) >= 4 and tok[-1] in "+-" and tok[-2] == ")"):
            raise ValueError(f"bad split token {tok!r}; expected like '(01)-'")
        body = tok[1:-2]
        if len(body) != 2 or not body.isdigit():
            raise ValueError(f"bad transposition in {tok!r}")
        trans.append((int(body[0]), int(body[1])))
        signs.append(1 if tok[-1] == "+" else -1)
    return SplitSpec(tuple(trans), tuple(signs))


def natural_transpositions(beta: MultiIndex) -> list:
    """Greedy list of pairwise disjoint transpositions (i, j) with beta_i = beta_j."""
    used = set()
    out = []
    for i in range(len(beta)):
        if i in used:
            continue
        for j in range(i + 1, len(beta)):
            if j not in used and beta[j] == beta[i]:
                out.append((i, j))
                used.update((i, j))
                break
    return out


def average(group: list, f: SPolynomial) -> SPolynomial:
    """lambda_A(f) = (1/#A) sum of phi(f) over the permutation group A."""
    if not group:
        raise ValueError("group must be nonempty")
    acc = SPolynomial.zero(f.n, f.d)
    for tau in group:
        acc = acc + f.apply_perm(tau)
    return acc.scale(Fraction(1, len(group)))


def group_elements(spec: SplitSpec, n: int) -> list:
    """(mask, permutation, character) for every product of the spec's transpositions.

    mask bit t set means transposition t participates; the character is the
    product of the chosen signs over participating transpositions.
    """
    perms = [transposition(n, i, j) for i, j in spec.transpositions]
    out = []
    for mask in range(1 << len(perms)):
        g = identity_perm(n)
        chi = 1
        for t, (p, s) in enumerate(zip(perms, spec.signs)):
            if mask >> t & 1:
                g = compose(g, p)
                chi *= s
        out.append((mask, g, chi))
    return out


def _signed_orbit(m: SMonomial, elements) -> Optional[list]:
    """[(monomial, sign)] for the vector sum of chi(g) * g(m), or None when it vanishes.

    Collapses repeated images; vanishes exactly when the character is
    nontrivial on the stabilizer of m.
    """
    acc = {}
    for _, g, chi in elements:
        gm = apply_perm(g, m)
        acc[gm] = acc.get(gm, 0) + chi
    if any(v == 0 for v in acc.values()):
        return None
    scale = abs(next(iter(acc.values())))
    return sorted(((mm, v // scale) for mm, v in acc.items()), key=lambda t: monomial_key(t[0]))


def split_basis(beta: MultiIndex, d: int, e: int, spec: SplitSpec) -> list:
    """Basis of the sign component L_beta[+-tau, ...] as polynomials.

    Built from orbit representatives of monomials; representatives are the
    canonically smallest members and monomials fixed by a transposition appear
    only in components with sign + for it.
    """
    spec.validate_for(beta)
    elements = group_elements(spec, len(beta) - 1)
    seen = set()
    basis = []
    for m in monomials_of_weight(beta, d, e):
        if m in seen:
            continue
        orbit = {apply_perm(g, m) for _, g, _ in elements}
        seen.update(orbit)
        rep = min(orbit, key=monomial_key)
        vec = _signed_orbit(rep, elements)
        if vec is not None:
            basis.append(SPolynomial({mm: Fraction(s) for mm, s in vec}))
    return basis


def _component_matrix(beta, k, d, n, spec):
    """Integer relation matrix restricted to one sign component.

    Columns are signed orbit classes in c(f; .) coordinates; rows are orbit
    representatives of the relation monomials (rows related by the group act by
    the character, so one representative per orbit carries the constraint).
    """
    elements = group_elements(spec, n)
    columns = []  # list of signed orbits [(monomial, sign)]
    col_of = {}  # member monomial -> (column index, sign)
    seen = set()
    for m in monomials_of_weight(beta, d, k + 1):
        if m in seen:
            continue
        orbit = {apply_perm(g, m) for _, g, _ in elements}
        seen.update(orbit)
        rep = min(orbit, key=monomial_key)
        vec = _signed_orbit(rep, elements)
        if vec is None:
            continue
        ci = len(columns)
        columns.append(vec)
        for mm, s in vec:
            col_of[mm] = (ci, s)
    rows = {}
    for vec in columns:
        for h, _ in vec:
            for q in factor_pairs(h):
                m = monomial_div(h, q)
                rep = min((apply_perm(g, m) for _, g, _ in elements), key=monomial_key)
                if rep in rows:
                    continue
                rows[rep] = None
    built = []
    for m in rows:
        # full support of the relation of m: columns m*q with q in M(L_eps)
        wm = monomial_weight(m) if m else (0,) * (n + 1)
        eps = tuple(b - w for b, w in zip(beta, wm))
        entries = {}
        for q in monomials_of_weight(eps, d, 2):
            hq = _monomial_mul(m, q)
            hit = col_of.get(hq)
            if hit is None:
                continue
            ci, s = hit
            v = Fraction(s, pair_v(q))
            entries[ci] = entries.get(ci, 0) + v
        row = {}
        scale = 1
        for v in entries.values():
            if v and v.denominator == 2:
                scale = 2
                break
        for ci, v in entries.items():
            iv = int(v * scale)
            if iv:
                row[ci] = iv
        if row:
            built.append(row)
    return built, len(columns), columns


def _monomial_mul(m, q):
    from .multiindex import monomial_mul

    return monomial_mul(m, q)


def split_kappa(
    beta: MultiIndex,
    k: int,
    d: int,
    n: int,
    transpositions=None,
    cache_dir=None,
) -> dict:
    """kappa of every sign component; keys are patterns like '+-', values counts.

    The components refine K_beta: the values sum to kappa_beta.
    """
    if total(beta) != d * (k + 1):
        raise ValueError(f"|beta| = {total(beta)} != d(k+1) = {d * (k + 1)}")
    if transpositions is None:
        transpositions = natural_transpositions(beta)
        if not transpositions:
            raise ValueError(f"beta = {beta} has no repeated entry to split on")
    out = {}
    for signs in iproduct((1, -1), repeat=len(transpositions)):
        spec = SplitSpec(tuple(transpositions), signs)
        spec.validate_for(beta)
        out[spec.pattern()] = component_kappa(beta, k, d, n, spec)
    return out


def component_kappa(beta: MultiIndex, k: int, d: int, n: int, spec: SplitSpec) -> int:
    """Exact kernel dimension of Psi restricted to one sign component of L_beta."""
    spec.validate_for(beta)
    from .multiindex import count_monomials_of_weight
    from .prolong import DIRECT_LIMIT

    ncols = count_monomials_of_weight(beta, d, k + 1)
    if ncols == 0:
        return 0
    if ncols > DIRECT_LIMIT:
        from . import bigweight

        return bigweight.component_kappa_large(beta, k, d, n, spec)
    rows, ncomp, _ = _component_matrix(beta, k, d, n, spec)
    rank = linalg.sparse_rank(rows)
    return ncomp - rank
