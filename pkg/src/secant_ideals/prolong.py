"""Per-weight relation matrices, exact kernels, and graded-piece dimensions.

The relation matrix of a weight beta encodes, for every monomial m of degree
k-1 with weight(m) contained in beta, the linear condition

    sum over q in M(L_eps) of  c(f; m*q) / v(q)  =  0,   eps = beta - weight(m),

on the normalized coefficients c(f; .) of f in L_beta.  The matrix is built
column-first: every column monomial h contributes the entry 1/v(q) to the row
of m = h/q for each of its distinct degree-2 sub-monomials q.

Kernels are computed exactly.  Small weight spaces go through the direct
sparse eliminator; large ones are dispatched to the vectorized engine in
``bigweight`` (same mathematics, array plumbing), optionally decomposed into
sign components under disjoint transpositions fixing beta.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from .multiindex import (
    MultiIndex,
    SMonomial,
    contains,
    count_monomials_of_weight,
    factor_pairs,
    identity_perm,
    monomial_div,
    monomial_key,
    monomial_weight,
    monomials_of_weight,
    orbit_rep,
    orbit_reps,
    total,
)
from .polyring import SPolynomial, factorial_product, pair_v, secant_sample
from . import linalg

# Columns above this go through the vectorized engine.
DIRECT_LIMIT = 30000
# Above this, weights with repeated entries are decomposed into sign components.
SPLIT_LIMIT = 120000

CACHE_ENV = "SECANT_IDEALS_CACHE"


@dataclass
class SparseRationalMatrix:
    """Sparse exact-rational matrix with row/column index maps.

    rows[i] is a list of (column index, Fraction) pairs; columns[j] is the
    SMonomial labeling column j; row_labels[i] = (eps, m) identifies the
    relation generating row i.
    """

    rows: list
    columns: list
    row_labels: list

    @property
    def ncols(self) -> int:
        return len(self.columns)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def integer_rows(self) -> list:
        """Rows scaled to integers (each relation scaled by 2 when it has a half)."""
        out = []
        for row in self.rows:
            scale = 2 if any(v.denominator == 2 for _, v in row) else 1
            out.append({c: int(v * scale) for c, v in row})
        return out


@dataclass
class KernelReport:
    beta: MultiIndex
    dim_L: int
    kappa: int
    basis: Optional[list] = None
    method: str = "relation-matrix"
    wall_time: float = 0.0
    orbit_size: int = 1
    pruned: bool = False

    def contribution(self) -> int:
        return self.kappa * self.orbit_size


@dataclass
class GradedPiece:
    k: int
    d: int
    n: int
    reports: list
    total: int
    prune_bound: Optional[int] = None


def relation_matrix(beta: MultiIndex, k: int, d: int, n: int) -> SparseRationalMatrix:
    """The coefficient-relation matrix of L_beta for the k-th secant of v_d(P^n)."""
    _check_weight(beta, k, d, n)
    columns = monomials_of_weight(beta, d, k + 1)
    row_index = {}
    rows = []
    row_labels = []
    for ci, h in enumerate(columns):
        for q in factor_pairs(h):
            m = monomial_div(h, q)
            ri = row_index.get(m)
            if ri is None:
                ri = row_index[m] = len(rows)
                rows.append([])
                wm = monomial_weight(m) if m else (0,) * (n + 1)
                eps = tuple(b - w for b, w in zip(beta, wm))
                row_labels.append((eps, m))
            rows[ri].append((ci, Fraction(1, pair_v(q))))
    return SparseRationalMatrix(rows=rows, columns=columns, row_labels=row_labels)


def kernel_basis(matrix: SparseRationalMatrix) -> list:
    """Exact basis of the right null space, as vectors of Fractions per column.

    Vectors are normalized so the first nonzero coordinate in canonical column
    order equals 1, and are returned in a deterministic order.
    """
    rows = matrix.integer_rows()
    _, basis = linalg.sparse_kernel(rows, matrix.ncols)
    out = []
    for vec in basis:
        dense = [Fraction(0)] * matrix.ncols
        for c, v in vec.items():
            dense[c] = v
        out.append(dense)
    return out


def _check_weight(beta, k, d, n):
    if len(beta) != n + 1:
        raise ValueError(f"beta has {len(beta)} entries, expected n+1 = {n + 1}")
    if any(b < 0 for b in beta):
        raise ValueError("beta must be componentwise nonnegative")
    if total(beta) != d * (k + 1):
        raise ValueError(f"|beta| = {total(beta)} != d(k+1) = {d * (k + 1)}")


def _basis_to_polynomials(vectors, columns, n, d) -> list:
    """Column vectors of c(f; .) coefficients back to plain-coefficient polynomials."""
    polys = []
    for vec in vectors:
        terms = {}
        for j, c in enumerate(vec):
            if c:
                m = columns[j]
                terms[m] = c / factorial_product(m)
        polys.append(SPolynomial(terms, n=n, d=d))
    return polys


def _sorting_perm(rep, beta):
    """Permutation p with apply_perm(p, rep) == beta."""
    used = [False] * len(rep)
    img = []
    for b in beta:
        for j, r in enumerate(rep):
            if not used[j] and r == b:
                used[j] = True
                img.append(j)
                break
    return tuple(img)


def kappa(
    beta: MultiIndex,
    k: int,
    d: int,
    n: int,
    with_basis: bool = False,
    cache_dir: Optional[str] = None,
    use_cache: bool = True,
) -> KernelReport:
    """kappa_beta = dim ker(Psi restricted to L_beta), optionally with a kernel basis.

    The computation runs on the weakly decreasing orbit representative (the
    dimension is orbit-constant); a requested basis is carried back through the
    coordinate permutation.
    """
    _check_weight(beta, k, d, n)
    rep = orbit_rep(beta)
    report = _kappa_rep(rep, k, d, n, with_basis, cache_dir, use_cache)
    if tuple(beta) == rep:
        return report
    basis = report.basis
    if basis is not None:
        tau = _sorting_perm(rep, beta)
        basis = [f.apply_perm(tau) for f in basis]
    return KernelReport(
        beta=tuple(beta),
        dim_L=report.dim_L,
        kappa=report.kappa,
        basis=basis,
        method=report.method,
        wall_time=report.wall_time,
    )


def _kappa_rep(rep, k, d, n, with_basis, cache_dir, use_cache) -> KernelReport:
    cached = _cache_load(rep, k, d, n, cache_dir) if use_cache else None
    if cached is not None and (not with_basis or cached.basis is not None):
        return cached
    t0 = time.monotonic()
    ncols = count_monomials_of_weight(rep, d, k + 1)
    if ncols == 0:
        report = KernelReport(rep, 0, 0, [] if with_basis else None, "relation-matrix", 0.0)
        _cache_store(report, k, d, n, cache_dir)
        return report
    if not with_basis and ncols > DIRECT_LIMIT:
        from . import bigweight

        kap, method = bigweight.kappa_large(rep, k, d, n, split_limit=SPLIT_LIMIT)
        report = KernelReport(rep, ncols, kap, None, method, time.monotonic() - t0)
        _cache_store(report, k, d, n, cache_dir)
        return report
    matrix = relation_matrix(rep, k, d, n)
    if with_basis:
        vectors = kernel_basis(matrix)
        basis = _basis_to_polynomials(vectors, matrix.columns, n, d)
        kap = len(basis)
    else:
        rank = linalg.sparse_rank(matrix.integer_rows())
        basis = None
        kap = matrix.ncols - rank
    report = KernelReport(rep, ncols, kap, basis, "relation-matrix", time.monotonic() - t0)
    _cache_store(report, k, d, n, cache_dir)
    return report


# ---------------------------------------------------------------------------
# Graded piece over all weights


def secant_codim(k: int, d: int, n: int):
    """(codimension e, defective flag); lazy import keeps classify the owner."""
    from .classify import codim

    return codim(k, d, n)


def _dichotomy_bounds(k, d, n):
    """Allowed values {B} union [0, B'] of the graded-piece dimension, or None.

    B is the minimal-degree bound and B' the del Pezzo bound; the dimension of
    the degree-(k+1) piece is exactly B when sigma_k is a k-secant variety of
    minimal degree and at most B' otherwise.  Only used for d >= 3 where the
    codimension rule applies.
    """
    if d < 3:
        return None
    try:
        e, _ = secant_codim(k, d, n)
    except ValueError:
        return None
    if e <= 0:
        return (0, 0)
    bound = comb(e + k, k + 1)
    bound_dp = bound - comb(e + k - 2, k - 1)
    return (bound, bound_dp)


def _remaining_can_be_nonzero(total_so_far, remaining_sizes, bounds):
    """Can any remaining orbit have kappa >= 1 consistently with the dichotomy?

    The final total must lie in [0, B'] or equal B.  Returns True when some
    positive combination sum(s_j * x_j) keeps the total in the allowed set.
    """
    if bounds is None:
        return True
    bound, bound_dp = bounds
    room = bound - total_so_far
    if room < 0:
        raise ArithmeticError(
            f"graded piece exceeded the minimal-degree bound: {total_so_far} > {bound}"
        )
    sizes = sorted(set(remaining_sizes))
    if not sizes or room == 0:
        return False
    reachable = [False] * (room + 1)
    reachable[0] = True
    for s in sizes:
        for t in range(s, room + 1):
            if reachable[t - s]:
                reachable[t] = True
    hi = max(bound_dp - total_so_far, 0)
    if any(reachable[1 : hi + 1]):
        return True
    return reachable[room] if room >= 1 else False


def graded_piece_dim(
    k: int,
    d: int,
    n: int,
    prune_bound: Optional[int] = None,
    with_basis: bool = False,
    cache_dir: Optional[str] = None,
    workers: int = 1,
    use_dichotomy: bool = True,
    progress=None,
) -> GradedPiece:
    """dim I(sigma_k(v_d(P^n)))_{k+1} as the orbit-weighted sum of kernel dimensions.

    Orbits with size exceeding ``prune_bound`` are assigned kappa = 0 without
    computation (sound whenever the true total is at most the bound, e.g. the
    minimal-degree bound B).  Independently, once the computed subtotal and the
    remaining orbit sizes admit no completion other than all-zero inside the
    allowed value set {B} union [0, B'], the remaining orbits are skipped;
    disable with ``use_dichotomy=False``.
    """
    reps = orbit_reps(n, d * (k + 1))
    # compute the most balanced (largest) weight spaces first: kernels concentrate
    # there, so the dichotomy refinement can retire the long tail of small spaces
    dims = {i: count_monomials_of_weight(reps[i][0], d, k + 1) for i in range(len(reps))}
    order = sorted(range(len(reps)), key=lambda i: (-dims[i], reps[i][0]))
    bounds = _dichotomy_bounds(k, d, n) if use_dichotomy else None
    reports: dict = {}
    running = 0

    def make_pruned(beta, size, dim):
        return KernelReport(
            beta=beta, dim_L=dim, kappa=0, method="pruned", orbit_size=size, pruned=True
        )

    pending = []
    for pos, i in enumerate(order):
        beta, size = reps[i]
        if prune_bound is not None and size > prune_bound:
            reports[i] = make_pruned(beta, size, dims[i])
            continue
        pending.append((pos, i))

    def run_one(i):
        beta, size = reps[i]
        rep = kappa(beta, k, d, n, with_basis=with_basis, cache_dir=cache_dir)
        rep.orbit_size = size
        return i, rep

    if workers > 1 and len(pending) > 1 and bounds is None:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            for i, rep in pool.map(_kappa_job, [
                (reps[i][0], k, d, n, with_basis, cache_dir, reps[i][1], i) for _, i in pending
            ]):
                reports[i] = rep
                running += rep.contribution()
    else:
        remaining_sizes = [reps[i][1] for _, i in pending]
        for idx, (pos, i) in enumerate(pending):
            beta, size = reps[i]
            remaining_after = remaining_sizes[idx + 1 :]
            i2, rep = run_one(i)
            reports[i2] = rep
            running += rep.contribution()
            if progress:
                progress(rep)
            if bounds is not None and remaining_after and not _remaining_can_be_nonzero(
                running, remaining_after, bounds
            ):
                for _, j in pending[idx + 1 :]:
                    reports[j] = make_pruned(reps[j][0], reps[j][1], dims[j])
                break

    ordered = [reports[i] for i in range(len(reps))]
    total_dim = sum(r.contribution() for r in ordered)
    return GradedPiece(k=k, d=d, n=n, reports=ordered, total=total_dim, prune_bound=prune_bound)


def _kappa_job(args):
    beta, k, d, n, with_basis, cache_dir, size, i = args
    rep = kappa(beta, k, d, n, with_basis=with_basis, cache_dir=cache_dir)
    rep.orbit_size = size
    return i, rep


# ---------------------------------------------------------------------------
# Interpolation oracle


def interpolation_oracle_kappa(
    beta: MultiIndex, k: int, d: int, n: int, samples: Optional[int] = None, seed: int = 0
) -> int:
    """Null-space dimension of the evaluation matrix at random secant samples.

    Rows evaluate the normalized basis vectors of L_beta at exact points of the
    cone over sigma_k; the result is an upper bound for kappa_beta for any
    sample set and equals it with overwhelming probability.  Independent of the
    relation-matrix pipeline.
    """
    _check_weight(beta, k, d, n)
    columns = monomials_of_weight(beta, d, k + 1)
    if not columns:
        return 0
    if samples is None:
        samples = len(columns) + 10
    from math import gcd

    mults = [factorial_product(m) for m in columns]
    lcm = 1
    for v in mults:
        lcm = lcm * v // gcd(lcm, v)
    scale = [lcm // v for v in mults]
    rows = []
    for i in range(samples):
        point = secant_sample(k, d, n, seed=seed * 100003 + i)
        values = {alpha: int(v) for alpha, v in point.items()}
        row = []
        for j, m in enumerate(columns):
            val = scale[j]
            for alpha, mult in m:
                val *= values[alpha] ** mult
            row.append(val)
        rows.append(row)
    nullity, _ = linalg.integer_nullspace(rows)
    return nullity


# ---------------------------------------------------------------------------
# Cache


def _cache_path(beta, k, d, n, cache_dir):
    root = cache_dir or os.environ.get(CACHE_ENV)
    if not root:
        return None
    name = f"k{k}_d{d}_n{n}_b{'-'.join(str(b) for b in sorted(beta, reverse=True))}.json"
    return os.path.join(root, name)


def _cache_store(report: KernelReport, k, d, n, cache_dir):
    path = _cache_path(report.beta, k, d, n, cache_dir)
    if path is None:
        return
    os.makedirs(os.path.dirname(path), exist_ok=True)
    payload = {
        "schema": 1,
        "k": k,
        "d": d,
        "n": n,
        "beta": list(report.beta),
        "dim_L": report.dim_L,
        "kappa": report.kappa,
        "method": report.method,
        "wall_time": report.wall_time,
        "basis": None
        if report.basis is None
        else [f.to_records() for f in report.basis],
    }
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(payload, fh)
    os.replace(tmp, path)


def _cache_load(beta, k, d, n, cache_dir):
    path = _cache_path(beta, k, d, n, cache_dir)
    if path is None or not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    if payload.get("schema") != 1:
        return None
    basis = payload.get("basis")
    if basis is not None:
        basis = [SPolynomial.from_records(rec, n=n, d=d) for rec in basis]
    return KernelReport(
        beta=tuple(payload["beta"]),
        dim_L=payload["dim_L"],
        kappa=payload["kappa"],
        basis=basis,
        method=payload["method"],
        wall_time=payload.get("wall_time", 0.0),
    )
