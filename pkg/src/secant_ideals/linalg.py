"""Exact elimination over the integers/rationals for sparse and dense systems.

The sparse eliminator works on integer rows (dict column -> coefficient).  It
first runs the zero-forcing cascade (rows with a single surviving entry force
their column to zero at no fill-in cost), then eliminates the residual with
sparsity-guided pivoting: rows are consumed in order of current length and the
pivot column is the least-populated one, with deterministic tie-breaks.  Rows
are kept fraction-free by cross-multiplication and gcd normalization.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd

_BIG = 1 << 48


def dedupe_rows(rows):
    """Drop duplicate rows (same support and coefficients up to sign/scale is NOT collapsed;
    only exact duplicates are)."""
    seen = set()
    out = []
    for r in rows:
        key = frozenset(r.items())
        if key and key not in seen:
            seen.add(key)
            out.append(r)
    return out


def zero_forcing(rows):
    """Cascade unit rows: returns (zeroed_cols set, surviving rows list).

    A row with exactly one entry forces its column to zero; removing that
    column can create new unit rows.  Surviving rows have >= 2 entries, none in
    a zeroed column.  This is exact Gaussian elimination restricted to unit
    pivot rows, so rank = len(zeroed) + rank(surviving rows).
    """
    rows = [dict(r) for r in rows]
    col_rows = {}
    for i, r in enumerate(rows):
        for c in r:
            col_rows.setdefault(c, []).append(i)
    zeroed = set()
    stack = [i for i, r in enumerate(rows) if len(r) == 1]
    while stack:
        i = stack.pop()
        r = rows[i]
        if len(r) != 1:
            continue
        (c,) = r
        r.clear()
        if c in zeroed:
            continue
        zeroed.add(c)
        for j in col_rows.get(c, ()):
            rj = rows[j]
            if c in rj:
                del rj[c]
                if len(rj) == 1:
                    stack.append(j)
        col_rows.pop(c, None)
    return zeroed, [r for r in rows if r]


def sparse_eliminate(rows, keep_pivot_rows=False):
    """Forward elimination; returns (rank, pivot_rows) with pivot_rows either
    None or the ordered list of (pivot_col, row_dict) in elimination order.

    Row ops are fraction-free over the integers; each pivot clears its column
    from every other active row.
    """
    rows = [dict(r) for r in dedupe_rows(rows)]
    zeroed, rows = zero_forcing(rows)
    rank = len(zeroed)
    pivots = [(c, {c: 1}) for c in sorted(zeroed)] if keep_pivot_rows else None

    col_rows = {}
    for i, r in enumerate(rows):
        for c in r:
            col_rows.setdefault(c, set()).add(i)
    alive = [True] * len(rows)
    heap = [(len(r), i) for i, r in enumerate(rows)]
    heapq.heapify(heap)
    while heap:
        ln, i = heapq.heappop(heap)
        if not alive[i]:
            continue
        r = rows[i]
        if not r:
            alive[i] = False
            continue
        if len(r) != ln:
            heapq.heappush(heap, (len(r), i))
            continue
        alive[i] = False
        rank += 1
        c = min(r, key=lambda cc: (len(col_rows.get(cc, ())), cc))
        p = r[c]
        targets = [j for j in col_rows.get(c, ()) if alive[j]]
        for cc in r:
            s = col_rows.get(cc)
            if s is not None:
                s.discard(i)
        col_rows.pop(c, None)
        for j in targets:
            rj = rows[j]
            v = rj.get(c)
            if v is None:
                continue
            g = gcd(p, v)
            fp, fv = p // g, v // g
            if fp != 1:
                for cc in rj:
                    rj[cc] *= fp
            grew = fp != 1
            for cc, vv in r.items():
                if cc == c:
                    del rj[c]
                    continue
                nv = rj.get(cc, 0) - vv * fv
                if nv:
                    if cc not in rj:
                        col_rows.setdefault(cc, set()).add(j)
                    rj[cc] = nv
                    if nv > _BIG or nv < -_BIG:
                        grew = True
                elif cc in rj:
                    del rj[cc]
                    col_rows[cc].discard(j)
            if grew and rj:
                g2 = 0
                for vv in rj.values():
                    g2 = gcd(g2, vv)
                    if g2 == 1:
                        break
                if g2 > 1:
                    for cc in rj:
                        rj[cc] //= g2
            if rj:
                heapq.heappush(heap, (len(rj), j))
            else:
                alive[j] = False
        if keep_pivot_rows:
            pivots.append((c, r))
    return rank, pivots


def sparse_rank(rows) -> int:
    rank, _ = sparse_eliminate(rows)
    return rank


def kernel_from_pivots(pivots, columns):
    """Kernel basis of the original system from forward-elimination pivot rows.

    `columns` is the full ordered list of column indices.  Returns one exact
    rational vector (dict col -> Fraction) per free column, normalized so the
    first nonzero coordinate in column order is 1; ordered by free column.
    """
    pivot_cols = {c for c, _ in pivots}
    free_cols = [c for c in columns if c not in pivot_cols]
    basis = []
    for f in free_cols:
        x = {f: Fraction(1)}
        for c, row in reversed(pivots):
            s = Fraction(0)
            for cc, vv in row.items():
                if cc != c and cc in x:
                    s += vv * x[cc]
            if s:
                x[c] = -s / row[c]
        vec = {c: v for c, v in x.items() if v}
        lead = min(vec)  # columns are ints in canonical order
        scale = vec[lead]
        basis.append({c: v / scale for c, v in vec.items()})
    return basis


def sparse_kernel(rows, ncols):
    """(rank, kernel basis) of an integer row system over columns 0..ncols-1."""
    rank, pivots = sparse_eliminate(rows, keep_pivot_rows=True)
    return rank, kernel_from_pivots(pivots, range(ncols))


# ---------------------------------------------------------------------------
# Dense exact routines (small matrices, big integer entries)


def dense_rank(mat) -> int:
    """Rank of a dense matrix of ints/Fractions via fraction-free elimination."""
    m = [[Fraction(x) for x in row] for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    for c in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][c]
        for r in range(rank + 1, nrows):
            if m[r][c]:
                f = m[r][c] / pv
                row, prow = m[r], m[rank]
                for j in range(c, ncols):
                    row[j] -= f * prow[j]
        rank += 1
        if rank == nrows:
            break
    return rank


def dense_nullity(mat) -> int:
    if not mat:
        return 0
    return len(mat[0]) - dense_rank(mat)


def dense_det(mat) -> Fraction:
    """Determinant via fraction-free Bareiss elimination."""
    n = len(mat)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in mat):
        raise ValueError("determinant needs a square matrix")
    m = [[Fraction(x) for x in row] for row in mat]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not m[k][k]:
            piv = next((r for r in range(k + 1, n) if m[r][k]), None)
            if piv is None:
                return Fraction(0)
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Nullity of a dense integer matrix via modular pivoting and p-adic lifting.
#
# The returned value is unconditionally exact: the modular elimination only
# selects a pivot structure (a nonvanishing minor mod p proves the integer
# rank is at least the modular rank), candidate kernel vectors are lifted
# p-adically and reconstructed as rationals, and every vector is re-verified
# over the integers.  A prime for which the two bounds do not meet is
# discarded and the computation retried.

_PRIMES = (33_554_467, 33_554_473, 33_554_519, 67_108_879, 67_108_913)


def _mod_row_reduce(a, p):
    """Forward elimination mod p in place; returns (pivot columns, rank)."""
    import numpy as np

    a %= p
    nrows, ncols = a.shape
    piv_cols = []
    r = 0
    for c in range(ncols):
        nz = np.nonzero(a[r:, c])[0]
        if not len(nz):
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        rest = np.nonzero(a[r + 1 :, c])[0]
        if len(rest):
            rows = a[r + 1 :][rest]
            a[r + 1 :][rest] = (rows - np.outer(rows[:, c], a[r])) % p
        piv_cols.append(c)
        r += 1
        if r == nrows:
            break
    return piv_cols, r


def _mod_inverse(mat_mod, p):
    """Inverse of a square matrix mod p, or None when singular."""
    import numpy as np

    n = len(mat_mod)
    a = np.concatenate([mat_mod % p, np.eye(n, dtype=np.int64)], axis=1)
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if not len(nz):
            return None
        pr = c + int(nz[0])
        if pr != c:
            a[[c, pr]] = a[[pr, c]]
        inv = pow(int(a[c, c]), p - 2, p)
        a[c] = a[c] * inv % p
        others = [r for r in range(n) if r != c and a[r, c]]
        if others:
            rows = a[others]
            a[others] = (rows - np.outer(rows[:, c], a[c])) % p
    return a[:, n:]


def rational_reconstruct(u, modulus):
    """num/den with u = num/den mod modulus and |num|, den <= sqrt(modulus/2)."""
    bound = int((modulus // 2) ** 0.5)
    r0, r1 = modulus, u % modulus
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    if gcd(r1, s1) != 1:
        return None
    return Fraction(r1, s1)


def _dixon_solve(P, Pinv_mod, b, p):
    """Exact rational solution of P x = b via p-adic lifting; None on failure."""
    import numpy as np

    n = len(P)
    residual = [int(v) for v in b]
    x = [0] * n
    pk = 1
    max_iters = 4 * n + 400
    for it in range(max_iters):
        r_mod = np.array([v % p for v in residual], dtype=np.int64)
        y = (Pinv_mod @ r_mod) % p
        y_list = [int(v) for v in y]
        for i in range(n):
            acc = residual[i]
            Pi = P[i]
            for j in range(n):
                yj = y_list[j]
                if yj:
                    acc -= Pi[j] * yj
            residual[i] = acc // p
        for j in range(n):
            x[j] += y_list[j] * pk
        pk *= p
        if it % 8 == 7 or all(v == 0 for v in residual):
            sol = []
            ok = True
            for j in range(n):
                f = rational_reconstruct(x[j] % pk, pk)
                if f is None:
                    ok = False
                    break
                sol.append(f)
            if ok and _check_solution(P, sol, b):
                return sol
    return None


def _check_solution(P, sol, b):
    den = 1
    for f in sol:
        den = den * f.denominator // gcd(den, f.denominator)
    nums = [int(f * den) for f in sol]
    for i, row in enumerate(P):
        acc = 0
        for j, v in enumerate(nums):
            if v:
                acc += row[j] * v
        if acc != b[i] * den:
            return False
    return True


def integer_nullspace(mat, want_basis=False):
    """(nullity, basis or None) of an integer matrix, exactly.

    Suitable for dense matrices with large entries; falls back to fraction-free
    elimination if every configured prime exhibits an inconsistent structure
    (which random inputs essentially never do).
    """
    import numpy as np

    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    if ncols == 0:
        return 0, ([] if want_basis else None)
    if nrows == 0:
        basis = [{j: Fraction(1)} for j in range(ncols)] if want_basis else None
        return ncols, basis
    for p in _PRIMES:
        amod = np.array([[x % p for x in row] for row in mat], dtype=np.int64)
        piv_cols, rank = _mod_row_reduce(amod.copy(), p)
        if rank == ncols:
            return 0, ([] if want_basis else None)
        # identify pivot rows for the chosen columns by re-reducing the transpose
        tmod = amod[:, piv_cols].T.copy()
        piv_rows, rank_t = _mod_row_reduce(tmod, p)
        if rank_t != rank:
            continue
        P = [[mat[i][j] for j in piv_cols] for i in piv_rows]
        Pmod = np.array([[x % p for x in row] for row in P], dtype=np.int64)
        Pinv = _mod_inverse(Pmod, p)
        if Pinv is None:
            continue
        free_cols = [j for j in range(ncols) if j not in set(piv_cols)]
        basis = []
        failed = False
        for f in free_cols:
            b = [-mat[i][f] for i in piv_rows]
            sol = _dixon_solve(P, Pinv, b, p)
            if sol is None:
                failed = True
                break
            vec = {f: Fraction(1)}
            for idx, j in enumerate(piv_cols):
                if sol[idx]:
                    vec[j] = sol[idx]
            if not _verify_nullvector(mat, vec):
                failed = True
                break
            basis.append(vec)
        if failed:
            continue
        return len(free_cols), (basis if want_basis else None)
    # unlucky-prime fallback: exact fraction-free elimination
    rows = [{j: v for j, v in enumerate(row) if v} for row in mat]
    rank, basis = sparse_kernel([r for r in rows if r], ncols)
    return ncols - rank, (basis if want_basis else None)


def _verify_nullvector(mat, vec):
    den = 1
    for f in vec.values():
        den = den * f.denominator // gcd(den, f.denominator)
    nums = {j: int(f * den) for j, f in vec.items()}
    for row in mat:
        acc = 0
        for j, v in nums.items():
            if v:
                acc += row[j] * v
        if acc:
            return False
    return True


def dense_solve(mat, rhs):
    """Solve the square system mat * x = rhs exactly; raises on singular input."""
    n = len(mat)
    m = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(mat, rhs)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix in dense_solve")
        m[c], m[piv] = m[piv], m[c]
        pv = m[c][c]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c] / pv
                for j in range(c, n + 1):
                    m[r][j] -= f * m[c][j]
    return [m[r][n] / m[r][r] for r in range(n)]


def dense_kernel(mat):
    """Kernel basis of a dense rational matrix, columns indexed 0..ncols-1."""
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    rows = []
    for row in mat:
        r = {}
        den = 1
        for x in row:
            den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
        for j, x in enumerate(row):
            v = Fraction(x) * den
            if v:
                r[j] = int(v)
        if r:
            rows.append(r)
    _, basis = sparse_kernel(rows, ncols)
    return basis
