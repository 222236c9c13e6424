"""Codimension, degree bounds, and minimal-degree / del Pezzo / neither verdicts.

The codimension of the k-th secant of v_d(P^n) is N - min(N, k(n+1)-1) except
for four defect-1 cases; the degree-(k+1) piece of the ideal is bounded by
B = C(e+k, k+1) with equality exactly in the minimal-degree case, and by
B' = B - C(e+k-2, k-1) otherwise, with equality exactly in the del Pezzo case.
Those two facts drive both the verdicts and the sound skipping of orbits whose
kernels cannot be nonzero.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .multiindex import exponents
from .polyring import secant_sample, symmetric_flattening
from .prolong import GradedPiece, graded_piece_dim
from . import linalg

# (d, n, k) triples where the secant is 1-defective (Table rows marked defective).
DEFECTIVE = {(3, 4, 7), (4, 2, 5), (4, 3, 9), (4, 4, 14)}

TABLE1_ROWS = [
    (2, 3, 2),
    (3, 3, 2),
    (2, 4, 2),
    (3, 4, 2),
    (4, 4, 2),
    (5, 4, 2),
    (5, 5, 2),
    (6, 5, 2),
    (7, 5, 2),
    (8, 6, 2),
    (9, 6, 2),
    (3, 3, 3),
    (4, 3, 3),
    (5, 3, 3),
    (7, 4, 3),
    (8, 4, 3),
    (9, 4, 3),
    (6, 3, 4),
    (7, 3, 4),
    (8, 3, 4),
    (13, 4, 4),
    (14, 4, 4),
    (9, 3, 5),
]

# Rows whose kernel sweeps are heavy on a desk machine; gated behind extended.
HEAVY_ROWS = {(7, 4, 3), (8, 4, 3), (8, 6, 2), (9, 3, 5)}
UNKNOWN_ROWS = {(13, 4, 4)}


@dataclass
class ClassificationReport:
    k: int
    d: int
    n: int
    N: int
    e: int
    dim_piece: Optional[int]
    B: int
    B_prime: int
    verdict: str  # fills-ambient | k-minimal | k-del-Pezzo | neither | unknown
    degree: Optional[int] = None
    genus: Optional[int] = None
    defective: bool = False
    note: str = ""


def codim(k: int, d: int, n: int):
    """(codimension e of sigma_k(v_d(P^n)) in P^N, defective flag); rejects d <= 2."""
    if d <= 2:
        raise ValueError("d <= 2 out of scope: quadratic Veronese secants excluded")
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    N = comb(n + d, d) - 1
    e = N - min(N, k * (n + 1) - 1)
    defective = (d, n, k) in DEFECTIVE
    if defective:
        e += 1
    return e, defective


def bounds(e: int, k: int):
    """(B, B') = (C(e+k, k+1), C(e+k, k+1) - C(e+k-2, k-1))."""
    if e < 0 or k < 1:
        raise ValueError("need e >= 0 and k >= 1")
    b = comb(e + k, 1 + k)
    return b, b - comb(e + k - 2, k - 1)


# ---------------------------------------------------------------------------
# Catalecticant witness: for square middle flattenings of size k+1 the
# determinant is a nonzero form of degree k+1 vanishing on sigma_k, so the
# graded piece is nonzero without any kernel sweep.


def catalecticant_witness(k: int, d: int, n: int, seed: int = 7) -> bool:
    """True if det phi_{d/2,d/2} certifies a nonzero degree-(k+1) ideal element.

    Requires d even and C(n + d/2, d/2) == k+1.  Verifies exactly that the
    determinant is nonzero at a generic point and zero at secant samples.
    """
    if d % 2:
        return False
    a = d // 2
    if comb(n + a, a) != k + 1:
        return False
    rng = random.Random(seed)
    generic = {alpha: Fraction(rng.randint(-20, 20)) for alpha in exponents(n, d)}
    det_generic = linalg.dense_det(symmetric_flattening(a, a, n, point=generic))
    if det_generic == 0:  # astronomically unlikely; retry once then give up
        generic = {alpha: Fraction(rng.randint(-40, 40)) for alpha in exponents(n, d)}
        det_generic = linalg.dense_det(symmetric_flattening(a, a, n, point=generic))
        if det_generic == 0:
            return False
    for s in range(3):
        pt = secant_sample(k, d, n, seed=seed + s)
        if linalg.dense_det(symmetric_flattening(a, a, n, point=pt)) != 0:
            raise ArithmeticError(
                "catalecticant determinant fails to vanish on a secant sample"
            )
    return True


def classify(
    k: int,
    d: int,
    n: int,
    dim_piece: Optional[int] = None,
    cache_dir: Optional[str] = None,
    workers: int = 1,
) -> ClassificationReport:
    """Verdict for sigma_k(v_d(P^n)) from the dimension of the degree-(k+1) piece."""
    e, defective = codim(k, d, n)
    N = comb(n + d, d) - 1
    b, b_dp = bounds(e, k)
    note = ""
    if e == 0:
        return ClassificationReport(
            k, d, n, N, e, 0, b, b_dp, "fills-ambient", defective=defective
        )
    if dim_piece is None:
        if b == 1 and catalecticant_witness(k, d, n):
            # bound gives dim <= 1, the witness gives dim >= 1
            dim_piece = 1
            note = "dimension pinned by middle-catalecticant determinant witness"
        else:
            piece = graded_piece_dim(
                k, d, n, prune_bound=b, cache_dir=cache_dir, workers=workers
            )
            dim_piece = piece.total
    if dim_piece > b:
        raise ArithmeticError(f"dim piece {dim_piece} exceeds the bound B = {b}")
    if dim_piece == b:
        verdict = f"{k}-minimal"
        degree = comb(e + k, k)
        genus = None
    elif dim_piece == b_dp:
        verdict = f"{k}-del-Pezzo"
        degree = comb(e + k, k) + comb(e + k - 1, k - 1)
        genus = (k - 1) * degree + 1
    elif dim_piece < b_dp:
        verdict = "neither"
        degree = genus = None
    else:
        verdict = "unknown"  # contradicts the del Pezzo bound; should not happen
        degree = genus = None
        note = "dimension lies strictly between B' and B"
    return ClassificationReport(
        k, d, n, N, e, dim_piece, b, b_dp, verdict,
        degree=degree, genus=genus, defective=defective, note=note,
    )


def table1(
    extended: bool = False,
    cache_dir: Optional[str] = None,
    workers: int = 1,
    rows=None,
) -> list:
    """Classification reports for every Table-1 row with d >= 3.

    Heavy rows are computed only when ``extended`` is set and are otherwise
    reported unknown; the (13,4,4) row is always reported unknown.
    """
    out = []
    for k, d, n in rows or TABLE1_ROWS:
        e, defective = codim(k, d, n)
        N = comb(n + d, d) - 1
        b, b_dp = bounds(e, k)
        if (k, d, n) in UNKNOWN_ROWS:
            out.append(
                ClassificationReport(
                    k, d, n, N, e, None, b, b_dp, "unknown",
                    defective=defective, note="not computed (out of memory in the source)",
                )
            )
            continue
        if (k, d, n) in HEAVY_ROWS and not extended:
            out.append(
                ClassificationReport(
                    k, d, n, N, e, None, b, b_dp, "unknown",
                    defective=defective, note="heavy row; rerun with --extended",
                )
            )
            continue
        out.append(classify(k, d, n, cache_dir=cache_dir, workers=workers))
    return out


def render_table1(reports) -> str:
    lines = ["(k,d,n)      N   e  verdict        dim  B    B'   degree  genus  note"]
    for r in reports:
        dim = "-" if r.dim_piece is None else str(r.dim_piece)
        deg = "-" if r.degree is None else str(r.degree)
        gen = "-" if r.genus is None else str(r.genus)
        extra = " defective" if r.defective else ""
        lines.append(
            f"({r.k},{r.d},{r.n})".ljust(12)
            + f"{r.N:4} {r.e:3}  {r.verdict:13} {dim:>4} {r.B:<4} {r.B_prime:<4} "
            + f"{deg:>6} {gen:>6}  {r.note}{extra}"
        )
    return "\n".join(lines)


def table2(quintic_count: Optional[int] = None) -> str:
    """Generator descriptions for the ideals of sigma_k of the cubic Veronese, k <= 4."""
    if quintic_count is None:
        from .quintics import thirty_six_basis

        quintic_count = len(thirty_six_basis())
    lines = [
        "defining ideals of k-th secants of the cubic Veronese (non-filling cases)",
        "k=1, n>=1: generated by 2-minors of the flattening phi_{1,2}",
        "k=2, n>=2: generated by 3-minors of the flattening phi_{1,2}",
        "k=3, n=2:  the Aronhold quartic equation",
        "k=3, n>=3: the Aronhold equation and 4-minors of phi_{1,2}",
        f"k=4, n=3:  the {quintic_count} quintic generators (verified count {quintic_count})",
        f"k=4, n>=4: the {quintic_count} quintics and 5-minors of phi_{{1,2}} (by inheritance)",
    ]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Terracini oracle


def terracini_codim_oracle(k: int, d: int, n: int, seed: int = 0) -> int:
    """Codimension via the rank of tangent directions at k random Veronese points.

    Rows are the partial derivatives of the moment map alpha -> t^alpha at k
    exact random points; e = N - (rank - 1) by Terracini's lemma.
    """
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    N = comb(n + d, d) - 1
    rng = random.Random((seed * 9176 + k) * 131 + d * 17 + n)
    alphas = exponents(n, d)
    rows = []
    for _ in range(k):
        while True:
            t = tuple(rng.randint(-9, 9) for _ in range(n + 1))
            if all(t):  # keep all coordinates nonzero so no derivative degenerates
                break
        for j in range(n + 1):
            row = []
            for alpha in alphas:
                if alpha[j] == 0:
                    row.append(0)
                else:
                    val = alpha[j]
                    for i, (tv, av) in enumerate(zip(t, alpha)):
                        val *= tv ** (av - 1 if i == j else av)
                    row.append(val)
            rows.append(row)
    rank = linalg.dense_rank(rows)
    return N - (rank - 1)
