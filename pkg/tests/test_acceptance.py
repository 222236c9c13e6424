"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Heavy computations (the eighth secant of the quartic threefold, the seventh
secant full sweep, the ninth secant of the cubic fivefold, and the heavy
survey rows) run when SECANT_IDEALS_EXTENDED=1 or when cached kernel reports
are available via SECANT_IDEALS_CACHE; everything else runs unconditionally.
"""

import os
import random
import time

import pytest

from secant_ideals.classify import (
    TABLE1_ROWS,
    classify,
    codim,
    terracini_codim_oracle,
)
from secant_ideals.multiindex import orbit_rep, orbit_reps, weight_orbit
from secant_ideals.prolong import (
    graded_piece_dim,
    interpolation_oracle_kappa,
    kappa,
)
from secant_ideals.trace import elimination_trace

EXTENDED = os.environ.get("SECANT_IDEALS_EXTENDED") == "1"
CACHE = os.environ.get("SECANT_IDEALS_CACHE")

extended = pytest.mark.skipif(
    not (EXTENDED or CACHE),
    reason="extended tier: set SECANT_IDEALS_EXTENDED=1 (results are cached for reruns)",
)


def report(criterion, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}"
    print(line)
    assert ok, line


def test_criterion_1_dimension_36():
    t0 = time.monotonic()
    piece = graded_piece_dim(4, 3, 3, cache_dir=CACHE)
    elapsed = time.monotonic() - t0
    breakdown = sorted((r.kappa, r.orbit_size) for r in piece.reports if r.kappa)
    ok = (
        piece.total == 36
        and breakdown == [(1, 12), (1, 12), (3, 4)]
        and elapsed < 120
    )
    report(1, ok, f"dim = {piece.total}, breakdown 1x12 + 3x4 + 1x12, {elapsed:.1f}s")


def test_criterion_2_per_weight_kernels_433():
    values = {
        (2, 4, 4, 5): 1,
        (3, 4, 4, 4): 3,
        (3, 3, 4, 5): 1,
    }
    got = {b: kappa(b, 4, 3, 3, cache_dir=CACHE).kappa for b in values}
    nonzero_reps = {orbit_rep(b) for b in values}
    rng = random.Random(433)
    others = [
        b for b, _ in orbit_reps(3, 15)
        if b not in nonzero_reps and b != orbit_rep((2, 3, 5, 5))
    ]
    sample = rng.sample(others, 4) + [(2, 3, 5, 5)]
    zeros = {b: kappa(b, 4, 3, 3, cache_dir=CACHE).kappa for b in sample}
    ok = got == values and all(v == 0 for v in zeros.values())
    report(2, ok, f"kappas {got}, zero at {sorted(zeros)}")


def test_criterion_3_dimension_105_with_per_weight_list():
    t0 = time.monotonic()
    piece = graded_piece_dim(3, 4, 2, cache_dir=CACHE)
    elapsed = time.monotonic() - t0
    expected = {
        (6, 5, 5): 7, (6, 6, 4): 7, (7, 5, 4): 4, (7, 6, 3): 3,
        (7, 7, 2): 1, (8, 5, 3): 1, (8, 6, 2): 1, (8, 4, 4): 2,
    }
    got = {r.beta: r.kappa for r in piece.reports if r.kappa}
    ok = piece.total == 105 and got == expected and elapsed < 60
    report(3, ok, f"dim = {piece.total}, per-weight list matches, {elapsed:.1f}s")


def test_criterion_4_small_rows():
    a = graded_piece_dim(6, 5, 2, cache_dir=CACHE).total
    b = graded_piece_dim(4, 4, 2, cache_dir=CACHE).total
    ok = a == 15 and b == 21
    report(4, ok, f"(6,5,2) = {a}, (4,4,2) = {b}")


@extended
def test_criterion_4_extended_843():
    t0 = time.monotonic()
    piece = graded_piece_dim(8, 4, 3, cache_dir=CACHE)
    ok = piece.total == 55
    report(4, ok, f"(8,4,3) = {piece.total} in {time.monotonic() - t0:.0f}s")


@extended
def test_criterion_4_pruned_935():
    t0 = time.monotonic()
    piece = graded_piece_dim(9, 3, 5, prune_bound=11, cache_dir=CACHE)
    ok = piece.total == 1
    report(4, ok, f"(9,3,5) with prune bound 11 = {piece.total} in {time.monotonic() - t0:.0f}s")


@extended
def test_criterion_5_extended_743():
    t0 = time.monotonic()
    piece = graded_piece_dim(7, 4, 3, cache_dir=CACHE)
    elapsed = time.monotonic() - t0
    from secant_ideals.symmetry import split_kappa

    parts = split_kappa((8, 8, 8, 8), 7, 4, 3)
    ok = (
        piece.total == 826
        and parts == {"++": 12, "+-": 4, "-+": 4, "--": 6}
        and elapsed < 3600
    )
    report(5, ok, f"(7,4,3) = {piece.total}, (8,8,8,8) split {parts}, {elapsed:.0f}s")


def test_criterion_6_quintics_verify():
    from secant_ideals.quintics import verify_all

    t0 = time.monotonic()
    results = verify_all()
    elapsed = time.monotonic() - t0
    failing = [name for name, passed in results if not passed]
    ok = not failing and elapsed < 300
    report(6, ok, f"{len(results)} checks, {elapsed:.0f}s" + (f", failing: {failing}" if failing else ""))


QUICK_VERDICTS = {
    (3, 4, 2): "3-del-Pezzo",
    (6, 5, 2): "6-del-Pezzo",
    (4, 3, 3): "4-del-Pezzo",
    (7, 3, 4): "7-del-Pezzo",
    (4, 4, 2): "4-minimal",
    (9, 4, 3): "9-minimal",
    (5, 3, 3): "fills-ambient",
    (8, 3, 4): "fills-ambient",
    (14, 4, 4): "14-minimal",
    (7, 5, 2): "fills-ambient",
    (9, 6, 2): "9-minimal",
    (3, 3, 2): "3-minimal",
    (5, 5, 2): "neither",
    (3, 3, 3): "neither",
    (6, 3, 4): "neither",
    (2, 3, 2): "2-minimal",
    (2, 4, 2): "neither",
    (5, 4, 2): "5-minimal",
}

HEAVY_VERDICTS = {
    (8, 4, 3): "8-minimal",
    (7, 4, 3): "neither",
    (8, 6, 2): "neither",
    (9, 3, 5): "neither",
}


def test_criterion_7_quick_rows():
    bad = []
    for (k, d, n), expect in QUICK_VERDICTS.items():
        r = classify(k, d, n, cache_dir=CACHE)
        if r.verdict != expect:
            bad.append((k, d, n, r.verdict, expect))
    r433 = classify(4, 3, 3, cache_dir=CACHE)
    ok = (
        not bad
        and r433.degree == 105
        and r433.genus == 316
    )
    report(7, ok, f"{len(QUICK_VERDICTS)} quick verdicts match Table 1" + (f"; bad: {bad}" if bad else ""))


@extended
def test_criterion_7_heavy_rows():
    bad = []
    degrees = {}
    for (k, d, n), expect in HEAVY_VERDICTS.items():
        r = classify(k, d, n, cache_dir=CACHE)
        degrees[(k, d, n)] = r.degree
        if r.verdict != expect:
            bad.append((k, d, n, r.verdict, expect))
    ok = not bad and degrees[(8, 4, 3)] == 165
    report(7, ok, f"heavy verdicts {HEAVY_VERDICTS} match; degree(8,4,3) = {degrees[(8,4,3)]}")


def test_criterion_7_unknown_row():
    from secant_ideals.classify import table1

    rows = {(r.k, r.d, r.n): r for r in table1(extended=False, cache_dir=CACHE)}
    ok = rows[(13, 4, 4)].verdict == "unknown"
    report(7, ok, "(13,4,4) reported unknown")


def test_criterion_8_interpolation_oracle_agreement():
    bad = []
    # small rows: literally every weight
    for k, d, n in [(2, 3, 2), (3, 3, 2)]:
        for rep, _ in orbit_reps(n, d * (k + 1)):
            for beta in weight_orbit(rep):
                o = interpolation_oracle_kappa(beta, k, d, n, seed=8)
                kk = kappa(beta, k, d, n, cache_dir=CACHE).kappa
                if o != kk:
                    bad.append((k, d, n, beta, o, kk))
    # larger rows: orbit representatives (kappa is orbit-constant; the action
    # law itself is covered by the property suite)
    for k, d, n in [(3, 4, 2), (4, 3, 3)]:
        for rep, _ in orbit_reps(n, d * (k + 1)):
            o = interpolation_oracle_kappa(rep, k, d, n, seed=8)
            kk = kappa(rep, k, d, n, cache_dir=CACHE).kappa
            if o != kk:
                bad.append((k, d, n, rep, o, kk))
    report(8, not bad, "interpolation oracle agrees on (2,3,2), (3,3,2), (3,4,2), (4,3,3)"
           + (f"; bad: {bad[:4]}" if bad else ""))


def test_criterion_8_terracini_agreement():
    bad = []
    for k, d, n in TABLE1_ROWS:
        e, _ = codim(k, d, n)
        if terracini_codim_oracle(k, d, n, seed=11) != e:
            bad.append((k, d, n))
    report(8, not bad, "Terracini oracle matches the codimension column"
           + (f"; bad: {bad}" if bad else ""))


def test_criterion_8_trace_agreement():
    bad = []
    for k, d, n in [(3, 4, 2), (4, 3, 3)]:
        for rep, _ in orbit_reps(n, d * (k + 1)):
            tr = elimination_trace(rep, k, d, n)
            kk = kappa(rep, k, d, n, cache_dir=CACHE).kappa
            if tr.final_kappa != kk:
                bad.append((k, d, n, rep, tr.final_kappa, kk))
    report(8, not bad, "staged elimination agrees across the (3,4,2) and (4,3,3) sweeps"
           + (f"; bad: {bad[:4]}" if bad else ""))


def test_criterion_9_property_suites():
    # the suites themselves live in test_properties.py; re-run them here so the
    # acceptance module prints a line for the criterion
    import test_properties as props

    props.test_group_action_laws_100()
    props.test_mass_conservation_100()
    props.test_split_kappa_additivity_100()
    props.test_pfaffian_squares_to_determinant_100()
    props.test_psi_permutation_equivariance_100()
    report(9, True, "five property suites at 100 randomized cases each")
