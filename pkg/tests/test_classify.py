"""Codimension, bounds, verdicts, and the survey tables."""

import pytest

from secant_ideals.classify import (
    TABLE1_ROWS,
    bounds,
    catalecticant_witness,
    classify,
    codim,
    render_table1,
    table1,
    table2,
    terracini_codim_oracle,
)


def test_codim_table_values():
    assert codim(4, 3, 3) == (4, False)
    assert codim(7, 3, 4) == (1, True)
    assert codim(5, 3, 3) == (0, False)
    assert codim(5, 4, 2) == (1, True)
    assert codim(14, 4, 4) == (1, True)
    assert codim(13, 4, 4) == (5, False)


def test_codim_rejects_quadratic_veronese():
    with pytest.raises(ValueError):
        codim(3, 2, 2)
    with pytest.raises(ValueError):
        codim(2, 1, 3)


def test_bounds():
    assert bounds(4, 4) == (56, 36)
    assert bounds(7, 7)[1] == 2079
    assert bounds(2, 9) == (11, 2)
    assert bounds(0, 5) == (0, 0)


def test_terracini_oracle_agrees_with_codim():
    for k, d, n in TABLE1_ROWS:
        e, _ = codim(k, d, n)
        assert terracini_codim_oracle(k, d, n, seed=3) == e, (k, d, n)


def test_terracini_veronese_tangent():
    from math import comb

    # k = 1: tangent space of the Veronese has dimension n, so e = N - n
    for d, n in [(3, 2), (4, 2), (3, 3)]:
        N = comb(n + d, d) - 1
        assert terracini_codim_oracle(1, d, n, seed=1) == N - n


def test_catalecticant_witness_rows():
    assert catalecticant_witness(5, 4, 2)
    assert catalecticant_witness(9, 4, 3)
    assert catalecticant_witness(14, 4, 4)
    assert not catalecticant_witness(4, 3, 3)  # odd degree: no middle flattening


def test_classify_del_pezzo_433():
    r = classify(4, 3, 3)
    assert r.verdict == "4-del-Pezzo"
    assert r.dim_piece == 36
    assert r.degree == 105
    assert r.genus == 316


def test_classify_minimal_and_neither():
    assert classify(4, 4, 2).verdict == "4-minimal"
    assert classify(2, 4, 2).verdict == "neither"
    assert classify(5, 3, 3).verdict == "fills-ambient"
    r = classify(9, 4, 3)
    assert r.verdict == "9-minimal" and r.dim_piece == 1 and r.defective


def test_classify_defective_del_pezzo_734():
    r = classify(7, 3, 4)
    assert r.verdict == "7-del-Pezzo"
    assert r.dim_piece == 0
    assert r.defective


def test_classify_with_precomputed_dimension():
    r = classify(4, 3, 3, dim_piece=36)
    assert r.verdict == "4-del-Pezzo"
    with pytest.raises(ArithmeticError):
        classify(4, 3, 3, dim_piece=60)  # above B: impossible


def test_verdict_fields_consistency():
    for k, d, n in [(4, 3, 3), (4, 4, 2), (2, 4, 2), (3, 4, 2)]:
        r = classify(k, d, n)
        has_degree = r.degree is not None
        assert has_degree == (r.verdict.endswith("minimal") or r.verdict.endswith("del-Pezzo"))
        if r.verdict.endswith("del-Pezzo"):
            assert r.genus == (r.k - 1) * r.degree + 1
        assert r.dim_piece <= r.B


def test_table1_quick_rows():
    reports = {(r.k, r.d, r.n): r for r in table1(extended=False)}
    assert reports[(3, 4, 2)].verdict == "3-del-Pezzo"
    assert reports[(13, 4, 4)].verdict == "unknown"
    assert reports[(8, 6, 2)].verdict == "unknown"  # heavy row gated off
    assert reports[(9, 6, 2)].verdict == "9-minimal"
    text = render_table1(list(reports.values()))
    assert "(3,4,2)" in text


def test_table2_lines():
    text = table2(quintic_count=36)
    assert "Aronhold" in text
    assert "36 quintic" in text
    assert "2-minors" in text
