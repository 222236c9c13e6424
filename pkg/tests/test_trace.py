"""Staged coefficient elimination."""

import pytest

from secant_ideals.multiindex import orbit_reps, parse_smonomial
from secant_ideals.prolong import kappa
from secant_ideals.trace import (
    check_trace_solution,
    elimination_trace,
    records_to_trace,
    render_trace,
    trace_to_records,
)


def test_example_weight_844():
    tr = elimination_trace((8, 4, 4), 3, 4, 2)
    assert tr.final_kappa == 2
    assert len(tr.variables) == 2
    assert tr.residual_rank == 0
    assert check_trace_solution(tr)


def test_render_contains_step1_monomial():
    tr = elimination_trace((8, 4, 4), 3, 4, 2)
    text = render_trace(tr)
    assert "s_400^2*s_040*s_004" in text
    assert "eps = (8,0,0)" in text
    assert "51 monomials" in text


def test_zero_weight_2355():
    tr = elimination_trace((2, 3, 5, 5), 4, 3, 3)
    assert tr.final_kappa == 0
    assert len(tr.variables) == 0


def test_priority_variable_2445():
    pri = [parse_smonomial("s_2001*s_0300*s_0111*s_0030*s_0003", 3)]
    tr = elimination_trace((2, 4, 4, 5), 4, 3, 3, variable_priority=pri)
    assert tr.final_kappa == 1
    assert len(tr.variables) == 1
    assert tr.variables[0] == pri[0]
    assert check_trace_solution(tr)


def test_priority_rejects_foreign_monomial():
    pri = [parse_smonomial("s_3000^5", 3)]
    with pytest.raises(ValueError):
        elimination_trace((2, 4, 4, 5), 4, 3, 3, variable_priority=pri)


def test_every_monomial_appears_once():
    tr = elimination_trace((8, 4, 4), 3, 4, 2)
    seen = [s.monomial for s in tr.steps]
    assert len(seen) == len(set(seen)) == 51


def test_determinism():
    a = elimination_trace((3, 4, 4, 4), 4, 3, 3)
    b = elimination_trace((3, 4, 4, 4), 4, 3, 3)
    assert a.steps == b.steps
    assert a.variables == b.variables
    assert a.final_kappa == b.final_kappa == 3


def test_round_trip_records():
    tr = elimination_trace((8, 4, 4), 3, 4, 2)
    back = records_to_trace(trace_to_records(tr))
    assert back.beta == tr.beta
    assert back.final_kappa == tr.final_kappa
    assert back.variables == tr.variables
    assert [(s.kind, s.monomial, s.eps) for s in back.steps] == [
        (s.kind, s.monomial, s.eps) for s in tr.steps
    ]


def test_render_empty_solution_notice():
    # every weight with |beta| = d(k+1) is representable, so the empty notice
    # is only reachable on a hand-built trace
    from secant_ideals.trace import EliminationTrace

    tr = EliminationTrace(
        beta=(1, 1, 1), k=1, d=1, n=2, steps=[], variables=[],
        residual_rank=0, final_kappa=0, solution={},
    )
    assert "no monomials" in render_trace(tr)


def test_trace_agrees_with_kappa_342_sweep():
    for beta, _ in orbit_reps(2, 16):
        tr = elimination_trace(beta, 3, 4, 2)
        assert tr.final_kappa == kappa(beta, 3, 4, 2, use_cache=False).kappa, beta


def test_trace_agrees_with_kappa_433_sweep():
    for beta, _ in orbit_reps(3, 15):
        tr = elimination_trace(beta, 4, 3, 3)
        assert tr.final_kappa == kappa(beta, 4, 3, 3, use_cache=False).kappa, beta
