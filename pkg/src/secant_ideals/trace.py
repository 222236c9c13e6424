"""Staged coefficient elimination: determine coefficients one relation at a time.

The procedure scans the coefficient relations of a weight space; any relation
whose support contains exactly one undetermined coefficient determines it as a
linear expression in the variables introduced so far.  When no relation
qualifies, the next undetermined monomial (from an optional priority list,
else canonical order) becomes a fresh variable.  At the end every relation is
re-evaluated on the symbolic solution; the kernel dimension is the number of
variables minus the rank of the residual constraints.  This is an independent
second route to kappa_beta.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .multiindex import (
    MultiIndex,
    SMonomial,
    factor_pairs,
    format_smonomial,
    monomial_div,
    monomial_key,
    monomial_weight,
    monomials_of_weight,
    total,
)
from .polyring import pair_v
from . import linalg


@dataclass
class TraceStep:
    kind: str  # "determine" | "new-variable"
    monomial: SMonomial
    eps: Optional[MultiIndex] = None
    relation_monomial: Optional[SMonomial] = None
    expression: Optional[dict] = None  # variable index -> Fraction


@dataclass
class EliminationTrace:
    beta: MultiIndex
    k: int
    d: int
    n: int
    steps: list
    variables: list  # monomials introduced as variables, in order
    residual_rank: int
    final_kappa: int
    solution: dict = field(repr=False, default_factory=dict)

    def variable_count(self) -> int:
        return len(self.variables)


def elimination_trace(
    beta: MultiIndex,
    k: int,
    d: int,
    n: int,
    variable_priority: Optional[list] = None,
) -> EliminationTrace:
    """Run the staged elimination for the weight beta of the k-th secant of v_d(P^n)."""
    if len(beta) != n + 1 or total(beta) != d * (k + 1):
        raise ValueError(f"beta = {beta} incompatible with (k,d,n) = ({k},{d},{n})")
    columns = monomials_of_weight(beta, d, k + 1)
    col_index = {h: i for i, h in enumerate(columns)}
    ncols = len(columns)

    # relations, discovered column-first; relation id = first-seen order of the
    # relation monomial m, entries (col, 1/v(q)) over the full support
    relations = []  # list of (eps, m, [(col, Fraction)])
    rel_of = {}
    col_rels = [[] for _ in range(ncols)]
    for ci, h in enumerate(columns):
        for q in factor_pairs(h):
            m = monomial_div(h, q)
            ri = rel_of.get(m)
            if ri is None:
                ri = rel_of[m] = len(relations)
                wm = monomial_weight(m) if m else (0,) * (n + 1)
                eps = tuple(b - w for b, w in zip(beta, wm))
                relations.append((eps, m, []))
            relations[ri][2].append((ci, Fraction(1, pair_v(q))))
            col_rels[ci].append(ri)

    # deterministic relation order: by (eps canonical, m canonical)
    order = sorted(
        range(len(relations)),
        key=lambda ri: (tuple(reversed(relations[ri][0])), monomial_key(relations[ri][1])),
    )
    rank_of_rel = {ri: pos for pos, ri in enumerate(order)}

    priority = list(variable_priority or [])
    for m in priority:
        if m not in col_index:
            raise ValueError(f"priority monomial {format_smonomial(m)} not in the weight space")

    expr: list = [None] * ncols  # col -> dict var->Fraction once determined
    undet = [len(rel[2]) for rel in relations]  # undetermined count per relation
    # a column can appear once per relation only (q determined by m and h)
    steps = []
    variables = []
    ready = [rank_of_rel[ri] for ri, cnt in enumerate(undet) if cnt == 1]
    heapq.heapify(ready)
    determined = 0
    var_cursor = 0

    def determine(ci, expression, eps, m, record=True):
        nonlocal determined
        expr[ci] = expression
        determined += 1
        if record:
            steps.append(TraceStep("determine", columns[ci], eps, m, dict(expression)))
        for rj in col_rels[ci]:
            undet[rj] -= 1
            if undet[rj] == 1:
                heapq.heappush(ready, rank_of_rel[rj])

    while determined < ncols:
        progressed = False
        while ready:
            pos = heapq.heappop(ready)
            ri = order[pos]
            if undet[ri] != 1:
                continue
            eps, m, entries = relations[ri]
            target = None
            acc: dict = {}
            coef_target = Fraction(0)
            for ci, v in entries:
                if expr[ci] is None:
                    target = ci
                    coef_target = v
                else:
                    for var, c in expr[ci].items():
                        nc = acc.get(var, 0) + v * c
                        if nc:
                            acc[var] = nc
                        elif var in acc:
                            del acc[var]
            undet[ri] = 0  # relation consumed
            if target is None:
                continue
            expression = {var: -c / coef_target for var, c in acc.items()}
            determine(target, expression, eps, m)
            progressed = True
        if determined == ncols:
            break
        if not progressed and not ready:
            # introduce a variable: priority list first, then canonical order
            ci = None
            while priority:
                cand = col_index[priority.pop(0)]
                if expr[cand] is None:
                    ci = cand
                    break
            if ci is None:
                while var_cursor < ncols and expr[var_cursor] is not None:
                    var_cursor += 1
                ci = var_cursor
            var_id = len(variables)
            variables.append(columns[ci])
            steps.append(TraceStep("new-variable", columns[ci]))
            determine(ci, {var_id: Fraction(1)}, None, None, record=False)

    # residual constraints: every relation, evaluated on the symbolic solution
    residual_rows = []
    for eps, m, entries in relations:
        acc = {}
        for ci, v in entries:
            for var, c in expr[ci].items():
                nc = acc.get(var, 0) + v * c
                if nc:
                    acc[var] = nc
                elif var in acc:
                    del acc[var]
        if acc:
            den = 1
            from math import gcd

            for c in acc.values():
                den = den * c.denominator // gcd(den, c.denominator)
            residual_rows.append({var: int(c * den) for var, c in acc.items()})
    residual_rank = linalg.sparse_rank(residual_rows)
    final_kappa = len(variables) - residual_rank
    solution = {columns[ci]: expr[ci] for ci in range(ncols)}
    return EliminationTrace(
        beta=tuple(beta),
        k=k,
        d=d,
        n=n,
        steps=steps,
        variables=variables,
        residual_rank=residual_rank,
        final_kappa=final_kappa,
        solution=solution,
    )


def check_trace_solution(trace: EliminationTrace) -> bool:
    """Substitute the symbolic solution space into every relation; all must vanish.

    Instantiates each vector of the residual system's kernel as a concrete
    coefficient assignment and re-checks the resulting polynomials through the
    independent kernel test of the prolongation map.
    """
    from .polyring import SPolynomial, factorial_product, psi_is_zero

    nvars = len(trace.variables)
    columns = monomials_of_weight(trace.beta, trace.d, trace.k + 1)
    rel_acc = {}
    for h in columns:
        e_h = trace.solution[h]
        for q in factor_pairs(h):
            m = monomial_div(h, q)
            v = Fraction(1, pair_v(q))
            bucket = rel_acc.setdefault(m, {})
            for var, c in e_h.items():
                nc = bucket.get(var, 0) + v * c
                if nc:
                    bucket[var] = nc
                elif var in bucket:
                    del bucket[var]
    rows = []
    for bucket in rel_acc.values():
        if bucket:
            from math import gcd

            den = 1
            for c in bucket.values():
                den = den * c.denominator // gcd(den, c.denominator)
            rows.append({var: int(c * den) for var, c in bucket.items()})
    if nvars == 0:
        return not rows
    _, kernel = linalg.sparse_kernel(rows, nvars)
    if len(kernel) != trace.final_kappa:
        return False
    for vec in kernel:
        assignment = [vec.get(i, Fraction(0)) for i in range(nvars)]
        terms = {}
        for h, e_h in trace.solution.items():
            c = sum((e_h.get(i, 0) * assignment[i] for i in range(nvars)), Fraction(0))
            if c:
                terms[h] = c / factorial_product(h)
        f = SPolynomial(terms, n=trace.n, d=trace.d)
        if f.is_zero() or not psi_is_zero(f, trace.k):
            return False
    return True


def render_trace(trace: EliminationTrace) -> str:
    """Numbered, human-readable step list mirroring the staged derivation."""
    lines = [
        f"weight {','.join(map(str, trace.beta))}  (k={trace.k}, d={trace.d}, n={trace.n})",
        f"{len(trace.solution)} monomials in the weight space",
    ]
    if not trace.solution:
        lines.append("no monomials")
        return "\n".join(lines)
    for i, step in enumerate(trace.steps, start=1):
        if step.kind == "new-variable":
            lines.append(f"step {i}: add c(f; {format_smonomial(step.monomial)}) as a variable")
        else:
            eps = ",".join(map(str, step.eps)) if step.eps else "-"
            rhs = _format_expression(step.expression, trace.variables)
            lines.append(
                f"step {i}: c(f; {format_smonomial(step.monomial)}) = {rhs}"
                f"   [eps = ({eps}), m = {format_smonomial(step.relation_monomial) if step.relation_monomial else '1'}]"
            )
    lines.append(
        f"variables: {len(trace.variables)}, residual rank: {trace.residual_rank},"
        f" kappa = {trace.final_kappa}"
    )
    return "\n".join(lines)


def _format_expression(expression, variables) -> str:
    if not expression:
        return "0"
    parts = []
    for var, c in sorted(expression.items()):
        name = f"c(f; {format_smonomial(variables[var])})"
        if c == 1:
            parts.append(f"+ {name}")
        elif c == -1:
            parts.append(f"- {name}")
        elif c > 0:
            parts.append(f"+ {c} {name}")
        else:
            parts.append(f"- {-c} {name}")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def trace_to_records(trace: EliminationTrace) -> dict:
    """Machine-readable structured form; round-trips through records_to_trace."""
    return {
        "schema": 1,
        "beta": list(trace.beta),
        "k": trace.k,
        "d": trace.d,
        "n": trace.n,
        "variables": [[[list(a), mu] for a, mu in mono] for mono in trace.variables],
        "residual_rank": trace.residual_rank,
        "final_kappa": trace.final_kappa,
        "steps": [
            {
                "kind": s.kind,
                "monomial": [[list(a), mu] for a, mu in s.monomial],
                "eps": None if s.eps is None else list(s.eps),
                "relation_monomial": None
                if s.relation_monomial is None
                else [[list(a), mu] for a, mu in s.relation_monomial],
                "expression": None
                if s.expression is None
                else {str(v): [c.numerator, c.denominator] for v, c in s.expression.items()},
            }
            for s in trace.steps
        ],
    }


def records_to_trace(payload: dict) -> EliminationTrace:
    def mono(rec):
        return tuple((tuple(a), mu) for a, mu in rec)

    steps = []
    for s in payload["steps"]:
        steps.append(
            TraceStep(
                kind=s["kind"],
                monomial=mono(s["monomial"]),
                eps=None if s["eps"] is None else tuple(s["eps"]),
                relation_monomial=None
                if s["relation_monomial"] is None
                else mono(s["relation_monomial"]),
                expression=None
                if s["expression"] is None
                else {int(v): Fraction(*c) for v, c in s["expression"].items()},
            )
        )
    return EliminationTrace(
        beta=tuple(payload["beta"]),
        k=payload["k"],
        d=payload["d"],
        n=payload["n"],
        steps=steps,
        variables=[mono(v) for v in payload["variables"]],
        residual_rank=payload["residual_rank"],
        final_kappa=payload["final_kappa"],
    )
