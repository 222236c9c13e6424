"""Averaging operators and sign splittings."""

import random
from fractions import Fraction
from itertools import product

import pytest

from secant_ideals.multiindex import (
    all_perms,
    exponents,
    identity_perm,
    monomial,
    monomials_of_weight,
    transposition,
)
from secant_ideals.polyring import SPolynomial
from secant_ideals.prolong import kappa
from secant_ideals.symmetry import (
    SplitSpec,
    average,
    component_kappa,
    natural_transpositions,
    parse_split_spec,
    split_basis,
    split_kappa,
)


def test_split_spec_validation():
    with pytest.raises(ValueError):
        SplitSpec(((0, 0),), (1,))
    with pytest.raises(ValueError):
        SplitSpec(((0, 1), (1, 2)), (1, 1))
    with pytest.raises(ValueError):
        SplitSpec(((0, 1),), (2,))
    spec = SplitSpec(((0, 1),), (-1,))
    with pytest.raises(ValueError):
        spec.validate_for((1, 2, 3))
    spec.validate_for((2, 2, 3))


def test_parse_split_spec():
    spec = parse_split_spec("(01)-,(23)+")
    assert spec.transpositions == ((0, 1), (2, 3))
    assert spec.signs == (-1, 1)
    assert spec.pattern() == "-+"
    assert spec.text() == "(01)-,(23)+"
    with pytest.raises(ValueError):
        parse_split_spec("01-")


def test_average_idempotent_and_identity():
    rng = random.Random(31)
    alphas = exponents(3, 3)
    group = [identity_perm(3), transposition(3, 1, 2)]
    assert natural_transpositions((9, 9, 9, 9)) == [(0, 1), (2, 3)]
    for _ in range(20):
        f = SPolynomial(
            {monomial([(rng.choice(alphas), 1), (rng.choice(alphas), 1)]): rng.randint(-3, 3)}
        )
        assert average([identity_perm(3)], f) == f
        lam = average(group, f)
        assert average(group, lam) == lam


def test_average_fixes_F():
    from secant_ideals.quintics import make_F

    f = make_F()
    group = [identity_perm(3), transposition(3, 1, 2)]
    assert average(group, f) == f


def test_split_basis_direct_sum_dimension():
    beta = (4, 4, 4)  # d=3, e=4 for k=3, n=2
    plus = split_basis(beta, 3, 4, SplitSpec(((0, 1),), (1,)))
    minus = split_basis(beta, 3, 4, SplitSpec(((0, 1),), (-1,)))
    assert len(plus) + len(minus) == len(monomials_of_weight(beta, 3, 4))


def test_split_basis_fixed_monomial_only_plus():
    beta = (2, 2, 2)
    spec_p = SplitSpec(((0, 1),), (1,))
    spec_m = SplitSpec(((0, 1),), (-1,))
    tau = transposition(2, 0, 1)
    from secant_ideals.multiindex import apply_perm

    plus = split_basis(beta, 3, 2, spec_p)
    minus = split_basis(beta, 3, 2, spec_m)
    fixed = [m for m in monomials_of_weight(beta, 3, 2) if apply_perm(tau, m) == m]
    plus_supports = {mm for f in plus for mm in f.terms}
    minus_supports = {mm for f in minus for mm in f.terms}
    for m in fixed:
        assert m in plus_supports
        assert m not in minus_supports


def test_split_basis_vectors_are_eigenvectors():
    beta = (4, 4, 4)
    for sign in (1, -1):
        spec = SplitSpec(((0, 1),), (sign,))
        tau = transposition(2, 0, 1)
        for f in split_basis(beta, 3, 4, spec):
            assert f.apply_perm(tau) == f.scale(sign)


def test_split_kappa_sums_to_kappa_844():
    parts = split_kappa((8, 4, 4), 3, 4, 2)
    assert parts == {"+": 2, "-": 0}
    assert sum(parts.values()) == kappa((8, 4, 4), 3, 4, 2, use_cache=False).kappa


def test_split_kappa_two_transpositions():
    beta = (5, 5, 4, 4)
    parts = split_kappa(beta, 5, 3, 3)
    full = kappa(beta, 5, 3, 3, use_cache=False).kappa
    assert sum(parts.values()) == full
    assert set(parts) == {"++", "+-", "-+", "--"}


def test_split_kappa_three_transpositions():
    beta = (1, 1, 1, 1, 1, 1)
    parts = split_kappa(beta, 1, 3, 5)
    full = kappa(beta, 1, 3, 5, use_cache=False).kappa
    assert sum(parts.values()) == full == 9


def test_split_kappa_requires_symmetry():
    with pytest.raises(ValueError):
        split_kappa((8, 5, 3), 3, 4, 2)


def test_component_kappa_symmetric_counterparts():
    # swapping the two transposition signs is conjugation by an ambient swap
    beta = (5, 5, 4, 4)
    pm = component_kappa(beta, 5, 3, 3, SplitSpec(((0, 1), (2, 3)), (1, -1)))
    mp = component_kappa(beta, 5, 3, 3, SplitSpec(((0, 1), (2, 3)), (-1, 1)))
    assert pm == mp


def test_random_split_additivity():
    rng = random.Random(77)
    cases = 0
    while cases < 10:
        k = rng.choice([1, 2])
        d = rng.choice([2, 3])
        n = rng.choice([2, 3])
        total = d * (k + 1)
        beta = [0] * (n + 1)
        for _ in range(total):
            beta[rng.randrange(n + 1)] += 1
        beta = tuple(sorted(beta, reverse=True))
        pairs = natural_transpositions(beta)
        if not pairs:
            continue
        cases += 1
        parts = split_kappa(beta, k, d, n, transpositions=pairs[:1])
        assert sum(parts.values()) == kappa(beta, k, d, n, use_cache=False).kappa
