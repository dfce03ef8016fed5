import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cofix.arith import GF, QQ
from cofix.epoly import (EIdeal, EPolynomial, buchberger, certify_contains_p, e, e_monomials,
                         ideals_equal_mod_p, is_regular_sequence, krull_dimension, mod_p, normal_form,
                         weighted_degree)
from cofix.linalg import rank_mod_p


def test_render():
    n = 6
    assert (e(1, n) * e(5, n) - e(6, n)).render() == "e1e5-e6"
    assert (e(1, 2) ** 2 - 2 * e(2, 2)).render() == "e1^2-2e2"
    f = mod_p(e(1, 3) * e(2, 3) - e(3, 3), 2)
    assert f.render() == "e1e2+e3"


def test_weighted_degree_and_order():
    assert weighted_degree((2, 0, 1)) == 5
    mons = e_monomials(4, 4)
    assert len(mons) == 5 and mons[0] == (4, 0, 0, 0)
    f = e(1, 3) ** 3 + e(3, 3)
    assert f.leading_monomial() == (3, 0, 0) and f.is_homogeneous()


def test_substitute_and_json():
    f = e(1, 3) * e(2, 3) - 3 * e(3, 3)
    g = f.substitute({1: e(1, 4), 2: e(2, 4), 3: e(3, 4)}, 4)
    assert g.render() == "e1e2-3e3"
    assert EPolynomial.from_json(f.to_json(), 3) == f
    I = EIdeal(3, QQ, (3, f), local_prime=3)
    assert EIdeal.from_json(I.to_json()).generators == I.generators


def test_local_prime_check():
    with pytest.raises(ValueError):
        EIdeal(2, QQ, (EPolynomial.constant(Fraction(1, 2), 2),), 2)


def macaulay_dimension(gens, d, p):
    """Independent oracle: dim of I_d as the span of monomial multiples."""
    mons = e_monomials(d, gens[0].n)
    idx = {m: i for i, m in enumerate(mons)}
    rows = []
    for g in gens:
        s = d - g.degree()
        if s < 0:
            continue
        for m in e_monomials(s, g.n):
            row = [0] * len(mons)
            for a, c in g.terms.items():
                row[idx[tuple(x + y for x, y in zip(a, m))]] = c
            rows.append(row)
    return rank_mod_p(np.array(rows, dtype=np.int64), p) if rows else 0


def hom_poly(draw, n, d, p):
    mons = e_monomials(d, n)
    coeffs = draw(st.lists(st.integers(0, p - 1), min_size=len(mons), max_size=len(mons)))
    return EPolynomial(GF(p), n, dict(zip(mons, coeffs)))


@st.composite
def ideals(draw):
    p = draw(st.sampled_from([2, 3, 5]))
    n = draw(st.integers(2, 3))
    k = draw(st.integers(1, 3))
    gens = []
    for _ in range(k):
        gens.append(hom_poly(draw, n, draw(st.integers(1, 4)), p))
    gens = [g for g in gens if g]
    if not gens:
        gens = [e(1, n, GF(p))]
    return p, EIdeal(n, GF(p), tuple(gens))


@given(ideals())
def test_gb_hilbert_function_matches_macaulay(data):
    p, I = data
    G = buchberger(I)
    for d in range(0, 8):
        assert G.component_dimension(d) == macaulay_dimension(list(I.generators), d, p)
    for g in I.generators:
        assert G.contains(g)


@given(ideals())
def test_gb_reduced(data):
    _, I = data
    G = buchberger(I)
    lts = G.leading_monomials()
    for g in G.basis:
        assert g.leading_coefficient() == 1
        for a in g.terms:
            assert not any(lt != g.leading_monomial() and all(x <= y for x, y in zip(lt, a)) for lt in lts)


def gb_shuffle_check(I, rounds=20, seed=0):
    rng = random.Random(seed)
    base = buchberger(I)
    gens = list(I.generators)
    for _ in range(rounds):
        rng.shuffle(gens)
        assert buchberger(EIdeal(I.n, I.ring, tuple(gens))) == base


def test_gb_uniqueness_under_shuffle():
    F = GF(3)
    gens = (e(1, 4, F) * e(3, 4, F) - e(4, 4, F), e(2, 4, F), e(1, 4, F) ** 2 + e(2, 4, F), e(3, 4, F) * e(1, 4, F))
    gb_shuffle_check(EIdeal(4, F, gens))


def test_normal_form_and_dimension():
    F = GF(2)
    I = EIdeal(3, F, (e(1, 3, F) * e(2, 3, F) + e(3, 3, F),))
    G = buchberger(I)
    assert normal_form(e(1, 3, F) * e(2, 3, F), G) == e(3, 3, F)
    assert krull_dimension(I) == 2
    assert is_regular_sequence([e(1, 3, F), e(2, 3, F)])
    assert not is_regular_sequence([e(1, 3, F) * e(2, 3, F), e(1, 3, F) * e(3, 3, F)])
    assert not is_regular_sequence([e(1, 3, F), e(1, 3, F) ** 2])


def test_unit_ideal():
    F = GF(5)
    G = buchberger(EIdeal(2, F, (e(1, 2, F), EPolynomial.constant(1, 2, F))))
    assert G.is_unit_ideal()


def test_local_ideal_equality():
    A = EIdeal(3, QQ, (3, e(1, 3) * e(2, 3) + 3 * e(3, 3)), 3)
    B = EIdeal(3, QQ, (6, e(1, 3) * e(2, 3)), 3)
    assert certify_contains_p(B, 3)["multiplier"] == "1/2"
    assert ideals_equal_mod_p(A, B, 3)
    C = EIdeal(3, QQ, (9, e(1, 3) * e(2, 3)), 3)
    with pytest.raises(ValueError):
        ideals_equal_mod_p(A, C, 3)
