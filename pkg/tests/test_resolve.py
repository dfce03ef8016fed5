import pytest
from hypothesis import given, settings, strategies as st

from cofix.arith import GF
from cofix.cofixed import CofixedModule, koszul_betti
from cofix.epoly import EIdeal, EPolynomial, buchberger, e, e_monomials
from cofix.resolve import (BettiTable, FreeModulePresentation, betti_multisets, cofixed_module_betti,
                           cofixed_resolution, koszul_table, minimal_resolution, multisets_equal_mod,
                           quotient_betti)
from cofix.transfer_ideal import candidate_Jtilde


def poly_mul(a, b, top):
    out = [0] * (top + 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j <= top:
                out[i + j] += x * y
    return out


def hilbert_numerator(ideal, top):
    """Coefficients of HS(R/I) * prod (1 - t^i) up to degree ``top``, from the ideal GB."""
    G = buchberger(ideal)
    hs = [len(G.standard_monomials(d)) for d in range(top + 1)]
    for i in range(1, ideal.n + 1):
        factor = [0] * (i + 1)
        factor[0], factor[i] = 1, -1
        hs = poly_mul(hs, factor, top)
    return hs


@st.composite
def hom_ideals(draw):
    p = draw(st.sampled_from([2, 3]))
    n = draw(st.integers(2, 3))
    F = GF(p)
    gens = []
    for _ in range(draw(st.integers(1, 3))):
        d = draw(st.integers(1, 4))
        mons = e_monomials(d, n)
        cs = draw(st.lists(st.integers(0, p - 1), min_size=len(mons), max_size=len(mons)))
        g = EPolynomial(F, n, dict(zip(mons, cs)))
        if g:
            gens.append(g)
    if not gens:
        gens = [e(n, n, F)]
    return EIdeal(n, F, tuple(gens))


@settings(max_examples=40)
@given(hom_ideals())
def test_quotient_resolution_matches_hilbert_series(I):
    res, T = minimal_resolution(FreeModulePresentation.quotient_ring(I))
    assert res.is_complex() and res.is_minimal() and not T.partial
    top = max(j for _, j in T.entries) + 2
    euler = T.euler_polynomial()
    assert [euler.get(d, 0) for d in range(top + 1)] == hilbert_numerator(I, top)
    assert T.length() <= I.n


def test_complete_intersections():
    for p, n in [(2, 3), (3, 4), (3, 5), (5, 7), (5, 9)]:
        Jt = candidate_Jtilde(n, p)
        assert quotient_betti(Jt) == koszul_table(Jt.degrees())


@pytest.mark.parametrize("n,p", [(2, 2), (3, 2), (4, 2), (3, 3), (4, 3), (5, 3)])
def test_engine_matches_koszul_oracle(n, p):
    T = cofixed_resolution(n, p).betti()
    top = max(j for _, j in T.entries) + 1
    assert T.entries == koszul_betti(CofixedModule(n, p), top)


@pytest.mark.parametrize("n,p", [(2, 2), (3, 2), (3, 3), (4, 3), (5, 3), (5, 5), (6, 5), (7, 5)])
def test_splitting_route_matches_direct(n, p):
    assert cofixed_module_betti(n, p, method="splitting") == cofixed_module_betti(n, p, method="direct")


@pytest.mark.parametrize("n,p", [(1, 2), (2, 3), (4, 5)])
def test_nonmodular_free(n, p):
    T = cofixed_module_betti(n, p, method="direct")
    assert T.entries == {(0, 0): 1}
    assert cofixed_module_betti(n, p).entries == {(0, 0): 1}


@pytest.mark.parametrize("n,p", [(4, 2), (5, 2), (6, 2), (6, 3)])
def test_cofixed_resolution_sanity(n, p):
    res = cofixed_resolution(n, p)
    T = res.betti()
    assert res.is_complex() and res.is_minimal()
    assert T.euler_polynomial() == {0: 1}
    assert T.length() <= n


def test_homological_cap():
    T = cofixed_module_betti(6, 2, max_homological=1)
    assert T.partial and T.length() == 1
    with pytest.raises(ValueError):
        betti_multisets(T)


def test_pruning_cancels_units():
    F = GF(3)
    one = EPolynomial.constant(1, 2, F)
    P = FreeModulePresentation(2, 3, (0, 1), [(one, EPolynomial.zero(2, F)), (e(2, 2, F), e(1, 2, F))])
    Q = P.pruned()
    assert Q.row_degrees == (1,) and len(Q.columns) == 1
    assert Q.columns[0][0] == e(1, 2, F)


def test_betti_table_json_and_render():
    T = BettiTable({(0, 0): 1, (1, 3): 1, (0, 3): 1, (1, 6): 1}, "M")
    assert BettiTable.from_json(T.to_json()) == T
    assert T.render_text() == ("       0 1 \ntotal: 2 2 \n    0: 1 . \n    1: . . \n    2: . 1 \n"
                             "    3: 1 . \n    4: . . \n    5: . 1 \n")
    assert BettiTable({}).render_text() == "total: 0\n"


def test_multisets_mod():
    assert multisets_equal_mod([0, 3, 5], [2, 1, 5], 2)
    assert not multisets_equal_mod([0, 3], [0, 5], 4)
    with pytest.raises(ValueError):
        multisets_equal_mod([1], [1], 0)


# first syzygy degrees computed independently from Koszul homology and frozen
KOSZUL_A1 = {
    (7, 3): [2, 4, 5, 6, 7, 7, 9, 9, 9, 10, 11, 12, 12, 14, 14, 16, 17, 19],
    (7, 2): [3, 5, 6, 7, 8, 9, 9, 10, 10, 11, 12, 12, 13, 14, 14, 16, 17, 19, 21],
}


@pytest.mark.parametrize("n,p", sorted(KOSZUL_A1))
def test_seven_variables_first_syzygies(n, p):
    T = cofixed_module_betti(n, p, method="direct")
    assert betti_multisets(T)[1] == KOSZUL_A1[(n, p)]
    assert T.entries == koszul_betti(CofixedModule(n, p), 22)


def test_documented_examples():
    assert betti_multisets(cofixed_module_betti(6, 2))[0] == [0, 1, 3, 5, 6, 6, 7, 8, 10, 15]
    assert betti_multisets(cofixed_module_betti(7, 3))[4] == [18]
    Jt = candidate_Jtilde(6, 5)
    assert Jt.degrees() == [6, 2, 3, 4]
    T = cofixed_module_betti(6, 5)
    quot = koszul_table([6, 2, 3, 4])
    ideal = quot.homological_shift(1)
    ideal.entries.pop((-1, 0), None)
    assert T.entries == quot.direct_sum(ideal).entries
