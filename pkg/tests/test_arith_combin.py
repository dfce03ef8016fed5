import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cofix.arith import GF, QQ, PrimeField, check_prime, is_p_local, is_prime, reduce_mod_p, valuation_p
from cofix.combin import (PermGroupSpec, artin_basis, conjugate, dominance_leq, enumerate_partitions,
                          factorial_valuation, is_special, orbit, orbit_size, partition_count,
                          perm_from_cycles, special_partitions, stabilizer_order, sylow_generators,
                          symmetric_group)

PRIMES = [2, 3, 5, 7, 11, 13]


def test_is_prime_small():
    assert [k for k in range(30) if is_prime(k)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    with pytest.raises(ValueError):
        check_prime(4)


@given(st.integers(-10**6, 10**6).filter(bool), st.integers(1, 10**6), st.sampled_from(PRIMES))
def test_valuation_multiplicative(a, b, p):
    x = Fraction(a, b)
    assert valuation_p(x * p, p) == valuation_p(x, p) + 1
    assert is_p_local(x, p) == (b % p != 0 or valuation_p(x, p) >= 0)


@given(st.integers(-1000, 1000), st.integers(1, 1000).filter(lambda b: b % 7), st.integers(-1000, 1000))
def test_reduce_mod_p_is_ring_map(a, b, c):
    x, y = Fraction(a, b), Fraction(c)
    F = GF(7)
    assert reduce_mod_p(x + y, 7) == F.normalize(reduce_mod_p(x, 7) + reduce_mod_p(y, 7))
    assert reduce_mod_p(x * y, 7) == F.normalize(reduce_mod_p(x, 7) * reduce_mod_p(y, 7))


def test_reduce_mod_p_rejects_nonlocal():
    with pytest.raises(ValueError):
        reduce_mod_p(Fraction(1, 3), 3)


@given(st.sampled_from(PRIMES), st.integers(1, 10**4))
def test_field_inverse(p, a):
    if a % p == 0:
        return
    F = GF(p)
    assert F.normalize(a * F.inv(F(a))) == 1
    assert (PrimeField(a, p) * PrimeField(a, p).inverse()).value == 1
    assert -p / 2 < F.symmetric(F(a)) <= p / 2


def test_rational_field():
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)


# -- partitions ------------------------------------------------------------------

@pytest.mark.parametrize("d,n,count", [(0, 3, 1), (4, 2, 3), (6, 3, 7), (8, 8, 22), (10, 4, 23)])
def test_partition_counts(d, n, count):
    # classical values p(d, <= n parts)
    assert partition_count(d, n) == count


@given(st.integers(0, 12), st.integers(1, 6))
def test_partitions_brute_force(d, n):
    brute = {tuple(sorted(c, reverse=True)) for c in itertools.product(range(d + 1), repeat=n)
             if sum(c) == d}
    got = enumerate_partitions(d, n)
    assert set(got) == brute and len(got) == len(brute)
    assert got == sorted(got, reverse=True)


@given(st.integers(1, 10), st.integers(1, 5))
def test_dominance_first_is_maximal(d, n):
    parts = enumerate_partitions(d, n)
    for i, lam in enumerate(parts):
        for mu in parts[:i]:
            assert not dominance_leq(mu, lam) or mu == lam


@given(st.integers(0, 9), st.integers(1, 5))
def test_stabilizer_orbit(d, n):
    for lam in enumerate_partitions(d, n):
        assert orbit_size(lam) == len(orbit(lam))
        assert orbit_size(lam) * stabilizer_order(lam) == math.factorial(n)


@given(st.integers(1, 10), st.integers(1, 6))
def test_conjugate_involution(d, n):
    for lam in enumerate_partitions(d, n):
        c = conjugate(lam)
        assert sum(c) == d
        back = conjugate(c)
        assert back + (0,) * (n - len(back)) == lam


def test_special_partitions():
    assert special_partitions(2) == [(0, 0), (1, 0)]
    assert special_partitions(3) == [(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 1, 0)]
    for n in range(1, 7):
        sp = special_partitions(n)
        assert len(sp) == 2 ** (n - 1)
        brute = [lam for d in range(n * (n - 1) // 2 + 1) for lam in enumerate_partitions(d, n)
                 if is_special(lam)]
        assert set(sp) == set(brute)


def test_artin_basis_size():
    for n in range(1, 6):
        assert len(artin_basis(n)) == math.factorial(n)


def test_groups():
    assert symmetric_group(4).order() == 24
    G = sylow_generators(3, 2)
    assert G.order() == 2 and G.fixed_points() == [2]
    assert sylow_generators(7, 3).order() == 9
    assert sylow_generators(6, 3).embed(8).fixed_points() == [6, 7]
    with pytest.raises(ValueError):
        sylow_generators(9, 3)
    assert perm_from_cycles(3, [(1, 2, 3)]) == (1, 2, 0)
    with pytest.raises(ValueError):
        PermGroupSpec(3, [(0, 0, 1)])


@given(st.integers(1, 40), st.sampled_from(PRIMES))
def test_legendre(n, p):
    f, v = math.factorial(n), 0
    while f % p == 0:
        f //= p
        v += 1
    assert factorial_valuation(n, p) == v
