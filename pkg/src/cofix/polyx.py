"""Polynomials in x_1..x_n, permutation actions, the transfer map and
conversion between the monomial-symmetric and elementary bases."""
from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .arith import GF, QQ, ring_from_tag
from .combin import (GROUP_ORDER_LIMIT, PermGroupSpec, adjacent_transpositions, conjugate,
                     is_partition, orbit, sort_exponents, stabilizer_order)
from .epoly import EPolynomial
from .polybase import SparsePolynomial


class XPolynomial(SparsePolynomial):
    """Element of k[x_1..x_n]."""

    __slots__ = ()

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def is_symmetric(self) -> bool:
        return all(act(s, self) == self for s in adjacent_transpositions(self.n))

    def render(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for alpha in sorted(self.terms, key=lambda a: (sum(a), a), reverse=True):
            c = self.terms[alpha]
            if isinstance(self.ring, GF):
                c = self.ring.symmetric(c)
            mono = "".join(f"x{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(alpha) if a)
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = f"{c}{mono}" if not (isinstance(c, Fraction) and c.denominator != 1) else f"({c}){mono}"
            out.append(sign + body)
        s = "".join(out)
        return s[1:] if s[0] == "+" else s

    def __repr__(self):
        return f"XPolynomial({self.render()}; n={self.n}, {self.ring})"


def act(sigma, f: XPolynomial) -> XPolynomial:
    """Variable permutation x_i -> x_sigma(i) (0-based image tuple)."""
    if len(sigma) != f.n:
        raise ValueError("permutation degree does not match variable count")
    out = {}
    for alpha, c in f.terms.items():
        beta = [0] * f.n
        for i, a in enumerate(alpha):
            beta[sigma[i]] = a
        out[tuple(beta)] = c
    return XPolynomial._raw(f.ring, f.n, out)


def subgroup_transfer(H: PermGroupSpec, f: XPolynomial, limit: int = GROUP_ORDER_LIMIT) -> XPolynomial:
    """Sum of g(f) over every element g of H."""
    if H.degree != f.n:
        raise ValueError("group degree does not match variable count")
    total = XPolynomial.zero(f.n, f.ring)
    for g in H.elements(limit):
        total = total + act(g, f)
    return total


def elementary_x(k: int, n: int, ring=QQ) -> XPolynomial:
    """e_k(x_1..x_n) written out in x-variables."""
    terms = {}
    for S in itertools.combinations(range(n), k):
        alpha = [0] * n
        for i in S:
            alpha[i] = 1
        terms[tuple(alpha)] = 1
    return XPolynomial(ring, n, terms)


class SymPolynomial:
    """Symmetric polynomial stored in the monomial-symmetric basis."""

    __slots__ = ("ring", "n", "coeffs")

    def __init__(self, ring, n: int, coeffs=None):
        self.ring = ring_from_tag(ring)
        self.n = n
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = tuple(lam)
            if len(lam) != n or not is_partition(lam) or any(x < 0 for x in lam):
                raise ValueError(f"{lam} is not a partition of length {n}")
            c = self.ring(c)
            if c:
                clean[lam] = self.ring.normalize(clean.get(lam, 0) + c)
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def m(cls, lam, ring=QQ, coeff=1) -> "SymPolynomial":
        return cls(ring, len(lam), {tuple(lam): coeff})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, SymPolynomial):
            return NotImplemented
        return self.ring == other.ring and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.n, frozenset(self.coeffs.items())))

    def coefficient(self, lam):
        return self.coeffs.get(tuple(lam), self.ring(0))

    def _check(self, other):
        if not isinstance(other, SymPolynomial) or other.ring != self.ring or other.n != self.n:
            raise ValueError("symmetric polynomials live in different rings")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymPolynomial(self.ring, self.n, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymPolynomial":
        c = self.ring(c)
        return SymPolynomial(self.ring, self.n, {k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out = Counter()
        for lam, a in self.coeffs.items():
            for mu, b in other.coeffs.items():
                for nu, k in _m_product(lam, mu).items():
                    out[nu] += a * b * k
        return SymPolynomial(self.ring, self.n, dict(out))

    __rmul__ = scale

    def to_x(self) -> XPolynomial:
        terms = {}
        for lam, c in self.coeffs.items():
            for alpha in orbit(lam):
                terms[alpha] = c
        return XPolynomial(self.ring, self.n, terms)

    def to_json(self) -> list:
        return [{"partition": list(lam), "coefficient": str(self.coeffs[lam])}
                for lam in sorted(self.coeffs, key=lambda l: (sum(l), l), reverse=True)]

    @classmethod
    def from_json(cls, data, n: int, ring=QQ) -> "SymPolynomial":
        return cls(ring, n, {tuple(d["partition"]): Fraction(d["coefficient"]) for d in data})

    def __repr__(self):
        body = " + ".join(f"{c}*m{lam}" for lam, c in self.coeffs.items()) or "0"
        return f"SymPolynomial({body}; n={self.n}, {self.ring})"


@lru_cache(maxsize=None)
def _m_product(lam: tuple, mu: tuple) -> dict:
    """Integer structure constants of m_lam * m_mu.  Fixing the mu-term at
    mu itself, the coefficient of m_nu counts rearrangements alpha of lam
    with sort(alpha + mu) = nu, rescaled by |orbit(mu)| / |orbit(nu)|."""
    counts = Counter(sort_exponents(a + b for a, b in zip(alpha, mu)) for alpha in orbit(lam))
    n = len(lam)
    size_mu = math.factorial(n) // stabilizer_order(mu)
    out = {}
    for nu, c in counts.items():
        size_nu = math.factorial(n) // stabilizer_order(nu)
        out[nu] = c * size_mu // size_nu
    return out


def transfer_monomial(lam, ring=QQ) -> SymPolynomial:
    """Tr^{S_n}(x^lam) = a_lam * m_lam with a_lam the stabilizer order."""
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not weakly decreasing")
    return SymPolynomial(ring, len(lam), {lam: stabilizer_order(lam)})


def expand_m_basis(f: XPolynomial) -> SymPolynomial:
    """Coefficients of f on the m-basis; f must be symmetric."""
    if not f.is_symmetric():
        raise ValueError("polynomial is not symmetric")
    return SymPolynomial(f.ring, f.n, {a: c for a, c in f.terms.items() if is_partition(a)})


@lru_cache(maxsize=None)
def _e_times_m(k: int, mu: tuple) -> dict:
    """Integer m-expansion of e_k * m_mu."""
    n = len(mu)
    out = {}
    for T in itertools.combinations(range(n), k):
        nu = list(mu)
        for i in T:
            nu[i] += 1
        nu = sort_exponents(nu)
        if nu in out:
            continue
        # coefficient: subsets S of size k with nu - 1_S a rearrangement of mu
        c = 0
        for S in itertools.combinations(range(n), k):
            rest = list(nu)
            for i in S:
                rest[i] -= 1
            if min(rest) >= 0 and sort_exponents(rest) == mu:
                c += 1
        out[nu] = c
    return out


@lru_cache(maxsize=None)
def e_monomial_m_expansion(alpha: tuple) -> dict:
    """Integer m-expansion of prod e_i^alpha_i in len(alpha) variables."""
    n = len(alpha)
    cur = {(0,) * n: 1}
    for i, a in enumerate(alpha):
        for _ in range(a):
            nxt = Counter()
            for mu, c in cur.items():
                for nu, k in _e_times_m(i + 1, mu).items():
                    nxt[nu] += c * k
            cur = dict(nxt)
    return cur


def e_to_sym(g: EPolynomial) -> SymPolynomial:
    """m-expansion of g(e_1(x),..,e_n(x))."""
    out = Counter()
    for alpha, c in g.terms.items():
        for nu, k in e_monomial_m_expansion(alpha).items():
            out[nu] += c * k
    return SymPolynomial(g.ring, g.n, dict(out))


def evaluate(g: EPolynomial) -> XPolynomial:
    """Substitute the elementary symmetric polynomials into g and expand."""
    es = [elementary_x(k, g.n, g.ring) for k in range(1, g.n + 1)]
    out = XPolynomial.zero(g.n, g.ring)
    for alpha, c in g.terms.items():
        term = XPolynomial.constant(c, g.n, g.ring)
        for k, a in enumerate(alpha):
            if a:
                term = term * es[k] ** a
        out = out + term
    return out


def to_elementary(f: SymPolynomial) -> EPolynomial:
    """The unique g with g(e_1..e_n) = f, by peeling off the dominance-maximal
    m-term with the matching e-monomial."""
    n, ring = f.n, f.ring
    rem = dict(f.coeffs)
    out = {}
    while rem:
        lam = max(rem)  # lex-largest, hence dominance-maximal among the support
        c = rem[lam]
        alpha = [0] * n
        for part in conjugate(lam):
            alpha[part - 1] += 1
        alpha = tuple(alpha)
        out[alpha] = c
        for nu, k in e_monomial_m_expansion(alpha).items():
            v = ring.normalize(rem.get(nu, 0) - c * k)
            if v:
                rem[nu] = v
            else:
                rem.pop(nu, None)
    return EPolynomial(ring, n, out)
