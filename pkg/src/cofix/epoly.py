"""The weighted polynomial ring k[e_1..e_n] with deg(e_i) = i.

Term order everywhere: weighted degree, ties broken lexicographically with
e_1 > e_2 > ... > e_n.  Groebner bases are computed over prime fields only;
ideals over Z_(p) are compared through their images mod p, which is sound
once both ideals are certified to contain p.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import GF, QQ, RationalField, is_p_local, reduce_mod_p, ring_from_tag, valuation_p
from .polybase import MonomialPacker, SparsePolynomial

ORDER = "wdeg-lex(weights=1..n, e1>e2>...>en)"


def weighted_degree(alpha) -> int:
    return sum((i + 1) * a for i, a in enumerate(alpha))


def _order_key(alpha):
    return (weighted_degree(alpha), tuple(alpha))


@lru_cache(maxsize=None)
def _e_monomials(d: int, n: int, top: int) -> tuple:
    # exponent vectors of weighted degree d using e_1..e_top
    if d == 0:
        return ((0,) * n,)
    if top == 0:
        return ()
    out = []
    for k in range(d // top, -1, -1):
        for rest in _e_monomials(d - k * top, n, top - 1):
            alpha = list(rest)
            alpha[top - 1] = k
            out.append(tuple(alpha))
    return tuple(out)


def e_monomials(d: int, n: int) -> list:
    """All e-monomials of weighted degree ``d``, in decreasing term order."""
    if d < 0:
        return []
    return sorted(_e_monomials(d, n, n), key=_order_key, reverse=True)


def _render_monomial(alpha) -> str:
    parts = []
    for i, a in enumerate(alpha):
        if a == 1:
            parts.append(f"e{i + 1}")
        elif a > 1:
            parts.append(f"e{i + 1}^{a}")
    return "".join(parts)


class EPolynomial(SparsePolynomial):
    """Polynomial in e_1..e_n with exact coefficients."""

    __slots__ = ()

    @classmethod
    def e(cls, i: int, n: int, ring=QQ) -> "EPolynomial":
        return cls.variable(i, n, ring)

    def monomials_desc(self) -> list:
        return sorted(self.terms, key=_order_key, reverse=True)

    def leading_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=_order_key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def degree(self) -> int:
        return max((weighted_degree(m) for m in self.terms), default=-1)

    def degrees(self) -> set:
        return {weighted_degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, d: int) -> "EPolynomial":
        return EPolynomial._raw(self.ring, self.n,
                                {m: c for m, c in self.terms.items() if weighted_degree(m) == d})

    def monic(self) -> "EPolynomial":
        return self.scale(self.ring.inv(self.leading_coefficient()))

    def substitute(self, images: dict, target_n: int) -> "EPolynomial":
        """Ring map sending e_i to ``images[i]`` (default: e_i itself, which
        must then exist in the target ring)."""
        ring = self.ring
        gens = {}
        for i in range(1, self.n + 1):
            if i in images:
                gens[i] = images[i]
            else:
                if i > target_n:
                    raise ValueError(f"e{i} has no default image in {target_n} variables")
                gens[i] = EPolynomial.e(i, target_n, ring)
        out = EPolynomial.zero(target_n, ring)
        for alpha, c in self.terms.items():
            term = EPolynomial.constant(c, target_n, ring)
            for i, a in enumerate(alpha):
                if a:
                    term = term * gens[i + 1] ** a
            out = out + term
        return out

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for alpha in self.monomials_desc():
            c = self.terms[alpha]
            if isinstance(self.ring, GF):
                c = self.ring.symmetric(c)
            neg = c < 0
            c = abs(c)
            mono = _render_monomial(alpha)
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            elif isinstance(c, Fraction) and c.denominator != 1:
                body = f"({c}){mono}"
            else:
                body = f"{c}{mono}"
            pieces.append(("-" if neg else "+") + body)
        text = "".join(pieces)
        return text[1:] if text.startswith("+") else text

    def __repr__(self):
        return f"EPolynomial({self.render()}; n={self.n}, {self.ring})"

    __str__ = render

    def to_json(self) -> list:
        return [[list(m), str(self.terms[m])] for m in self.monomials_desc()]

    @classmethod
    def from_json(cls, data, n: int, ring=QQ) -> "EPolynomial":
        ring = ring_from_tag(ring)
        return cls(ring, n, {tuple(m): Fraction(c) for m, c in data})


def e(i: int, n: int, ring=QQ) -> EPolynomial:
    return EPolynomial.e(i, n, ring)


def mod_p(f: EPolynomial, p: int) -> EPolynomial:
    """Image of a p-local rational polynomial in F_p[e]."""
    if isinstance(f.ring, GF):
        if f.ring.p != p:
            raise ValueError("polynomial is over a different prime field")
        return f
    return EPolynomial(GF(p), f.n, {m: reduce_mod_p(c, p) for m, c in f.terms.items()})


@dataclass
class EIdeal:
    """An ideal of k[e_1..e_n] given by generators.

    ``local_prime`` tags a rational ideal as living in Z_(p)[e]; all
    generator coefficients are then required to be p-local.
    """

    n: int
    ring: object
    generators: tuple
    local_prime: int | None = None

    def __post_init__(self):
        self.ring = ring_from_tag(self.ring)
        gens = []
        for g in self.generators:
            if isinstance(g, (int, Fraction)):
                g = EPolynomial.constant(g, self.n, self.ring)
            if g.n != self.n or g.ring != self.ring:
                raise ValueError(f"generator {g!r} is not in the ring of this ideal")
            if g:
                gens.append(g)
        self.generators = tuple(gens)
        if self.local_prime is not None:
            if not isinstance(self.ring, RationalField):
                raise ValueError("only rational ideals carry a Z_(p) tag")
            for g in self.generators:
                for c in g.terms.values():
                    if not is_p_local(c, self.local_prime):
                        raise ValueError(f"coefficient {c} of {g} is not {self.local_prime}-local")

    def mod_p(self, p: int | None = None) -> "EIdeal":
        p = p if p is not None else self.local_prime
        if p is None:
            raise ValueError("no prime given")
        return EIdeal(self.n, GF(p), tuple(mod_p(g, p) for g in self.generators))

    def render(self) -> str:
        return "⟨" + ", ".join(g.render() for g in self.generators) + "⟩"

    def degrees(self) -> list:
        return [g.degree() for g in self.generators]

    def to_json(self) -> dict:
        p = self.ring.p if isinstance(self.ring, GF) else self.local_prime
        return {"n": self.n, "p": p, "ring": str(self.ring),
                "generators": [g.to_json() for g in self.generators],
                "rendered": [g.render() for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict) -> "EIdeal":
        ring = QQ if data.get("ring", "QQ") == "QQ" else GF(data["p"])
        local = data["p"] if ring == QQ else None
        gens = tuple(EPolynomial.from_json(t, data["n"], ring) for t in data["generators"])
        return cls(data["n"], ring, gens, local)


# -- Groebner kernel (packed monomials, F_p coefficients) --------------------

def _packed(f: EPolynomial, packer: MonomialPacker) -> dict:
    return {packer.pack(m): c for m, c in f.terms.items()}


def _unpacked(d: dict, packer: MonomialPacker, ring, n) -> EPolynomial:
    return EPolynomial._raw(ring, n, {packer.unpack(m): c for m, c in d.items()})


def _monic(f: dict, p: int) -> tuple:
    lt = max(f)
    inv = pow(f[lt], -1, p)
    return lt, {m: c * inv % p for m, c in f.items()}


def _reduce(f: dict, basis: list, p: int, packer: MonomialPacker) -> dict:
    """Full normal form of ``f`` by the monic polynomials ``basis``
    (list of ``(lt, poly)``)."""
    f = dict(f)
    divides = packer.divides
    heap = [-m for m in f]
    heapq.heapify(heap)
    rem = {}
    while heap:
        m = -heapq.heappop(heap)
        c = f.pop(m, 0)
        if not c:
            continue
        for lt, g in basis:
            if divides(lt, m):
                q = m - lt
                for mm, cc in g.items():
                    k = mm + q
                    if k == m:
                        continue
                    old = f.get(k)
                    v = ((old or 0) - c * cc) % p
                    if v:
                        if old is None:
                            heapq.heappush(heap, -k)
                        f[k] = v
                    elif old is not None:
                        del f[k]
                break
        else:
            rem[m] = c
    return rem


def _spoly_with_lcm(f, g, lcm, p):
    (lf, pf), (lg, pg) = f, g
    qf, qg = lcm - lf, lcm - lg
    out = {m + qf: c for m, c in pf.items()}
    for m, c in pg.items():
        k = m + qg
        v = (out.get(k, 0) - c) % p
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def groebner_packed(polys: list, p: int, packer: MonomialPacker) -> list:
    """Reduced Groebner basis of packed F_p polynomials.

    Normal selection strategy (smallest lcm first) with the Gebauer-Moeller
    installation of Buchberger's two criteria.
    """
    G: list = []
    active: list = []
    pairs: list = []  # heap of (lcm, i, j)
    lcm_of = packer.lcm
    divides = packer.divides

    def install(h):
        k = len(G)
        G.append(h)
        lh = h[0]
        cand = [(lcm_of(G[i][0], lh), i) for i in range(k) if active[i]]
        # chain criterion among the new pairs
        kept = []
        for idx, (l1, i) in enumerate(cand):
            if packer.coprime(G[i][0], lh):
                kept.append((l1, i, True))
                continue
            dominated = False
            for jdx, (l2, j) in enumerate(cand):
                if jdx == idx:
                    continue
                if divides(l2, l1) and (l2 != l1 or jdx < idx):
                    dominated = True
                    break
            if not dominated:
                kept.append((l1, i, False))
        # old pairs made redundant by h
        nonlocal pairs
        survivors = []
        for entry in pairs:
            l, i, j = entry
            if divides(lh, l) and lcm_of(G[i][0], lh) != l and lcm_of(G[j][0], lh) != l:
                continue
            survivors.append(entry)
        for l1, i, coprime in kept:
            if not coprime:  # product criterion
                survivors.append((l1, i, k))
        heapq.heapify(survivors)
        pairs = survivors
        for i in range(k):
            if active[i] and divides(lh, G[i][0]):
                active[i] = False
        active.append(True)

    for f in polys:
        h = _reduce(f, [G[i] for i in range(len(G)) if active[i]], p, packer)
        if h:
            install(_monic(h, p))
    while pairs:
        l, i, j = heapq.heappop(pairs)
        s = _spoly_with_lcm(G[i], G[j], l, p)
        h = _reduce(s, [G[t] for t in range(len(G)) if active[t]], p, packer)
        if h:
            install(_monic(h, p))
    # minimal, then interreduced
    minimal = [G[i] for i in range(len(G)) if active[i]]
    minimal.sort(key=lambda t: t[0])
    out = []
    for idx, (lt, g) in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        out.append(_monic(_reduce(g, others, p, packer), p) if others else (lt, g))
    out.sort(key=lambda t: t[0], reverse=True)
    return out


@dataclass
class GroebnerBasis:
    """Reduced Groebner basis of an ideal of F_p[e_1..e_n]."""

    ideal: EIdeal
    basis: tuple
    order: str = ORDER
    _packed: list = field(default=None, repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.ideal.n

    @property
    def ring(self):
        return self.ideal.ring

    def _packer(self):
        return MonomialPacker(self.n)

    def normal_form(self, f: EPolynomial) -> EPolynomial:
        return normal_form(f, self)

    def contains(self, f: EPolynomial) -> bool:
        return not normal_form(f, self)

    def is_unit_ideal(self) -> bool:
        return any(sum(g.leading_monomial()) == 0 for g in self.basis)

    def leading_monomials(self) -> list:
        return [g.leading_monomial() for g in self.basis]

    def standard_monomials(self, d: int) -> list:
        lts = self.leading_monomials()
        return [a for a in e_monomials(d, self.n)
                if not any(all(x <= y for x, y in zip(lt, a)) for lt in lts)]

    def component_dimension(self, d: int) -> int:
        """dim_k of the degree-``d`` part of the ideal."""
        return len(e_monomials(d, self.n)) - len(self.standard_monomials(d))

    def krull_dimension(self) -> int:
        return _dimension_from_leading(self.leading_monomials(), self.n)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.n == other.n and self.ring == other.ring and self.basis == other.basis

    def render(self) -> str:
        return "{" + ", ".join(g.render() for g in self.basis) + "}"


def buchberger(ideal: EIdeal) -> GroebnerBasis:
    """Reduced Groebner basis; deterministic for a given ideal."""
    if not isinstance(ideal.ring, GF):
        raise TypeError("Groebner bases are only computed over prime fields")
    p = ideal.ring.p
    packer = MonomialPacker(ideal.n)
    packed = groebner_packed([_packed(g, packer) for g in ideal.generators], p, packer)
    basis = tuple(_unpacked(g, packer, ideal.ring, ideal.n) for _, g in packed)
    return GroebnerBasis(ideal, basis, ORDER, packed)


def normal_form(f: EPolynomial, G: GroebnerBasis) -> EPolynomial:
    if f.ring != G.ring or f.n != G.n:
        raise ValueError("polynomial and basis live in different rings")
    packer = MonomialPacker(G.n)
    packed = G._packed or [(packer.pack(g.leading_monomial()), _packed(g, packer)) for g in G.basis]
    return _unpacked(_reduce(_packed(f, packer), packed, G.ring.p, packer), packer, G.ring, G.n)


def _dimension_from_leading(lts, n: int) -> int:
    supports = [frozenset(i for i, a in enumerate(lt) if a) for lt in lts]
    if any(not s for s in supports):
        raise ValueError("unit ideal has no Krull dimension")
    best = 0
    for size in range(n, -1, -1):
        for U in itertools.combinations(range(n), size):
            U = frozenset(U)
            if all(not s <= U for s in supports):
                return size
    return best


def krull_dimension(ideal: EIdeal) -> int:
    """Dimension of k[e]/I, via maximal independent sets of the leading-term ideal."""
    return buchberger(ideal).krull_dimension()


def is_regular_sequence(gens) -> bool:
    """Homogeneous elements of positive degree over a field form a regular
    sequence iff each prefix drops the Krull dimension by exactly one."""
    gens = list(gens)
    if not gens:
        return True
    n, ring = gens[0].n, gens[0].ring
    for g in gens:
        if not g.is_homogeneous() or not g:
            raise ValueError(f"{g} is not a nonzero homogeneous element")
        if g.degree() <= 0:
            raise ValueError(f"{g} has degree 0")
    if not isinstance(ring, GF):
        raise TypeError("regular-sequence test needs prime-field coefficients")
    dim = n
    for k in range(1, len(gens) + 1):
        new = krull_dimension(EIdeal(n, ring, tuple(gens[:k])))
        if new != dim - 1:
            return False
        dim = new
    return True


def certify_contains_p(ideal: EIdeal, p: int) -> dict:
    """Constructive certificate that p lies in a Z_(p)-ideal: a constant
    generator c with v_p(c) <= 1, so that p = (p/c)*c with p/c p-local."""
    if not isinstance(ideal.ring, RationalField):
        raise TypeError("certificate is for rational (Z_(p)) ideals")
    for idx, g in enumerate(ideal.generators):
        if set(g.terms) == {(0,) * ideal.n}:
            c = g.terms[(0,) * ideal.n]
            mult = Fraction(p) / c
            if is_p_local(mult, p):
                return {"generator_index": idx, "generator": str(c), "multiplier": str(mult),
                        "valuation": int(valuation_p(mult, p))}
    raise ValueError(f"cannot certify that {p} lies in the ideal")


def ideals_equal_mod_p(A: EIdeal, B: EIdeal, p: int) -> bool:
    """Equality of two Z_(p)-ideals that both contain p, decided by their
    reduced Groebner bases mod p."""
    if A.n != B.n:
        raise ValueError(f"ideals live in different rings (n={A.n} vs n={B.n})")
    for I in (A, B):
        if isinstance(I.ring, RationalField):
            certify_contains_p(I, p)
        elif I.ring != GF(p):
            raise ValueError("ideal is over the wrong prime field")
    ga = buchberger(A.mod_p(p) if isinstance(A.ring, RationalField) else A)
    gb = buchberger(B.mod_p(p) if isinstance(B.ring, RationalField) else B)
    return ga.basis == gb.basis
