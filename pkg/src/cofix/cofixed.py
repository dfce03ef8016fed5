"""Fixed and cofixed spaces by degreewise linear algebra.

Nothing here uses Groebner bases except the final comparison in
``annihilator_of_one``; the cofixed module and its Koszul homology serve as
an independent check on the resolution engine.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith import GF, ring_from_tag
from .combin import (PermGroupSpec, enumerate_partitions, inverse, partition_count,
                     staircase_bounded)
from .epoly import EIdeal, EPolynomial, buchberger, e_monomials, normal_form
from .linalg import nullspace_mod_p, nullspace_qq, rank_mod_p, rank_qq
from .polyx import XPolynomial
from .transfer_ideal import candidate_Jtilde


def monomials_of_degree(d: int, nvars: int) -> list:
    """Exponent vectors of total degree ``d``, lexicographically descending."""
    out = []
    for c in itertools.combinations_with_replacement(range(nvars), d):
        alpha = [0] * nvars
        for i in c:
            alpha[i] += 1
        out.append(tuple(alpha))
    return sorted(set(out), reverse=True)


def _mat_inverse(M, ring):
    k = len(M)
    A = [[ring(M[i][j]) for j in range(k)] + [ring(int(i == j)) for j in range(k)] for i in range(k)]
    for c in range(k):
        r = next((i for i in range(c, k) if A[i][c]), None)
        if r is None:
            raise ValueError("matrix is not invertible over the field")
        A[c], A[r] = A[r], A[c]
        inv = ring.inv(A[c][c])
        A[c] = [ring.normalize(x * inv) for x in A[c]]
        for i in range(k):
            if i != c and A[i][c]:
                f = A[i][c]
                A[i] = [ring.normalize(x - f * y) for x, y in zip(A[i], A[c])]
    return [row[k:] for row in A]


@dataclass
class GradedComponentRep:
    """A group acting on the degree-``degree`` polynomials in ``nvars`` variables.

    ``generators`` are either permutations (tuples of 0-based images) or
    square matrices whose column j is the image of x_j.
    """

    field: object
    nvars: int
    degree: int
    generators: list
    kind: str = "perm"
    basis: list = None

    def __post_init__(self):
        self.field = ring_from_tag(self.field)
        if self.basis is None:
            self.basis = monomials_of_degree(self.degree, self.nvars)
        self.index = {m: i for i, m in enumerate(self.basis)}

    @classmethod
    def from_group(cls, field, group: PermGroupSpec, degree: int) -> "GradedComponentRep":
        gens = list(group.generators)
        gens += [inverse(g) for g in gens if inverse(g) not in gens]
        return cls(field, group.degree, degree, gens, "perm")

    @classmethod
    def from_matrices(cls, field, matrices, degree: int) -> "GradedComponentRep":
        ring = ring_from_tag(field)
        mats = [[[ring(x) for x in row] for row in M] for M in matrices]
        k = len(mats[0]) if mats else 0
        invs = [_mat_inverse(M, ring) for M in mats]
        allm = []
        for M in mats + invs:
            if M not in allm:
                allm.append(M)
        return cls(ring, k, degree, allm, "matrix")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def image(self, g, alpha) -> XPolynomial:
        if self.kind == "perm":
            beta = [0] * self.nvars
            for i, a in enumerate(alpha):
                beta[g[i]] = a
            return XPolynomial(self.field, self.nvars, {tuple(beta): 1})
        lin = [XPolynomial(self.field, self.nvars,
                           {tuple(int(r == i) for r in range(self.nvars)): g[i][j]
                            for i in range(self.nvars)}) for j in range(self.nvars)]
        out = XPolynomial.constant(1, self.nvars, self.field)
        for j, a in enumerate(alpha):
            if a:
                out = out * lin[j] ** a
        return out

    def action_matrix(self, g) -> list:
        """Rows indexed by basis monomials; column c is the image of basis[c]."""
        M = [[self.field(0)] * self.dim for _ in range(self.dim)]
        for c, alpha in enumerate(self.basis):
            for beta, v in self.image(g, alpha).terms.items():
                M[self.index[beta]][c] = v
        return M

    def relation_vectors(self) -> list:
        """Coordinates of u - g(u) for every basis monomial u and generator g."""
        out = []
        for g in self.generators:
            A = self.action_matrix(g)
            for c in range(self.dim):
                v = [self.field.normalize(int(r == c) - A[r][c]) for r in range(self.dim)]
                if any(v):
                    out.append(v)
        return out


def _rank(rows, field) -> int:
    if not rows:
        return 0
    if isinstance(field, GF):
        return rank_mod_p(np.array(rows, dtype=np.int64), field.p)
    return rank_qq(rows)


def fixed_space(rep: GradedComponentRep) -> tuple:
    """``(dimension, basis)`` of the invariants in the component."""
    rows = []
    for g in rep.generators:
        A = rep.action_matrix(g)
        for r in range(rep.dim):
            rows.append([rep.field.normalize(A[r][c] - int(r == c)) for c in range(rep.dim)])
    if isinstance(rep.field, GF):
        null = nullspace_mod_p(np.array(rows, dtype=np.int64).reshape(len(rows), rep.dim), rep.field.p)
        vecs = [[int(x) for x in v] for v in null]
    else:
        vecs = nullspace_qq(rows, rep.dim) if rows else [
            [Fraction(int(i == j)) for j in range(rep.dim)] for i in range(rep.dim)]
    basis = [XPolynomial(rep.field, rep.nvars, {rep.basis[i]: v[i] for i in range(rep.dim) if v[i]})
             for v in vecs]
    return len(basis), basis


def _coset_order_key(alpha):
    return tuple(sorted(alpha, reverse=True)), tuple(-a for a in alpha)


def cofixed_space(rep: GradedComponentRep) -> tuple:
    """``(dimension, representatives)``: the quotient by the span of u - g(u).

    Representatives are basis monomials chosen greedily, most balanced
    exponent vectors first.
    """
    rels = rep.relation_vectors()
    base = _rank(rels, rep.field)
    dim = rep.dim - base
    reps = []
    cur = list(rels)
    rank = base
    for alpha in sorted(rep.basis, key=_coset_order_key):
        if len(reps) == dim:
            break
        trial = cur + [[int(b == alpha) for b in rep.basis]]
        r = _rank(trial, rep.field)
        if r > rank:
            reps.append(alpha)
            cur, rank = trial, r
    return dim, reps


def in_relation_span(rep: GradedComponentRep, f: XPolynomial) -> bool:
    rels = rep.relation_vectors()
    v = [f.coefficient(b) for b in rep.basis]
    return _rank(rels + [v], rep.field) == _rank(rels, rep.field)


# -- the cofixed module of S_n acting on F_p[x_1..x_n] -------------------------

class CofixedModule:
    """F_p[x]_{S_n} as a module over F_p[e_1..e_n].

    Degree-d basis: the classes of x^lam for partitions lam of d with at most
    n parts.  e_i acts by x^lam -> sum over i-subsets T of x^{sort(lam + 1_T)}.
    """

    def __init__(self, n: int, p: int):
        self.n, self.p = n, p
        self.field = GF(p)

    def basis(self, d: int) -> list:
        return enumerate_partitions(d, self.n) if d >= 0 else []

    def dim(self, d: int) -> int:
        return partition_count(d, self.n)

    def index(self, d: int) -> dict:
        return _index(d, self.n)

    def e_action(self, i: int, lam: tuple) -> dict:
        return _e_action(i, lam, self.p)

    def apply_e(self, i: int, vec: dict) -> dict:
        out = {}
        p = self.p
        for lam, c in vec.items():
            for nu, k in _e_action(i, lam, p).items():
                out[nu] = (out.get(nu, 0) + c * k) % p
        return {k: v for k, v in out.items() if v}

    def apply_monomial(self, alpha, vec: dict) -> dict:
        for i, a in enumerate(alpha):
            for _ in range(a):
                vec = self.apply_e(i + 1, vec)
        return vec

    def e_matrix(self, i: int, d: int) -> np.ndarray:
        """Matrix of e_i : M_d -> M_{d+i} (rows: target basis)."""
        src, tgt = self.basis(d), self.index(d + i)
        A = np.zeros((len(tgt), len(src)), dtype=np.int64)
        for c, lam in enumerate(src):
            for nu, k in _e_action(i, lam, self.p).items():
                A[tgt[nu], c] = k
        return A

    def image_rows(self, d: int) -> list:
        """Vectors spanning the image of the augmentation ideal in degree d."""
        rows = []
        for i in range(1, min(d, self.n) + 1):
            if self.dim(d - i):
                rows.extend(self.e_matrix(i, d - i).T.tolist())
        return rows

    def generator_degree_bound(self) -> int:
        return self.n * (self.n - 1) // 2


@lru_cache(maxsize=None)
def _index(d: int, n: int) -> dict:
    return {lam: i for i, lam in enumerate(enumerate_partitions(d, n))}


@lru_cache(maxsize=None)
def _e_action(i: int, lam: tuple, p: int) -> dict:
    # group equal parts into blocks; choosing t_v entries of a block of size m_v
    # to increment gives the same sorted result C(m_v, t_v) ways
    blocks = []
    start = 0
    n = len(lam)
    while start < n:
        end = start
        while end < n and lam[end] == lam[start]:
            end += 1
        blocks.append((start, end - start))
        start = end
    out = {}

    def rec(b, left, cur, coeff):
        if b == len(blocks):
            if left == 0:
                nu = tuple(sorted(cur, reverse=True))
                out[nu] = (out.get(nu, 0) + coeff) % p
            return
        s, m = blocks[b]
        for t in range(min(m, left) + 1):
            nxt = list(cur)
            for q in range(s, s + t):
                nxt[q] += 1
            rec(b + 1, left - t, nxt, coeff * math.comb(m, t))

    rec(0, i, list(lam), 1)
    return {k: v for k, v in out.items() if v}


def graded_beta0(n: int, p: int, D: int | None = None) -> dict:
    """Number of minimal generators of the cofixed module in each degree <= D."""
    M = CofixedModule(n, p)
    if D is None:
        D = max(2 * p + 2, M.generator_degree_bound())
    out = {}
    for d in range(D + 1):
        rows = M.image_rows(d)
        b = M.dim(d) - (rank_mod_p(np.array(rows, dtype=np.int64), p) if rows else 0)
        if b:
            out[d] = b
    return out


def minimal_generators(M: CofixedModule, D: int | None = None) -> list:
    """A minimal homogeneous generating set of partitions, by degree.  In each
    degree, staircase-bounded partitions are preferred, then lex order."""
    if D is None:
        D = M.generator_degree_bound()
    gens = []
    for d in range(D + 1):
        rows = M.image_rows(d)
        idx = M.index(d)
        rank = rank_mod_p(np.array(rows, dtype=np.int64), M.p) if rows else 0
        need = M.dim(d) - rank
        if not need:
            continue
        cands = sorted(M.basis(d), key=lambda lam: (not staircase_bounded(lam), tuple(-x for x in lam)))
        cur = [list(r) for r in rows]
        for lam in cands:
            if need == 0:
                break
            v = [0] * M.dim(d)
            v[idx[lam]] = 1
            trial = cur + [v]
            r = rank_mod_p(np.array(trial, dtype=np.int64), M.p)
            if r > rank:
                gens.append(lam)
                cur, rank = trial, r
                need -= 1
    return gens


@dataclass
class AnnihilatorReport:
    n: int
    p: int
    D: int
    per_degree: list
    bases: dict
    matches: bool
    witness: str | None = None

    def to_json(self) -> dict:
        out = {"n": self.n, "p": self.p, "D": self.D, "per_degree": self.per_degree,
               "matches": self.matches,
               "annihilator": {str(d): [f.render() for f in fs] for d, fs in self.bases.items() if fs}}
        if self.witness:
            out["witness"] = self.witness
        return out


def annihilator_in_degree(M: CofixedModule, d: int) -> list:
    """Basis of {f in F_p[e]_d : f * class(1) = 0}."""
    F = M.field
    mons = e_monomials(d, M.n)
    if not mons:
        return []
    idx = M.index(d)
    one = {(0,) * M.n: 1}
    A = np.zeros((len(idx), len(mons)), dtype=np.int64)
    for c, alpha in enumerate(mons):
        for lam, v in M.apply_monomial(alpha, one).items():
            A[idx[lam], c] = v
    null = nullspace_mod_p(A, M.p)
    return [EPolynomial(F, M.n, {mons[c]: int(v[c]) for c in range(len(mons)) if v[c]}) for v in null]


def annihilator_of_one(n: int, p: int, D: int | None = None, ideal: EIdeal | None = None) -> AnnihilatorReport:
    """Degreewise annihilator of the class of 1, compared with ``ideal``
    (by default J~_n)."""
    if ideal is None:
        ideal = candidate_Jtilde(n, p)
    if D is None:
        D = 2 * p + 2
    M = CofixedModule(n, p)
    G = buchberger(ideal)
    beta0 = graded_beta0(n, p, D)
    per_degree, bases = [], {}
    matches, witness = True, None
    for d in range(D + 1):
        ann = annihilator_in_degree(M, d)
        bases[d] = ann
        dim_ideal = G.component_dimension(d)
        if len(ann) != dim_ideal and matches:
            matches = False
            witness = f"degree {d}: annihilator has dimension {len(ann)}, ideal has {dim_ideal}"
        for f in ann:
            if normal_form(f, G) and matches:
                matches = False
                witness = f"degree {d}: {f.render()} annihilates 1 but is not in the ideal"
        per_degree.append({"d": d, "dim_K": math.comb(d + n - 1, n - 1) - M.dim(d),
                           "dim_ann": len(ann), "beta0": beta0.get(d, 0)})
    return AnnihilatorReport(n, p, D, per_degree, bases, matches, witness)


def koszul_betti(M: CofixedModule, max_degree: int) -> dict:
    """Graded Betti numbers dim Tor_i(M, F_p)_j for j <= max_degree, from the
    homology of the Koszul complex on e_1..e_n tensored with M."""
    n, p = M.n, M.p
    subsets = {i: list(itertools.combinations(range(1, n + 1), i)) for i in range(n + 1)}

    def blocks(i, j):
        out, off = [], 0
        for S in subsets[i]:
            d = j - sum(S)
            size = M.dim(d) if d >= 0 else 0
            out.append((S, d, off, size))
            off += size
        return out, off

    def differential(i, j):
        # K_i -> K_{i-1} in internal degree j
        src, ns = blocks(i, j)
        tgt, nt = blocks(i - 1, j)
        pos = {S: (d, off) for S, d, off, size in tgt}
        A = np.zeros((nt, ns), dtype=np.int64)
        for S, d, off, size in src:
            if not size:
                continue
            for t, s in enumerate(S):
                T = S[:t] + S[t + 1:]
                dt, offt = pos[T]
                E = M.e_matrix(s, d)
                sign = 1 if t % 2 == 0 else -1
                A[offt:offt + E.shape[0], off:off + size] += sign * E
        return A % p, ns

    out = {}
    for j in range(max_degree + 1):
        ranks, dims = {}, {}
        for i in range(n + 1):
            _, dims[i] = blocks(i, j)
        for i in range(1, n + 1):
            if dims[i] and dims[i - 1]:
                A, _ = differential(i, j)
                ranks[i] = rank_mod_p(A, p)
            else:
                ranks[i] = 0
        ranks[0] = 0
        ranks[n + 1] = 0
        for i in range(n + 1):
            b = dims[i] - ranks[i] - ranks[i + 1]
            if b:
                out[(i, j)] = b
    return out
