"""Graded minimal free resolutions over F_p[e_1..e_n] (deg e_i = i).

The engine is a homogeneous module Buchberger algorithm run degree by
degree.  Every element carries a tracking vector recording how it was built
from the inputs, so S-pairs that reduce to zero yield syzygies among the
accepted inputs.  Inputs of degree d are accepted only when they do not
reduce to zero modulo everything of degree <= d already present, which makes
the accepted set a minimal generating set (graded Nakayama).
"""
from __future__ import annotations

import heapq
import itertools
import sys
from collections import Counter, defaultdict
from dataclasses import dataclass, field

import numpy as np

from .arith import GF, check_prime
from .cofixed import CofixedModule, minimal_generators
from .epoly import EIdeal, EPolynomial, e_monomials, weighted_degree
from .linalg import nullspace_mod_p
from .transfer_ideal import candidate_Jtilde

CBITS = 16
CMASK = (1 << CBITS) - 1


class _Keys:
    """Module terms packed into ints.

    A key holds the total degree (monomial degree plus the shift of its
    component), then one field per variable storing ``L - exponent`` with
    e_n most significant, then the component index.  Integer order is
    therefore weighted degree, then reverse lexicographic, then component.
    Multiplying a term by e^beta adds ``offset(beta)``.
    """

    def __init__(self, n: int, bits: int = 8):
        self.n = n
        self.bits = bits
        self.top = (1 << (bits - 1)) - 1
        self.mask = (1 << bits) - 1
        self.shifts = tuple(i * bits for i in range(n))
        self.ds = n * bits
        self.base = sum(self.top << s for s in self.shifts)
        self.guard = sum(1 << (s + bits - 1) for s in self.shifts) << CBITS

    def _fields(self, alpha) -> int:
        f = 0
        for a, s in zip(alpha, self.shifts):
            if a > self.top:
                raise OverflowError("exponent too large for packed module term")
            f += a << s
        return f

    def key(self, alpha, comp: int, shift: int) -> int:
        d = weighted_degree(alpha) + shift
        return (((d << self.ds) + self.base - self._fields(alpha)) << CBITS) | comp

    def unit(self, comp: int, shift: int) -> int:
        return (((shift << self.ds) + self.base) << CBITS) | comp

    def offset(self, alpha) -> int:
        return ((weighted_degree(alpha) << self.ds) - self._fields(alpha)) << CBITS

    def degree(self, k: int) -> int:
        return k >> (CBITS + self.ds)

    def exponents(self, k: int) -> tuple:
        f = k >> CBITS
        return tuple(self.top - ((f >> s) & self.mask) for s in self.shifts)

    def divides(self, a: int, b: int) -> bool:
        return (a & CMASK) == (b & CMASK) and not ((a - b) & self.guard)

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.exponents(a), self.exponents(b)
        shift = self.degree(a) - weighted_degree(ea)
        return self.key(tuple(max(x, y) for x, y in zip(ea, eb)), a & CMASK, shift)


class _GradedGB:
    """Degree-by-degree Buchberger for a submodule of a free module."""

    def __init__(self, keys: _Keys, p: int):
        self.K = keys
        self.p = p
        self.lts = []
        self.F = []
        self.T = []
        self.by_comp = defaultdict(list)
        self.pair_bucket = defaultdict(list)
        self.pairs_by_comp = defaultdict(list)
        self.accepted = []
        self.accepted_deg = []
        self.syz = []
        self.stats = Counter()

    # -- reduction -------------------------------------------------------------
    def _find_reducer(self, k: int):
        divides = self.K.divides
        for lt, idx in self.by_comp.get(k & CMASK, ()):
            if divides(lt, k):
                return lt, idx
        return None

    def top_reduce(self, F: dict, T: dict):
        """Reduce until the leading term is irreducible; returns it, or None
        if F reduces to zero.  F and T are modified in place."""
        p = self.p
        heap = [-k for k in F]
        heapq.heapify(heap)
        while heap:
            k = -heapq.heappop(heap)
            c = F.get(k)
            if c is None:
                continue
            red = self._find_reducer(k)
            if red is None:
                return k
            lt, idx = red
            q = k - lt
            for kk, cc in self.F[idx].items():
                key = kk + q
                old = F.get(key)
                v = ((old or 0) - c * cc) % p
                if v:
                    if old is None:
                        heapq.heappush(heap, -key)
                    F[key] = v
                elif old is not None:
                    del F[key]
            for kk, cc in self.T[idx].items():
                key = kk + q
                v = (T.get(key, 0) - c * cc) % p
                if v:
                    T[key] = v
                else:
                    T.pop(key, None)
            self.stats["reductions"] += 1
        return None

    # -- insertion and pair bookkeeping ------------------------------------------
    def insert(self, F: dict, T: dict, lt: int):
        p = self.p
        inv = pow(F[lt], -1, p)
        if inv != 1:
            F = {k: v * inv % p for k, v in F.items()}
            T = {k: v * inv % p for k, v in T.items()}
        idx = len(self.lts)
        comp = lt & CMASK
        lcm, divides = self.K.lcm, self.K.divides
        cands = [(lcm(lt_i, lt), i) for lt_i, i in self.by_comp.get(comp, ())]
        # chain criterion on the new pairs; among equal lcms keep the first
        kept, seen = [], set()
        for l, i in cands:
            if l in seen:
                continue
            if any(l2 != l and divides(l2, l) for l2, _ in cands):
                continue
            seen.add(l)
            kept.append((l, i))
        # old pairs made redundant by the new element
        deg = self.K.degree(lt)
        for pr in self.pairs_by_comp.get(comp, ()):
            if pr[3] and self.K.degree(pr[0]) > deg and divides(lt, pr[0]):
                l = pr[0]
                if lcm(self.lts[pr[1]], lt) != l and lcm(self.lts[pr[2]], lt) != l:
                    pr[3] = False
                    self.stats["pairs_pruned"] += 1
        self.lts.append(lt)
        self.F.append(F)
        self.T.append(T)
        self.by_comp[comp].append((lt, idx))
        for l, i in kept:
            pr = [l, i, idx, True]
            self.pair_bucket[self.K.degree(l)].append(pr)
            self.pairs_by_comp[comp].append(pr)
        self.stats["elements"] += 1

    def _spair(self, l: int, i: int, j: int):
        p = self.p
        qi, qj = l - self.lts[i], l - self.lts[j]
        F = {k + qi: v for k, v in self.F[i].items()}
        T = {k + qi: v for k, v in self.T[i].items()}
        for src, dst, q in ((self.F[j], F, qj), (self.T[j], T, qj)):
            for k, v in src.items():
                key = k + q
                w = (dst.get(key, 0) - v) % p
                if w:
                    dst[key] = w
                else:
                    dst.pop(key, None)
        return F, T

    def process_pairs(self, d: int):
        bucket = self.pair_bucket.pop(d, [])
        bucket.sort()
        for pr in bucket:
            if not pr[3]:
                continue
            pr[3] = False
            F, T = self._spair(pr[0], pr[1], pr[2])
            self.stats["pairs"] += 1
            lt = self.top_reduce(F, T)
            if lt is None:
                if T:
                    self.syz.append((d, T))
            else:
                self.insert(F, T, lt)
        for comp in list(self.pairs_by_comp):
            self.pairs_by_comp[comp] = [pr for pr in self.pairs_by_comp[comp] if pr[3]]

    def process_inputs(self, d: int, inputs, mode: str = "nf"):
        """``nf``: keep inputs that do not reduce to zero; ``all``: keep every
        input (zero reductions then give syzygies); ``lt``: caller guarantees
        irreducible leading terms."""
        for vec in inputs:
            a = len(self.accepted)
            F = dict(vec)
            T = {self.K.unit(a, d): 1}
            if mode == "lt":
                lt = max(F)
            else:
                lt = self.top_reduce(F, T)
            if lt is None:
                if mode == "all":
                    self.accepted.append(dict(vec))
                    self.accepted_deg.append(d)
                    self.syz.append((d, T))
                continue
            self.accepted.append(dict(vec))
            self.accepted_deg.append(d)
            self.insert(F, T, lt)

    def pending_degrees(self):
        return sorted(d for d, b in self.pair_bucket.items() if any(pr[3] for pr in b))

    def run(self, inputs_by_degree: dict, mode: str = "nf"):
        """Process every degree until no pairs or inputs remain."""
        todo = set(inputs_by_degree)
        while True:
            cands = set(self.pending_degrees()) | todo
            if not cands:
                break
            d = min(cands)
            self.process_pairs(d)
            if d in todo:
                self.process_inputs(d, inputs_by_degree[d], mode)
                todo.discard(d)
        return self


# -- public types -----------------------------------------------------------------

@dataclass
class FreeModulePresentation:
    """Map F_1 -> F_0 of graded free modules over F_p[e_1..e_n].

    ``row_degrees`` are the degrees of the basis of F_0; ``columns`` lists the
    images of the basis of F_1, each a tuple of EPolynomials (one per row).
    """

    n: int
    p: int
    row_degrees: tuple
    columns: tuple = ()

    def __post_init__(self):
        check_prime(self.p)
        self.row_degrees = tuple(self.row_degrees)
        self.columns = tuple(tuple(c) for c in self.columns)
        for c in self.columns:
            if len(c) != len(self.row_degrees):
                raise ValueError("column length does not match the number of rows")
        self.column_degrees = tuple(self._column_degree(c) for c in self.columns)

    def _column_degree(self, col):
        degs = set()
        for f, s in zip(col, self.row_degrees):
            if f.ring != GF(self.p) or f.n != self.n:
                raise ValueError("entries must lie in F_p[e_1..e_n]")
            degs |= {d + s for d in f.degrees()}
        if len(degs) > 1:
            raise ValueError("column is not homogeneous")
        if not degs:
            raise ValueError("zero column")
        return degs.pop()

    @property
    def rank(self) -> int:
        return len(self.row_degrees)

    @classmethod
    def quotient_ring(cls, ideal: EIdeal) -> "FreeModulePresentation":
        """R/I as the cokernel of R^k -> R."""
        if not isinstance(ideal.ring, GF):
            raise TypeError("presentations live over a prime field")
        return cls(ideal.n, ideal.ring.p, (0,), tuple((g,) for g in ideal.generators))

    def pruned(self) -> "FreeModulePresentation":
        """Cancel unit entries (constant nonzero entries), which removes a
        generator and a relation at a time."""
        rows = list(self.row_degrees)
        cols = [list(c) for c in self.columns]
        F = GF(self.p)
        while True:
            hit = None
            for j, col in enumerate(cols):
                for r, f in enumerate(col):
                    if f and f.degree() == 0:
                        hit = (j, r)
                        break
                if hit:
                    break
            if not hit:
                break
            j, r = hit
            piv = cols[j]
            inv = F.inv(piv[r].terms[(0,) * self.n])
            new = []
            for t, col in enumerate(cols):
                if t == j:
                    continue
                if col[r]:
                    f = col[r].scale(inv)
                    col = [a - f * b for a, b in zip(col, piv)]
                new.append(col)
            cols = [c[:r] + c[r + 1:] for c in new]
            rows.pop(r)
            cols = [c for c in cols if any(c)]
        return FreeModulePresentation(self.n, self.p, tuple(rows), tuple(tuple(c) for c in cols))

    def to_json(self) -> dict:
        return {"n": self.n, "p": self.p, "row_degrees": list(self.row_degrees),
                "columns": [[f.render() for f in c] for c in self.columns]}


@dataclass
class BettiTable:
    """beta_{i,j} with i the homological and j the internal degree."""

    entries: dict
    module: str = ""
    partial: bool = False

    def __post_init__(self):
        self.entries = {(int(i), int(j)): int(b) for (i, j), b in self.entries.items() if b}
        if any(b < 0 for b in self.entries.values()):
            raise ValueError("negative Betti number")

    def __getitem__(self, ij):
        return self.entries.get(tuple(ij), 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries and self.partial == other.partial

    def length(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    def totals(self) -> list:
        return [sum(b for (i, _), b in self.entries.items() if i == k) for k in range(self.length() + 1)]

    def direct_sum(self, other: "BettiTable", module: str = "") -> "BettiTable":
        c = Counter(self.entries)
        c.update(other.entries)
        return BettiTable(dict(c), module or f"{self.module} + {other.module}",
                          self.partial or other.partial)

    def homological_shift(self, k: int, module: str = "") -> "BettiTable":
        """Table of the module whose i-th free module is this table's (i+k)-th."""
        return BettiTable({(i - k, j): b for (i, j), b in self.entries.items() if i - k >= 0},
                          module or self.module, self.partial)

    def euler_polynomial(self) -> dict:
        """sum_i (-1)^i sum_j beta_{i,j} t^j, as {j: coefficient}."""
        out = Counter()
        for (i, j), b in self.entries.items():
            out[j] += (-1) ** i * b
        return {j: c for j, c in sorted(out.items()) if c}

    def render_text(self) -> str:
        if not self.entries:
            return "total: 0\n"
        top = self.length()
        rows = sorted({j - i for i, j in self.entries})
        rmin, rmax = rows[0], rows[-1]
        cols = list(range(top + 1))
        tot = self.totals()
        cells = {r: [str(self[(i, i + r)]) if self[(i, i + r)] else "." for i in cols]
                 for r in range(rmin, rmax + 1)}
        width = [max(len(str(i)), len(str(tot[i])), *(len(cells[r][i]) for r in cells)) for i in cols]
        labels = {r: f"    {r}:" for r in cells}
        lw = max(len("total:"), *(len(s) for s in labels.values()))

        def line(label, items):
            return label.ljust(lw) + " " + "".join(s.rjust(w) + " " for s, w in zip(items, width))

        out = [line("", [str(i) for i in cols]), line("total:", [str(t) for t in tot])]
        out += [line(labels[r], cells[r]) for r in range(rmin, rmax + 1)]
        return "\n".join(out) + "\n"

    def to_json(self) -> dict:
        return {"module": self.module,
                "entries": [{"i": i, "j": j, "beta": b} for (i, j), b in sorted(self.entries.items())],
                "partial": self.partial}

    @classmethod
    def from_json(cls, data: dict) -> "BettiTable":
        return cls({(d["i"], d["j"]): d["beta"] for d in data["entries"]},
                   data.get("module", ""), data.get("partial", False))


def betti_multisets(T: BettiTable) -> dict:
    """A_i: the multiset in which j occurs beta_{i,j} times, sorted."""
    if T.partial:
        raise ValueError("Betti table is partial; multisets are incomplete")
    out = {}
    for (i, j), b in sorted(T.entries.items()):
        out.setdefault(i, []).extend([j] * b)
    return out


def multisets_equal_mod(A, B, m: int) -> bool:
    if m <= 0:
        raise ValueError("modulus must be positive")
    return Counter(a % m for a in A) == Counter(b % m for b in B)


# -- resolutions ---------------------------------------------------------------------

@dataclass
class Resolution:
    """Minimal free resolution: ``degrees[i]`` are the generator degrees of
    F_i and ``differentials[i]`` (i >= 1) the images of the basis of F_i in
    F_{i-1}, as packed vectors."""

    n: int
    p: int
    degrees: list
    differentials: list
    keys: _Keys
    partial: bool = False
    stats: list = field(default_factory=list)

    def betti(self, module: str = "") -> BettiTable:
        c = Counter()
        for i, degs in enumerate(self.degrees):
            for d in degs:
                c[(i, d)] += 1
        return BettiTable(dict(c), module, self.partial)

    def _decode(self, vec: dict, shifts) -> tuple:
        col = [dict() for _ in shifts]
        for k, c in vec.items():
            comp = k & CMASK
            col[comp][self.keys.exponents(k)] = c
        return tuple(EPolynomial(GF(self.p), self.n, t) for t in col)

    def presentation(self, i: int) -> FreeModulePresentation:
        """The differential F_i -> F_{i-1} as a matrix of EPolynomials."""
        cols = tuple(self._decode(v, self.degrees[i - 1]) for v in self.differentials[i])
        return FreeModulePresentation(self.n, self.p, tuple(self.degrees[i - 1]), cols)

    def apply(self, i: int, vec: dict) -> dict:
        """Image under d_i of a packed vector in F_i."""
        K, p = self.keys, self.p
        out = {}
        images = self.differentials[i]
        degs = self.degrees[i]
        for k, c in vec.items():
            comp = k & CMASK
            q = k - K.unit(comp, degs[comp])
            for kk, cc in images[comp].items():
                key = kk + q
                v = (out.get(key, 0) + c * cc) % p
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return out

    def is_complex(self) -> bool:
        return all(not self.apply(i - 1, v)
                   for i in range(2, len(self.differentials)) for v in self.differentials[i])

    def is_minimal(self) -> bool:
        """No differential entry is a nonzero constant."""
        for i in range(1, len(self.differentials)):
            for v in self.differentials[i]:
                for k in v:
                    if self.keys.exponents(k) == (0,) * self.n:
                        return False
        return True


def _progress(msg: str, verbose: bool):
    if verbose:
        print(msg, file=sys.stderr, flush=True)


def _continue(keys: _Keys, p: int, engine: _GradedGB, degrees: list, diffs: list,
              max_homological: int, verbose: bool):
    """Iterate syzygies starting from the engine for the image of F_1."""
    stats = [dict(engine.stats)]
    level = 1
    partial = False
    while True:
        degrees.append(list(engine.accepted_deg))
        diffs.append(list(engine.accepted))
        _progress(f"  F_{level}: {len(engine.accepted)} generators", verbose)
        syz = [(d, T) for d, T in engine.syz if T]
        if not syz:
            break
        if level >= max_homological:
            partial = True
            break
        by_deg = defaultdict(list)
        for d, T in syz:
            by_deg[d].append(T)
        engine = _GradedGB(keys, p).run(dict(by_deg), "nf")
        stats.append(dict(engine.stats))
        level += 1
        if not engine.accepted:
            break
    return partial, stats


def minimal_resolution(M: FreeModulePresentation, max_homological: int | None = None,
                       verbose: bool = False) -> tuple:
    """Minimal free resolution of coker(M); returns ``(Resolution, BettiTable)``."""
    P = M.pruned()
    n, p = P.n, P.p
    h = max_homological if max_homological is not None else n + 1
    keys = _Keys(n)
    inputs = defaultdict(list)
    for col, d in zip(P.columns, P.column_degrees):
        vec = {}
        for comp, (f, s) in enumerate(zip(col, P.row_degrees)):
            for alpha, c in f.terms.items():
                vec[keys.key(alpha, comp, s)] = c
        inputs[d].append(vec)
    degrees, diffs = [list(P.row_degrees)], [None]
    partial = False
    stats = []
    if P.columns and h >= 1:
        engine = _GradedGB(keys, p).run(dict(inputs), "nf")
        partial, stats = _continue(keys, p, engine, degrees, diffs, h, verbose)
    elif P.columns:
        partial = True
    res = Resolution(n, p, degrees, diffs, keys, partial, stats)
    return res, res.betti()


def syzygies(P: FreeModulePresentation) -> FreeModulePresentation:
    """Minimal generators of the kernel of F_1 -> F_0 given by the columns."""
    keys = _Keys(P.n)
    inputs = defaultdict(list)
    for col, d in zip(P.columns, P.column_degrees):
        vec = {}
        for comp, (f, s) in enumerate(zip(col, P.row_degrees)):
            for alpha, c in f.terms.items():
                vec[keys.key(alpha, comp, s)] = c
        inputs[d].append(vec)
    eng = _GradedGB(keys, P.p).run(dict(inputs), "all")
    by_deg = defaultdict(list)
    for d, T in eng.syz:
        if T:
            by_deg[d].append(T)
    eng2 = _GradedGB(keys, P.p).run(dict(by_deg), "nf")
    cols = []
    for vec in eng2.accepted:
        col = [dict() for _ in P.columns]
        for k, c in vec.items():
            col[k & CMASK][keys.exponents(k)] = c
        cols.append(tuple(EPolynomial(GF(P.p), P.n, t) for t in col))
    return FreeModulePresentation(P.n, P.p, P.column_degrees, tuple(cols))


# -- the cofixed module ----------------------------------------------------------------

class _CofixedKernel:
    """Degreewise kernel of F_0 -> M for chosen generators of the cofixed module."""

    def __init__(self, M: CofixedModule, gens: list, keys: _Keys):
        self.M, self.gens, self.keys = M, gens, keys
        self.gdeg = [sum(g) for g in gens]
        self.cache = {}

    def image(self, alpha, k) -> dict:
        key = (alpha, k)
        if key in self.cache:
            return self.cache[key]
        i = next((t for t, a in enumerate(alpha) if a), None)
        if i is None:
            vec = {self.gens[k]: 1}
        else:
            prev = list(alpha)
            prev[i] -= 1
            vec = self.M.apply_e(i + 1, self.image(tuple(prev), k))
        self.cache[key] = vec
        return vec

    def kernel(self, d: int) -> list:
        cols = []
        for k, g in enumerate(self.gens):
            if self.gdeg[k] <= d:
                for alpha in e_monomials(d - self.gdeg[k], self.M.n):
                    cols.append((self.keys.key(alpha, k, self.gdeg[k]), alpha, k))
        if not cols:
            return []
        cols.sort()
        idx = self.M.index(d)
        A = np.zeros((max(len(idx), 1), len(cols)), dtype=np.int64)
        for c, (_, alpha, k) in enumerate(cols):
            for lam, v in self.image(alpha, k).items():
                A[idx[lam], c] = v
        null = nullspace_mod_p(A, self.M.p)
        out = []
        for v in null:
            nz = np.nonzero(v)[0]
            out.append({cols[c][0]: int(v[c]) for c in nz})
        return out


def cofixed_presentation_engine(n: int, p: int, verbose: bool = False):
    """Minimal generators of the cofixed module and a Groebner engine for its
    module of relations, with minimal relations accepted degree by degree.

    Generators live in degrees <= n(n-1)/2; so do the minimal relations, since
    the sub-staircase monomials give a presentation in those degrees.
    """
    M = CofixedModule(n, p)
    D0 = M.generator_degree_bound()
    gens = minimal_generators(M, D0)
    keys = _Keys(n)
    ker = _CofixedKernel(M, gens, keys)
    eng = _GradedGB(keys, p)
    for d in range(D0 + 1):
        eng.process_pairs(d)
        fresh = [v for v in ker.kernel(d) if eng._find_reducer(max(v)) is None]
        fresh.sort(key=max)
        eng.process_inputs(d, fresh, "lt")
        _progress(f"  degree {d}: {len(fresh)} new relations", verbose)
    eng.run({}, "nf")
    return gens, keys, eng


def cofixed_resolution(n: int, p: int, max_homological: int | None = None,
                       verbose: bool = False) -> Resolution:
    check_prime(p)
    h = max_homological if max_homological is not None else n + 1
    gens, keys, eng = cofixed_presentation_engine(n, p, verbose)
    degrees, diffs = [[sum(g) for g in gens]], [None]
    partial, stats = (False, [])
    if h >= 1:
        partial, stats = _continue(keys, p, eng, degrees, diffs, h, verbose)
    elif eng.accepted:
        partial = True
    return Resolution(n, p, degrees, diffs, keys, partial, stats)


def module_label(n: int, p: int) -> str:
    return f"F_{p}[x_1..x_{n}]_S_{n}"


def quotient_betti(ideal: EIdeal, max_homological: int | None = None) -> BettiTable:
    _, T = minimal_resolution(FreeModulePresentation.quotient_ring(ideal), max_homological)
    return T


def cofixed_module_betti(n: int, p: int, max_homological: int | None = None,
                         method: str = "auto", verbose: bool = False) -> BettiTable:
    """Betti table of F_p[x_1..x_n]_{S_n} over F_p[e_1..e_n].

    ``auto`` uses the free rank-one answer for n < p, the splitting
    R/J~_n + J~_n for p <= n < 2p, and a direct presentation otherwise;
    ``direct`` always resolves the presentation computed from the module.
    """
    check_prime(p)
    label = module_label(n, p)
    if method not in ("auto", "direct", "splitting"):
        raise ValueError(f"unknown method {method}")
    if method == "auto" and n < p:
        return BettiTable({(0, 0): 1}, label)
    if method == "splitting" or (method == "auto" and p <= n < 2 * p):
        if not p <= n < 2 * p:
            raise ValueError("the splitting is only available for p <= n < 2p")
        h = max_homological if max_homological is not None else n + 1
        quot = quotient_betti(candidate_Jtilde(n, p), h + 1)
        ideal = quot.homological_shift(1)
        ideal.entries.pop((-1, 0), None)
        q = BettiTable({k: v for k, v in quot.entries.items() if k[0] <= h}, label,
                       quot.partial or quot.length() > h)
        i = BettiTable({k: v for k, v in ideal.entries.items() if k[0] <= h}, label,
                       ideal.partial or ideal.length() > h)
        return q.direct_sum(i, label)
    res = cofixed_resolution(n, p, max_homological, verbose)
    return res.betti(label)


def koszul_table(degrees, module: str = "") -> BettiTable:
    """Betti table of R/(f_1..f_k) for a regular sequence of the given degrees."""
    c = Counter()
    for i in range(len(degrees) + 1):
        for S in itertools.combinations(degrees, i):
            c[(i, sum(S))] += 1
    return BettiTable(dict(c), module)
