"""Partition combinatorics and small permutation groups.

Partitions are plain tuples of length ``n`` (trailing zeros kept), weakly
decreasing.  Permutations are tuples of images of ``0..n-1``.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache

from .arith import check_prime

Partition = tuple
Permutation = tuple

GROUP_ORDER_LIMIT = 10**5


def _partitions(d: int, n: int, maxpart: int):
    if n == 0:
        if d == 0:
            yield ()
        return
    for first in range(min(d, maxpart), -1, -1):
        if first * n < d:
            break
        for rest in _partitions(d - first, n - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _enumerate(d: int, n: int) -> tuple:
    return tuple(_partitions(d, n, d))


def enumerate_partitions(d: int, n: int) -> list:
    """Partitions of ``d`` into at most ``n`` parts, padded to length ``n``.

    Output is lexicographically descending, which is a linear extension of
    the reverse dominance order (dominant partitions first).
    """
    if d < 0 or n < 1:
        raise ValueError("need d >= 0 and n >= 1")
    return list(_enumerate(d, n))


def partition_count(d: int, n: int) -> int:
    if d < 0:
        return 0
    return len(_enumerate(d, n))


def sort_exponents(alpha) -> Partition:
    return tuple(sorted(alpha, reverse=True))


def is_partition(lam) -> bool:
    return all(a >= b for a, b in zip(lam, lam[1:])) and (not lam or lam[-1] >= 0)


def is_special(lam: Partition) -> bool:
    """Special: ``lam[j] <= n-1-j`` (0-based) and each
    consecutive drop is 0 or 1."""
    n = len(lam)
    if any(lam[j] > n - 1 - j for j in range(n)):
        return False
    return all(lam[j] - lam[j + 1] in (0, 1) for j in range(n - 1))


@lru_cache(maxsize=None)
def _special(n: int) -> tuple:
    # a special partition is fixed by its set of drop positions; the last part is 0
    out = []
    for drops in itertools.product((0, 1), repeat=n - 1):
        lam = [0] * n
        for j in range(n - 2, -1, -1):
            lam[j] = lam[j + 1] + drops[j]
        out.append(tuple(lam))
    out.sort(key=lambda lam: (sum(lam), tuple(-x for x in lam)))
    return tuple(out)


def special_partitions(n: int) -> list:
    """All special partitions of length ``n``, by degree then lex descending."""
    if n < 1:
        raise ValueError("n must be positive")
    return list(_special(n))


def multiplicities(lam: Partition) -> Counter:
    return Counter(lam)


def stabilizer_order(lam: Partition) -> int:
    """Order of the stabilizer of ``x^lam`` in S_n."""
    return math.prod(math.factorial(m) for m in Counter(lam).values())


def orbit_size(lam: Partition) -> int:
    return math.factorial(len(lam)) // stabilizer_order(lam)


def orbit(lam) -> set:
    """Distinct rearrangements of ``lam`` (brute force)."""
    return set(itertools.permutations(lam))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True iff ``mu <= lam`` in dominance order."""
    if len(mu) != len(lam):
        raise ValueError("partitions have different lengths")
    if sum(mu) != sum(lam):
        raise ValueError("partitions have different degrees")
    return all(a <= b for a, b in zip(itertools.accumulate(mu), itertools.accumulate(lam)))


def conjugate(lam: Partition) -> tuple:
    """Conjugate partition, without trailing zeros."""
    top = lam[0] if lam else 0
    return tuple(sum(1 for x in lam if x > k) for k in range(top))


def artin_basis(n: int) -> list:
    """Exponent vectors of the sub-staircase monomials, ``0 <= a_i <= n-i``."""
    if n < 1:
        raise ValueError("n must be positive")
    return list(itertools.product(*(range(n - i, -1, -1) for i in range(1, n + 1))))


def staircase_bounded(lam: Partition) -> bool:
    n = len(lam)
    return all(lam[j] <= n - 1 - j for j in range(n))


# -- permutations -----------------------------------------------------------

def perm_from_cycles(n: int, cycles) -> Permutation:
    """Build a permutation of ``0..n-1`` from 1-based cycles."""
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"cycle entry out of range 1..{n}")
            img[a - 1] = b - 1
    if sorted(img) != list(range(n)):
        raise ValueError("cycles do not define a permutation")
    return tuple(img)


def compose(s: Permutation, t: Permutation) -> Permutation:
    """``s o t``: apply ``t`` first."""
    return tuple(s[t[i]] for i in range(len(t)))


def inverse(s: Permutation) -> Permutation:
    out = [0] * len(s)
    for i, j in enumerate(s):
        out[j] = i
    return tuple(out)


def adjacent_transpositions(n: int) -> list:
    return [perm_from_cycles(n, [(i, i + 1)]) for i in range(1, n)]


@dataclass(frozen=True)
class PermGroupSpec:
    """A permutation group on ``{0..degree-1}`` given by generators."""

    degree: int
    generators: tuple = field(default_factory=tuple)

    def __post_init__(self):
        gens = tuple(tuple(g) for g in self.generators)
        for g in gens:
            if sorted(g) != list(range(self.degree)):
                raise ValueError(f"{g} is not a permutation of 0..{self.degree - 1}")
        object.__setattr__(self, "generators", gens)

    def elements(self, limit: int = GROUP_ORDER_LIMIT) -> list:
        """All group elements by breadth-first closure."""
        ident = tuple(range(self.degree))
        seen = {ident}
        queue = deque([ident])
        while queue:
            g = queue.popleft()
            for s in self.generators:
                h = compose(s, g)
                if h not in seen:
                    seen.add(h)
                    if len(seen) > limit:
                        raise OverflowError(f"group order exceeds limit {limit}")
                    queue.append(h)
        return sorted(seen)

    def order(self, limit: int = GROUP_ORDER_LIMIT) -> int:
        return len(self.elements(limit))

    def embed(self, m: int) -> "PermGroupSpec":
        """Image under the natural inclusion S_degree -> S_m."""
        if m < self.degree:
            raise ValueError("can only embed into a larger symmetric group")
        tail = tuple(range(self.degree, m))
        return PermGroupSpec(m, tuple(g + tail for g in self.generators))

    def fixed_points(self) -> list:
        return [i for i in range(self.degree) if all(g[i] == i for g in self.generators)]


def symmetric_group(n: int) -> PermGroupSpec:
    return PermGroupSpec(n, tuple(adjacent_transpositions(n)))


def sylow_generators(n: int, p: int) -> PermGroupSpec:
    """A Sylow p-subgroup of S_n for ``n < p**2``: disjoint p-cycles on
    consecutive blocks, fixing the trailing ``n mod p`` points."""
    check_prime(p)
    if n < 1:
        raise ValueError("n must be positive")
    if n >= p * p:
        raise ValueError(f"n={n} >= p^2={p * p}: Sylow subgroup is not a product of p-cycles")
    gens = [perm_from_cycles(n, [tuple(range(k * p + 1, (k + 1) * p + 1))]) for k in range(n // p)]
    return PermGroupSpec(n, tuple(gens))


def factorial_valuation(n: int, p: int) -> int:
    """Legendre's formula for v_p(n!)."""
    v, q = 0, p
    while q <= n:
        v += n // q
        q *= p
    return v
