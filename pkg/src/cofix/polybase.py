"""Sparse polynomial base shared by x- and e-polynomials, plus the packed
monomial encoding used by the Groebner kernels."""
from __future__ import annotations

from fractions import Fraction

from .arith import QQ, Ring, ring_from_tag


class SparsePolynomial:
    """Finitely supported map from exponent tuples of length ``n`` to nonzero
    coefficients in ``ring``.  Treated as immutable after construction."""

    __slots__ = ("ring", "n", "terms")

    def __init__(self, ring: Ring, n: int, terms=None):
        self.ring = ring_from_tag(ring)
        self.n = n
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != n:
                raise ValueError(f"exponent {mono} has length != {n}")
            c = self.ring(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
        norm = self.ring.normalize
        self.terms = {m: v for m, v in ((m, norm(c)) for m, c in clean.items()) if v}

    @classmethod
    def _raw(cls, ring, n, terms):
        obj = cls.__new__(cls)
        obj.ring, obj.n, obj.terms = ring, n, terms
        return obj

    @classmethod
    def zero(cls, n, ring=QQ):
        return cls(ring, n)

    @classmethod
    def constant(cls, c, n, ring=QQ):
        return cls(ring, n, {(0,) * n: c})

    @classmethod
    def monomial(cls, alpha, ring=QQ, coeff=1):
        return cls(ring, len(alpha), {tuple(alpha): coeff})

    @classmethod
    def variable(cls, i, n, ring=QQ):
        """The variable with 1-based index ``i``."""
        alpha = [0] * n
        alpha[i - 1] = 1
        return cls(ring, n, {tuple(alpha): 1})

    # -- basics --------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, alpha):
        return self.terms.get(tuple(alpha), self.ring(0))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = type(self).constant(other, self.n, self.ring)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.ring == other.ring and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.n, frozenset(self.terms.items())))

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return type(self).constant(other, self.n, self.ring)
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.ring != self.ring or other.n != self.n:
            raise ValueError("polynomials live in different rings")
        return other

    def _combine(self, other, sign):
        other = self._check(other)
        norm = self.ring.normalize
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = norm(out.get(m, 0) + sign * c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return type(self)._raw(self.ring, self.n, out)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self)._combine(other, 1)

    def __neg__(self):
        norm = self.ring.normalize
        return type(self)._raw(self.ring, self.n, {m: norm(-c) for m, c in self.terms.items()})

    def scale(self, c):
        c = self.ring(c)
        if not c:
            return type(self)._raw(self.ring, self.n, {})
        norm = self.ring.normalize
        return type(self)._raw(self.ring, self.n, {m: norm(c * v) for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._check(other)
        norm = self.ring.normalize
        out = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                m = tuple(x + y for x, y in zip(a, b))
                out[m] = out.get(m, 0) + c * d
        out = {m: norm(c) for m, c in out.items()}
        return type(self)._raw(self.ring, self.n, {m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = type(self).constant(1, self.n, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def change_ring(self, ring):
        """Coerce coefficients into ``ring`` (reduction mod p needs p-local input)."""
        return type(self)(ring, self.n, self.terms)


class MonomialPacker:
    """Packs exponent vectors into ints whose natural order is
    weighted degree, then lexicographic with the first variable most
    significant.  Exponents must stay below ``2**(bits-1)``."""

    def __init__(self, n: int, weights=None, bits: int = 10):
        self.n = n
        self.weights = tuple(weights) if weights is not None else tuple(range(1, n + 1))
        self.bits = bits
        self.shifts = tuple((n - 1 - i) * bits for i in range(n))
        self.deg_shift = n * bits
        self.guard = sum(1 << (s + bits - 1) for s in self.shifts)
        self.limit = 1 << (bits - 1)
        self.field_mask = (1 << bits) - 1

    def pack(self, alpha) -> int:
        m = 0
        d = 0
        for a, s, w in zip(alpha, self.shifts, self.weights):
            if a >= self.limit:
                raise OverflowError("exponent too large for packed monomial")
            m |= a << s
            d += a * w
        return m | (d << self.deg_shift)

    def unpack(self, m: int) -> tuple:
        fm = self.field_mask
        return tuple((m >> s) & fm for s in self.shifts)

    def degree(self, m: int) -> int:
        return m >> self.deg_shift

    def divides(self, a: int, b: int) -> bool:
        return not ((b - a) & self.guard)

    def lcm(self, a: int, b: int) -> int:
        return self.pack(max(x, y) for x, y in zip(self.unpack(a), self.unpack(b)))

    def coprime(self, a: int, b: int) -> bool:
        return not any(x and y for x, y in zip(self.unpack(a), self.unpack(b)))

    def support(self, m: int) -> frozenset:
        return frozenset(i for i, a in enumerate(self.unpack(m)) if a)
