"""Transfer ideals of S_n and the explicit candidates J_n, J~_n.

For p <= n < 2p the image of the S_n transfer in Z_(p)[e] is compared with
J_n = <p, e_j e_p - e_{p+j} (1 <= j <= n-p), e_j (n-p < j < p)>.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from .arith import GF, QQ, check_prime, is_p_local, valuation_p
from .combin import special_partitions, stabilizer_order
from .epoly import (EIdeal, EPolynomial, buchberger, certify_contains_p, e, ideals_equal_mod_p,
                    is_regular_sequence, weighted_degree)
from .polyx import SymPolynomial, evaluate, expand_m_basis, to_elementary, transfer_monomial


class VerificationError(Exception):
    """A claimed identity failed; ``context`` carries the witness."""

    def __init__(self, message, **context):
        super().__init__(message)
        self.context = context


def check_range(n: int, p: int):
    check_prime(p)
    if not p <= n < 2 * p:
        raise ValueError(f"need p <= n < 2p, got p={p}, n={n}")


@dataclass
class TransferCertificate:
    """target = sum of coeff * Tr(x^lam) over ``combination``."""

    target: EPolynomial
    combination: list
    p: int
    note: str = ""

    def recompute(self) -> EPolynomial:
        n = self.target.n
        total = EPolynomial.zero(n, QQ)
        for coeff, lam in self.combination:
            total = total + to_elementary(transfer_monomial(lam)).scale(coeff)
        return total

    def check(self) -> bool:
        local = all(is_p_local(c, self.p) for c, _ in self.combination)
        return local and self.recompute() == self.target

    def to_json(self) -> dict:
        return {"target": self.target.render(),
                "combination": [{"coefficient": str(c), "partition": list(lam),
                                 "valuation": int(valuation_p(c, self.p))} for c, lam in self.combination],
                "note": self.note}


def transfer_ideal_generators(n: int, p: int | None = None) -> EIdeal:
    """Transfers of all special monomials, written in the e-basis.  Tagged as
    a Z_(p)-ideal when ``p`` is given."""
    gens = tuple(to_elementary(transfer_monomial(lam)) for lam in special_partitions(n))
    return EIdeal(n, QQ, gens, p)


def fp_transfer_generators(n: int, p: int) -> EIdeal:
    """Transfers of special monomials computed over F_p; those with
    stabilizer order divisible by p vanish and are skipped."""
    F = GF(p)
    gens = []
    for lam in special_partitions(n):
        a = stabilizer_order(lam) % p
        if a:
            gens.append(to_elementary(SymPolynomial(F, n, {lam: a})))
    return EIdeal(n, F, tuple(gens))


def _jn_generators(n: int, p: int, ring) -> list:
    i = n - p
    gens = [e(j, n, ring) * e(p, n, ring) - e(p + j, n, ring) for j in range(1, i + 1)]
    gens += [e(j, n, ring) for j in range(i + 1, p)]
    return gens


def candidate_Jn(n: int, p: int) -> EIdeal:
    check_range(n, p)
    gens = [EPolynomial.constant(p, n, QQ)] + _jn_generators(n, p, QQ)
    return EIdeal(n, QQ, tuple(gens), p)


def candidate_Jtilde(n: int, p: int) -> EIdeal:
    check_range(n, p)
    return EIdeal(n, GF(p), tuple(_jn_generators(n, p, GF(p))))


def prop42_partition(p: int, n: int, j: int, k: int) -> tuple:
    """(2^k, 1^(p+j-2k), 0^(n-p-j+k))."""
    i = n - p
    return (2,) * k + (1,) * (p + j - 2 * k) + (0,) * (i - j + k)


def prop42_mcoefficient(p: int, j: int, k: int) -> int:
    if k == 0:
        return math.comb(p + j, j) - 1
    return math.comb(p + j - 2 * k, j - k)


def verify_prop42(p: int, n: int) -> list:
    """One certificate per generator of J_n, each checked against a brute-force
    x-expansion and recomputed exactly."""
    check_range(n, p)
    i = n - p
    certs = []
    nf = math.factorial(n)
    zero = (0,) * n
    c = Fraction(p, nf)
    if valuation_p(c, p) < 0:
        raise VerificationError("p/n! is not p-local", coefficient=str(c))
    certs.append(TransferCertificate(EPolynomial.constant(p, n, QQ), [(c, zero)], p, "constant"))
    for j in range(1, i + 1):
        target = e(j, n) * e(p, n) - e(p + j, n)
        brute = expand_m_basis(evaluate(target))
        family = {prop42_partition(p, n, j, k): k for k in range(j + 1)}
        extra = set(brute.coeffs) - set(family)
        if extra:
            raise VerificationError("unexpected m-terms", j=j, partitions=sorted(extra))
        combo = []
        for lam, k in family.items():
            b = brute.coefficient(lam)
            expected = prop42_mcoefficient(p, j, k)
            if b != expected:
                raise VerificationError("m-coefficient mismatch", j=j, k=k, partition=lam,
                                        found=str(b), expected=expected)
            a = stabilizer_order(lam)
            if a != math.factorial(k) * math.factorial(p + j - 2 * k) * math.factorial(i - j + k):
                raise VerificationError("stabilizer order mismatch", j=j, k=k, partition=lam)
            coeff = Fraction(b, a)
            if valuation_p(coeff, p) < 0:
                raise VerificationError("coefficient not p-local", j=j, k=k, partition=lam,
                                        coefficient=str(coeff))
            if coeff:
                combo.append((coeff, lam))
        certs.append(TransferCertificate(target, combo, p, f"j={j}"))
    for j in range(i + 1, p):
        lam = (1,) * j + (0,) * (n - j)
        coeff = Fraction(1, math.factorial(j) * math.factorial(n - j))
        if valuation_p(coeff, p) < 0:
            raise VerificationError("coefficient not p-local", j=j, partition=lam)
        certs.append(TransferCertificate(e(j, n), [(coeff, lam)], p, f"e{j}"))
    for cert in certs:
        if not cert.check():
            raise VerificationError("certificate does not recompute", target=cert.target.render())
    return certs


def verify_main_theorem(p: int, n: int) -> tuple:
    """Check that the transfer ideal equals J_n in Z_(p)[e]; returns ``(ok, report)``."""
    check_range(n, p)
    report = {"p": p, "n": n, "claim": "main", "timings": {}}
    t0 = time.perf_counter()
    T = transfer_ideal_generators(n, p)
    J = candidate_Jn(n, p)
    report["timings"]["build"] = time.perf_counter() - t0
    report["p_in_transfer_ideal"] = certify_contains_p(T, p)
    report["p_in_Jn"] = certify_contains_p(J, p)
    t0 = time.perf_counter()
    equal = ideals_equal_mod_p(T, J, p)
    report["timings"]["ideal_equality"] = time.perf_counter() - t0
    report["ideals_equal"] = equal
    Jt = candidate_Jtilde(n, p)
    t0 = time.perf_counter()
    regular = is_regular_sequence(list(Jt.generators))
    report["timings"]["regular_sequence"] = time.perf_counter() - t0
    report["regular_sequence"] = regular
    dim = buchberger(Jt).krull_dimension()
    report["krull_dimension_Jtilde"] = dim
    degs = J.degrees()
    report["generator_degrees"] = degs
    report["degrees_mod_p"] = sorted(d % p for d in degs)
    counts_ok = (len(Jt.generators) == p - 1 and dim == n - (p - 1)
                 and sorted(d % p for d in degs) == list(range(p)))
    report["p_drop_accounting"] = counts_ok
    report["generators"] = J.render()
    ok = equal and regular and counts_ok
    report["status"] = "verified" if ok else "failed"
    return ok, report


def verify_fp_transfer_image(p: int, n: int) -> tuple:
    """Image of the F_p transfer against J~_n; returns ``(ok, info)``."""
    check_range(n, p)
    img = fp_transfer_generators(n, p)
    Jt = candidate_Jtilde(n, p)
    G1, G2 = buchberger(img), buchberger(Jt)
    ok = G1.basis == G2.basis
    info = {"p": p, "n": n, "claim": "fp-image", "image_basis": G1.render(),
            "Jtilde_basis": G2.render(), "krull_dimension": G1.krull_dimension(),
            "status": "verified" if ok else "failed"}
    return ok, info


def change_of_rings_map(n: int, p: int) -> dict:
    """Images of e_1..e_n under e_n -> e_{n-p} e_p - e_{n-p}, e_j -> e_j."""
    F = GF(p)
    m = n - 1
    images = {j: e(j, m, F) for j in range(1, n)}
    images[n] = e(n - p, m, F) * e(p, m, F) - e(n - p, m, F)
    return images


def _mod_p_homogeneous(f: EPolynomial, p: int, residue: int) -> bool:
    return all(weighted_degree(a) % p == residue % p for a in f.terms)


def change_of_rings_check(p: int, n: int) -> tuple:
    """The substitution maps J~_n onto J~_{n-1} and respects the Z/p grading."""
    check_prime(p)
    if not p + 1 <= n <= 2 * p - 1:
        raise ValueError(f"need p+1 <= n <= 2p-1, got p={p}, n={n}")
    images = change_of_rings_map(n, p)
    graded = all(_mod_p_homogeneous(images[j], p, j) for j in images)
    Jt = candidate_Jtilde(n, p)
    mapped = EIdeal(n - 1, GF(p), tuple(g.substitute(images, n - 1) for g in Jt.generators))
    target = candidate_Jtilde(n - 1, p)
    equal = buchberger(mapped).basis == buchberger(target).basis
    ok = graded and equal
    info = {"p": p, "n": n, "claim": "change-of-rings", "image": mapped.render(),
            "target": target.render(), "grading_preserved": graded, "ideals_equal": equal,
            "status": "verified" if ok else "failed"}
    return ok, info
