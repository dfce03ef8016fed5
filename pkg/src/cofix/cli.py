"""Command line: ``cofix {ideal,verify,betti,conjecture}``.

Exit codes: 0 success, 1 claim false, 2 usage error, 3 homological cap hit.
Standard output carries only the result; progress goes to standard error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from importlib import resources

from . import transfer_ideal as ti
from .arith import is_prime
from .cofixed import annihilator_of_one, graded_beta0
from .resolve import (BettiTable, betti_multisets, cofixed_module_betti, multisets_equal_mod)

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
CLAIMS = ("prop42", "main", "fp-image", "change-of-rings", "thm51")


class UsageError(Exception):
    pass


def _data_text(name: str) -> str:
    return resources.files("cofix").joinpath("data", name).read_text()


def golden_table(p: int, n: int) -> str | None:
    try:
        return _data_text(f"betti_p{p}_n{n}.txt")
    except FileNotFoundError:
        return None


def golden_multisets(p: int, n: int) -> dict | None:
    data = json.loads(_data_text("multisets.json"))
    for t in data["tables"]:
        if t["p"] == p and t["n"] == n:
            return t["rows"]
    return None


def _log(msg: str):
    print(msg, file=sys.stderr, flush=True)


def _parse_ints(text: str) -> list:
    out = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            a, b = part.split("-")
            out.extend(range(int(a), int(b) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise UsageError("empty list")
    return out


def _check_p(p):
    if p is None:
        raise UsageError("--p is required")
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# -- commands ---------------------------------------------------------------------

def cmd_ideal(args) -> int:
    _check_p(args.p)
    try:
        J = ti.candidate_Jn(args.n, args.p)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.format == "json":
        _emit(_dump(J.to_json()), args.out)
    else:
        _emit(J.render() + "\n", args.out)
    return EXIT_OK


def _verify(claim: str, p: int, n: int, max_degree):
    if claim == "prop42":
        certs = ti.verify_prop42(p, n)
        return True, {"certificates": [c.to_json() for c in certs]}
    if claim == "main":
        ok, rep = ti.verify_main_theorem(p, n)
        rep.pop("timings", None)
        rep["certificates"] = [dict(rep.pop("p_in_Jn"), ideal="J_n"),
                               dict(rep.pop("p_in_transfer_ideal"), ideal="transfer")]
        return ok, rep
    if claim == "fp-image":
        return ti.verify_fp_transfer_image(p, n)
    if claim == "change-of-rings":
        return ti.change_of_rings_check(p, n)
    if claim == "thm51":
        ti.check_range(n, p)
        D = max_degree if max_degree is not None else 2 * p + 2
        rep = annihilator_of_one(n, p, D)
        Jt = ti.candidate_Jtilde(n, p)
        beta0 = graded_beta0(n, p)
        expected = sorted([0] + Jt.degrees())
        found = sorted(d for d, c in beta0.items() for _ in range(c))
        ok = rep.matches and found == expected
        info = rep.to_json()
        info.update({"annihilator_ideal": Jt.render(), "beta0_degrees": found,
                     "expected_beta0_degrees": expected})
        return ok, info
    raise UsageError(f"unknown claim {claim}")


def cmd_verify(args) -> int:
    _check_p(args.p)
    if args.claim not in CLAIMS:
        raise UsageError(f"unknown claim {args.claim}")
    t0 = time.perf_counter()
    try:
        ok, info = _verify(args.claim, args.p, args.n, args.max_degree)
        witness = None
    except ti.VerificationError as exc:
        ok, info, witness = False, {}, {"error": str(exc), **{k: str(v) for k, v in exc.context.items()}}
    except ValueError as exc:
        raise UsageError(str(exc))
    elapsed = time.perf_counter() - t0
    report = {"p": args.p, "n": args.n, "claim": args.claim,
              "status": "verified" if ok else "failed",
              "certificates": info.pop("certificates", []), "details": info}
    if witness:
        report["witness"] = witness
    if args.timings:
        report["timings"] = {"total_seconds": round(elapsed, 3)}
    _log(f"verify {args.claim} p={args.p} n={args.n}: {report['status']} ({elapsed:.2f}s)")
    _emit(_dump(report), args.out)
    return EXIT_OK if ok else EXIT_FALSE


def _betti_job(job):
    p, n, h, method = job
    t0 = time.perf_counter()
    T = cofixed_module_betti(n, p, h, method)
    return T, time.perf_counter() - t0


def _compute_tables(p, ns, h, method):
    jobs = [(p, n, h, method) for n in ns]
    threads = int(os.environ.get("COFIX_THREADS", "1") or 1)
    for n in ns:
        _log(f"resolving cofixed module p={p} n={n}")
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_betti_job, jobs))
    else:
        results = [_betti_job(j) for j in jobs]
    for n, (_, t) in zip(ns, results):
        _log(f"  p={p} n={n} done in {t:.2f}s")
    return {n: T for n, (T, _) in zip(ns, results)}


def _multiset_rows(T: BettiTable) -> str:
    return "".join(f"{i}: {', '.join(map(str, A))}\n" for i, A in betti_multisets(T).items())


def check_golden(p: int, n: int, T: BettiTable) -> list:
    """Differences between a computed table and the stored printed data."""
    problems = []
    text = golden_table(p, n)
    if text is not None and T.render_text() != text:
        problems.append("text table differs from the stored table")
    rows = golden_multisets(p, n)
    if rows is not None:
        A = betti_multisets(T)
        for i, row in rows.items():
            got = A.get(int(i), [])
            if sorted(row["A"]) != got:
                problems.append(f"A_{i}: stored {sorted(row['A'])}, computed {got}")
            for m, red in row["mod"].items():
                m = int(m)
                if isinstance(red, dict):
                    want = sorted(int(v) for v, c in red.items() for _ in range(c))
                else:
                    want = sorted(red)
                have = sorted(x % m for x in got)
                if want != have:
                    problems.append(f"A_{i} mod {m}: stored {want}, computed {have}")
        extra = set(A) - {int(i) for i in rows}
        if extra:
            problems.append(f"computed homological degrees {sorted(extra)} absent from stored data")
    if text is None and rows is None:
        problems.append(f"no stored data for p={p}, n={n}")
    return problems


def cmd_betti(args) -> int:
    _check_p(args.p)
    if args.n is None or args.n < 1:
        raise UsageError("--n must be a positive integer")
    T = _compute_tables(args.p, [args.n], args.max_homological, args.method)[args.n]
    if args.format == "json":
        out = T.to_json()
        if not T.partial:
            out["multisets"] = {str(i): A for i, A in betti_multisets(T).items()}
        _emit(_dump(out), args.out)
    elif args.format == "multisets":
        _emit(_multiset_rows(T) if not T.partial else "", args.out)
    else:
        _emit(T.render_text(), args.out)
    if T.partial:
        _log("homological cap reached before the resolution ended")
        return EXIT_CAP
    if args.check_golden:
        problems = check_golden(args.p, args.n, T)
        for msg in problems:
            _log(f"golden mismatch: {msg}")
        return EXIT_FALSE if problems else EXIT_OK
    return EXIT_OK


def conjecture_matrix(p: int, tables: dict, moduli: list) -> list:
    out = []
    ns = sorted(tables)
    for a_idx, a in enumerate(ns):
        for b in ns[a_idx + 1:]:
            Aa, Ab = betti_multisets(tables[a]), betti_multisets(tables[b])
            for m in moduli:
                per = {str(i): multisets_equal_mod(Aa.get(i, []), Ab.get(i, []), m)
                       for i in sorted(set(Aa) | set(Ab))}
                out.append({"n": a, "m": b, "mod": m, "per_i": per, "all_equal": all(per.values())})
    return out


def cmd_conjecture(args) -> int:
    _check_p(args.p)
    ns = _parse_ints(args.n_range if args.n_range else (args.n_list or ""))
    moduli = _parse_ints(args.mod) if args.mod else [args.p]
    if any(m <= 0 for m in moduli):
        raise UsageError("moduli must be positive")
    tables = _compute_tables(args.p, sorted(set(ns)), args.max_homological, args.method)
    if any(T.partial for T in tables.values()):
        _log("homological cap reached before a resolution ended")
        return EXIT_CAP
    rows = conjecture_matrix(args.p, tables, moduli)
    if args.format == "json":
        _emit(_dump({"p": args.p, "n": sorted(tables), "moduli": moduli, "comparisons": rows}), args.out)
    else:
        lines = []
        for r in rows:
            cells = " ".join(f"i={i}:{'=' if v else 'x'}" for i, v in r["per_i"].items())
            verdict = "equal" if r["all_equal"] else "unequal"
            lines.append(f"n={r['n']} vs n={r['m']} mod {r['mod']}: {verdict}  [{cells}]")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


# -- argument parsing ---------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="cofix", description="Cofixed spaces of symmetric groups: ideals, verifiers, Betti tables.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, n_required=True):
        sp.add_argument("--p", type=int, required=True, help="prime")
        if n_required:
            sp.add_argument("--n", type=int, required=True, help="number of variables")
        sp.add_argument("--out", metavar="PATH", help="write the result here instead of stdout")

    sp = sub.add_parser("ideal", help="print the generators of J_n")
    common(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_ideal)

    sp = sub.add_parser("verify", help="verify a claim and print a JSON report")
    common(sp)
    sp.add_argument("--claim", required=True, choices=CLAIMS)
    sp.add_argument("--max-degree", type=int, default=None, help="degree cap for the annihilator check")
    sp.add_argument("--format", choices=("json",), default="json")
    sp.add_argument("--timings", action="store_true", help="include wall-clock timings in the report")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("betti", help="Betti table of the cofixed module")
    common(sp)
    sp.add_argument("--max-homological", type=int, default=None)
    sp.add_argument("--format", choices=("text", "json", "multisets"), default="text")
    sp.add_argument("--method", choices=("auto", "direct", "splitting"), default="auto")
    sp.add_argument("--check-golden", action="store_true", help="compare with the stored printed data")
    sp.set_defaults(func=cmd_betti)

    sp = sub.add_parser("conjecture", help="compare A_i multisets across n modulo m")
    common(sp, n_required=False)
    sp.add_argument("--n", dest="n_list", help="comma-separated values of n")
    sp.add_argument("--n-range", help="range of n such as 6-7")
    sp.add_argument("--mod", help="comma-separated moduli (default: p)")
    sp.add_argument("--max-homological", type=int, default=None)
    sp.add_argument("--method", choices=("auto", "direct", "splitting"), default="auto")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_conjecture)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cofix: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
