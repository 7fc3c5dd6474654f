"""``hm`` command-line front end.  Exit codes: 0 ok, 1 verification failure, 2 bad input."""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import Optional, Sequence

from hmcy import chern, eta, galois, nodes, report
from hmcy.fp import BadPrimeError, check_prime, make_context
from hmcy.varieties import RootUnavailableError

EXIT_OK, EXIT_MISMATCH, EXIT_BAD_INPUT = 0, 1, 2

VARIETIES = {"g": "G", "f": "F", "e": "E", "e1": "E1", "e2": "E2"}


class UsageError(Exception):
    pass


def _prime_list(text: str) -> list[int]:
    try:
        primes = [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"cannot parse prime list {text!r}")
    if not primes:
        raise UsageError("empty prime list")
    for p in primes:
        check_prime(p)
    return sorted(set(primes))


def _threads(args) -> int:
    return args.threads or os.cpu_count() or 1


def cmd_count(args) -> int:
    ctx = make_context(check_prime(args.prime))
    cache = report.ResultCache(args.cache) if args.cache else None
    rec = report.get_count(ctx, VARIETIES[args.variety], cache, _threads(args))
    print(rec.count)
    logging.info("%s over F_%d: %d points (%s, %.2fs)", rec.variety, rec.p, rec.count, rec.method, rec.elapsed)
    return EXIT_OK


def _verify_cache(cache: report.ResultCache, primes: list[int], threads: int) -> bool:
    ok = True
    for p in primes:
        ctx = make_context(p)
        for variety, stored in sorted(cache.counts.get(str(p), {}).items()):
            fresh = report._COUNTERS[variety](ctx, threads).count
            if fresh != stored:
                print(f"cache mismatch: p={p} {variety}: cached {stored}, recomputed {fresh}", file=sys.stderr)
                ok = False
    return ok


def cmd_report(args) -> int:
    primes = _prime_list(args.primes)
    cache = report.ResultCache(args.cache) if args.cache else None
    threads = _threads(args)
    reps = report.analyze(primes, cache=cache, threads=threads)
    sys.stdout.write(report.render(reps, args.format))
    code = EXIT_OK
    if any(r.status == galois.MISMATCH for r in reps):
        code = EXIT_MISMATCH
    if args.golden:
        for r in reps:
            for d in report.compare_golden(r):
                tag = "expected typo" if d.known_typo else "MISMATCH"
                print(f"golden p={d.p} {d.field}: table {d.expected}, computed {d.actual} [{tag}]", file=sys.stderr)
                if not d.known_typo:
                    code = EXIT_MISMATCH
    if args.verify_cache and cache is not None and not _verify_cache(cache, primes, threads):
        code = EXIT_MISMATCH
    return code


def cmd_modularity(args) -> int:
    if args.check_T:
        cov = galois.t_coverage(galois.TRACE_TEST_PRIMES)
        n = len(galois.NON_IDENTITY)
        print(f"{len(cov.covered)}/{n} classes covered")
        for q in galois.TRACE_TEST_PRIMES:
            img = galois.frobenius_image(q).as_tuple()
            print(f"  p={q:<4d} p mod 40={q % 40:<3d} ((-1/p),(2/p),(5/p)) = {img}")
        for c in sorted(cov.missing):
            print(f"  missing {c}")
        return EXIT_OK if cov.ok else EXIT_MISMATCH
    if not args.primes:
        raise UsageError("modularity needs --primes or --check-T")
    cache = report.ResultCache(args.cache) if args.cache else None
    reps = report.analyze(_prime_list(args.primes), cache=cache, threads=_threads(args))
    for r in reps:
        print(f"p={r.p}: trace_h3={r.trace_h3} trace_W={r.trace_W} trace_V={r.trace_V} a_p={r.a_p} {r.status}")
    return EXIT_MISMATCH if any(r.status == galois.MISMATCH for r in reps) else EXIT_OK


def cmd_nodes(args) -> int:
    ctx = make_context(check_prime(args.prime))
    recs = nodes.enumerate_nodes(ctx)
    defined = [r for r in recs if r.defined]
    inv = nodes.inventory(ctx, recs)
    parts = [f"{len(recs)} nodes", f"{len(defined)} defined over F_{ctx.p}"]
    code = EXIT_OK
    if args.verify:
        sing = sum(nodes.verify_node_singular(r, ctx) for r in defined)
        parts.insert(1, f"{sing} singular-verified")
        parts.pop()
        if sing != len(defined):
            code = EXIT_MISMATCH
        if (inv.sigma_defined, inv.tau_defined, inv.regular_defined) != nodes.expected_defined(ctx.p):
            code = EXIT_MISMATCH
    rational = sum(r.ruling_rational for r in defined)
    parts.append(f"{rational} rulings rational")
    print(", ".join(parts))
    print(f"sigma/tau/regular defined: {inv.sigma_defined}/{inv.tau_defined}/{inv.regular_defined}; "
          f"blowup correction {inv.correction_total}")
    return code


def cmd_form(args) -> int:
    if args.coeff is not None:
        s = eta.expand_f(args.coeff)
        print(s[args.coeff])
        return EXIT_OK
    if args.upto is None or args.upto < 1:
        raise UsageError("form needs --upto N (N >= 1) or --coeff n")
    s = eta.expand_f(args.upto)
    print(" ".join(str(s[n]) for n in range(1, args.upto + 1)))
    return EXIT_OK


def cmd_chern(args) -> int:
    chi_sing, chi_res = chern.euler_characteristic()
    c = chern.chern_total()
    sign = lambda n: str(n).replace("-", "\u2212")  # noqa: E731
    print(f"χ(X') = {sign(chi_sing)}, χ(X̃) = {sign(chi_res)}")
    print(f"c2 = {c.degree_part(2)}, c3 = {c.degree_part(3)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hm", description="Point counts and trace checks for the Horrocks-Mumford quintic.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--threads", type=int, default=None, help="worker threads (default: all cores)")
        sp.add_argument("--cache", default=None, help="JSON cache of point counts")

    sp = sub.add_parser("count", help="count F_p-points of one variety")
    sp.add_argument("--variety", choices=sorted(VARIETIES), required=True)
    sp.add_argument("--prime", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("report", help="reproduce the per-prime table")
    sp.add_argument("--primes", required=True, help="comma-separated primes")
    sp.add_argument("--format", choices=("md", "csv", "json"), default="md")
    sp.add_argument("--golden", action="store_true", help="compare with the embedded reference table")
    sp.add_argument("--verify-cache", action="store_true", help="recompute cached counts and compare")
    common(sp)
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("modularity", help="compare trace on V with a_p")
    sp.add_argument("--primes")
    sp.add_argument("--check-T", action="store_true", help="check Frobenius class coverage of the test set")
    common(sp)
    sp.set_defaults(func=cmd_modularity)

    sp = sub.add_parser("nodes", help="enumerate the 60 nodes over F_p")
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--verify", action="store_true", help="check singularity and definedness table")
    sp.set_defaults(func=cmd_nodes)

    sp = sub.add_parser("form", help="coefficients of the weight-4 level-5 eta product")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--upto", type=int)
    g.add_argument("--coeff", type=int)
    sp.set_defaults(func=cmd_form)

    sp = sub.add_parser("chern", help="Chern classes and Euler characteristics")
    sp.set_defaults(func=cmd_chern)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_BAD_INPUT
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if getattr(args, "threads", None) is not None and args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        return args.func(args)
    except (BadPrimeError, RootUnavailableError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
