"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 a theorem violation (the
counterexample is written to stderr as JSON).
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import ExitStack
from pathlib import Path

from . import ext
from .constructions import tau_inverse_delta
from .errors import ParseError, TheoremViolation, UsageError
from .modp import FieldSpec
from .harness import AnalysisReport, CorpusSpec, oracle_budget, run_all_checks, run_corpus
from .quiver import Quiver, detect_delta_shape, is_connected, parse_quiver
from .rep import dump_representation

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2


def _load(path: str) -> Quiver:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror or exc}") from None
    try:
        return parse_quiver(text)
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _vec(v) -> str:
    terms = [f"{c}*S({j})" if c > 1 else f"S({j})" for j, c in enumerate(v) if c]
    return " + ".join(terms) or "0"


def _chain_picture(q: Quiver, chain: list[int]) -> str:
    """The chain ``S(j_0) -> ... -> S(j_d)`` with the arrows entering its head
    and leaving its tail, e.g. ``in:2 => [0] -1-> [1] => out:2``."""
    head, tail = chain[0], chain[-1]
    body = " -1-> ".join(f"[{v}]" for v in chain)
    return f"in:{q.in_degree(head)} => {body} => out:{q.out_degree(tail)}"


def _print_report(q: Quiver, rep: AnalysisReport) -> None:
    print(f"quiver: n={q.n}, {q.arrow_count} arrows, connected")
    width = max(len(str(a)) for row in q.adj for a in row)
    for row in q.adj:
        print("  " + " ".join(str(a).rjust(width) for a in row))
    if rep.delta:
        d = rep.delta
        order = " -> ".join(map(str, d["labels"]))
        print(f"Delta shape: Delta({d['n']}, t={d['t']}), m={d['m']}, cycle {order}")
    else:
        print("Delta shape: none")
    print(f"self-injective: {'yes' if rep.self_injective else 'no'}"
          f"{' (simple ring)' if rep.simple_ring else ''}")
    print(f"sinks (projective simples): {rep.sinks or '-'}   sources (injective simples): {rep.sources or '-'}")
    depth = len(rep.profiles[0]) - 1
    print(f"dim Ext^i(S(j), Lambda) for i = 0..{depth}:")
    cell = max(len(str(x)) for pr in rep.profiles for x in pr)
    for j, pr in enumerate(rep.profiles):
        dims = " ".join(str(x).rjust(cell) for x in pr)
        print(f"  S({j}): {dims}   Nakayama degree {rep.nakayama[j]}")
    if rep.chains:
        print("vanishing chains (local structure):")
        for ch in rep.chains:
            if ch["max_d"] > 0:
                print(f"  d={ch['max_d']}: {_chain_picture(q, ch['chain'])}")
    t2 = rep.classification
    print(f"self-injective and not simple: {t2['self_injective_not_simple']}; "
          f"simple vanishing in degrees 1..n: {t2['exists_simple_vanishing_to_n']}"
          f" (witness {t2['witness'] if t2['witness'] is not None else '-'})")
    if rep.unique_vanishing is not None:
        print(f"unique simple vanishing in degrees 1..n-1: S({rep.unique_vanishing})")
    if rep.star_sequence:
        print(f"cokernel of P(n-1) -> I(P(n-1)): {_vec(rep.star_sequence['cokernel'])}")
    if rep.tau_inverse:
        t3 = rep.tau_inverse
        print(f"Tr D S(0): dims {t3['dims']}, length {t3['length']}, c={t3['c']}, d={t3['d']}")
    if rep.oracle.get("ran"):
        primes = ", ".join(f"F_{p}" for p in rep.oracle["primes"])
        status = "agreement" if not rep.oracle["diffs"] else f"{len(rep.oracle['diffs'])} discrepancies"
        print(f"oracle ({primes}): {status}")
    else:
        print("oracle: skipped (over budget)")


def cmd_analyze(args) -> int:
    q = _load(args.file)
    if not is_connected(q):
        raise UsageError(f"{args.file}: quiver is not connected")
    spec = CorpusSpec(n_min=q.n, n_max=q.n, max_mult=0, oracle_budget=oracle_budget(),
                      primes=tuple(args.primes))
    rep = run_all_checks(q, spec, depth=args.depth)
    if args.json:
        print(rep.to_json())
    else:
        _print_report(q, rep)
    return EXIT_OK


def cmd_resolve(args) -> int:
    q = _load(args.file)
    if not 0 <= args.vertex < q.n:
        raise UsageError(f"vertex {args.vertex} out of range 0..{q.n - 1}")
    if args.steps < 0:
        raise UsageError("--steps must be >= 0")
    prof = ext.ext_profile(q, args.vertex, args.steps)
    v = ext.unit(q.n, args.vertex)
    for k in range(args.steps + 1):
        if k:
            v = ext.syzygy_vector(q, v)
        print(f"Omega^{k} S({args.vertex}) = {_vec(v):<24} dim Ext^{k}(S({args.vertex}), Lambda) = {prof.dims[k]}")
    return EXIT_OK


def cmd_taurinv(args) -> int:
    q = _load(args.file)
    shape = detect_delta_shape(q) if is_connected(q) else None
    if shape is None or shape.t == 1:
        raise UsageError(f"{args.file}: not a Delta(n, t) quiver with t > 1")
    FieldSpec(args.field)
    rec = tau_inverse_delta(q, args.field)
    M = rec.module
    print(f"Delta({shape.n}, t={shape.t}), m={shape.m}, over F_{args.field}")
    print(f"M = Tr D S({shape.vertex0}): dims {list(M.dims)}, length {rec.length}")
    print(f"Omega M = {rec.c}*S({shape.vertex0})   top M = {rec.d}*S({shape.last})")
    print(f"dim Ext^i(M, Lambda), i = 0..{q.n + 1}: {rec.ext}")
    for name, ok in rec.checks.items():
        print(f"  [{'PASS' if ok else 'FAIL'}] {name}")
    verdict = "agrees" if rec.length == rec.reference_length else "differs"
    print(f"reference length t^2+t-1 = {rec.reference_length}: {verdict} "
          f"(computed {rec.length}, cokernel count {rec.cokernel_length}, m^2+m-1 = {shape.m ** 2 + shape.m - 1})")
    if args.dump:
        sys.stdout.write(dump_representation(M))
    if not rec.ok:
        raise TheoremViolation("Tr D S(0) checks", {"quiver": [list(r) for r in q.adj], "checks": rec.checks})
    return EXIT_OK


def cmd_enumerate(args) -> int:
    n_min = args.n_min if args.n_min is not None else (1 if args.mode == "exhaustive" else args.n)
    spec = CorpusSpec(
        n_min=n_min,
        n_max=args.n,
        max_mult=args.maxmult,
        mode=args.mode,
        count=args.count,
        seed=args.seed,
        primes=tuple(args.primes),
        oracle_budget=oracle_budget(),
        timing=args.timing,
    )
    with ExitStack() as stack:
        out = stack.enter_context(open(args.out, "w", encoding="utf-8")) if args.out else sys.stdout
        total = 0
        for _ in run_corpus(spec, out):
            total += 1
    print(f"{total} quivers checked, no violations", file=sys.stderr)
    return EXIT_OK


def _primes(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="radsq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one quiver file")
    p.add_argument("file")
    p.add_argument("--depth", type=int, default=None, help="Ext depth (default n+1)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--primes", type=_primes, default=[2, 5])
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("resolve", help="syzygy chain of a simple")
    p.add_argument("file")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("taurinv", help="build Tr D S(0) on a Delta(n, t) quiver")
    p.add_argument("file")
    p.add_argument("--field", type=int, default=5)
    p.add_argument("--dump", action="store_true", help="print the module in dump format")
    p.set_defaults(func=cmd_taurinv)

    p = sub.add_parser("enumerate", help="run every check over a corpus (JSON lines)")
    p.add_argument("--n", type=int, required=True, help="largest vertex count")
    p.add_argument("--n-min", type=int, default=None,
                   help="smallest vertex count (default 1 exhaustive, n random)")
    p.add_argument("--maxmult", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--count", type=int, default=0)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--primes", type=_primes, default=[2, 5])
    p.add_argument("--timing", action="store_true", help="record per-quiver seconds")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TheoremViolation as exc:
        print(json.dumps({"violation": exc.statement, "counterexample": exc.payload}, default=str),
              file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
