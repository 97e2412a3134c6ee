"""Command-line front end.

Exit status: 0 on success or a verified identity, 1 on a counterexample,
2 on malformed input or bad options.  ``KMEASURE_WORKERS`` sets the process
pool size used by ``count`` (default 1, i.e. in-process).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .codecs import format_trace, get_scheme, trace
from .gaps import ModularDiagram, check_genschur, genschur_counts, schur_counts
from .partitions import (
    durfee_side,
    format_partition,
    from_parts,
    hook_lengths,
    k_measure,
    parse_partition,
    residue_counts,
    size,
)
from .verify import IDENTITIES, MUTATIONS, IdentityParams, verify_identity
from .words import (
    OrderSpec,
    Word,
    aasc,
    amaj,
    basc,
    bmaj,
    des_s,
    inversions,
    maj,
    parse_symbols,
)

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(payload: dict, text: str, fmt: str):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    elif fmt == "tsv":
        keys = sorted(payload)
        print("\t".join(keys))
        print("\t".join(str(payload[k]) for k in keys))
    else:
        print(text)


def _parse_partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as e:
        raise UsageError(f"bad partition {text!r}: {e}") from None


def _parse_word(text: str, alphabet: int) -> Word:
    try:
        return Word(parse_symbols(text), alphabet)
    except ValueError as e:
        raise UsageError(f"bad word {text!r}: {e}") from None


def _scheme(args):
    try:
        return get_scheme(args.scheme, args.k)
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_encode(args) -> int:
    sch = _scheme(args)
    parts = _parse_partition(args.partition)
    if sch.distinct and len(set(parts)) != len(parts):
        raise UsageError(f"scheme {sch.name} needs distinct parts, got {format_partition(parts)}")
    w = sch.encode(parts, args.k)
    _emit(
        {"scheme": sch.name, "k": args.k, "partition": format_partition(parts), "word": str(w)},
        str(w),
        args.format,
    )
    return EXIT_OK


def cmd_decode(args) -> int:
    sch = _scheme(args)
    w = _parse_word(args.word, sch.alphabet(args.k))
    try:
        parts = sch.decode(w)
    except ValueError as e:
        raise UsageError(f"cannot decode {args.word!r}: {e}") from None
    out = format_partition(parts)
    _emit({"scheme": sch.name, "k": args.k, "word": str(w), "partition": out}, out, args.format)
    return EXIT_OK


def cmd_stats(args) -> int:
    if (args.partition is None) == (args.word is None):
        raise UsageError("give exactly one of --partition or --word")
    if args.partition is not None:
        parts = _parse_partition(args.partition)
        f = from_parts(parts)
        row = {
            "size": size(f),
            "length": len(parts),
            f"mu_{args.k}": k_measure(f, args.k),
            "durfee": durfee_side(parts),
            "hooks": ",".join(map(str, hook_lengths(parts))),
            f"residues_mod_{args.k}": ",".join(map(str, residue_counts(parts, args.k))),
        }
    else:
        w = _parse_word(args.word, args.k)
        nat = OrderSpec.natural(args.k)
        row = {
            "length": len(w),
            "amaj": amaj(w),
            "aasc": aasc(w),
            "bmaj": bmaj(w),
            "basc": basc(w),
            "maj": maj(w, nat),
            "des": des_s(w, nat),
            "inv": inversions(w, nat),
        }
    text = "\n".join(f"{k}\t{v}" for k, v in row.items())
    _emit(row, text, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    params = IdentityParams(
        k=args.k, qmax=args.qmax, comp=args.comp, s=args.s, r=args.r,
        M=args.M, a=args.a, b=args.b, mutate=args.mutate,
    )
    try:
        report = verify_identity(args.identity, params)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.format == "json":
        print(json.dumps(report.to_json(args.timing), sort_keys=True))
    elif args.format == "tsv":
        mm = report.mismatch or {}
        print("identity\tstatus\tmismatch_exponents\tlhs\trhs")
        print(f"{report.identity}\t{report.status}\t{mm.get('exponents', '')}\t"
              f"{mm.get('lhs', '')}\t{mm.get('rhs', '')}")
    else:
        print(report.to_text(args.timing))
    return EXIT_OK if report.verified else EXIT_COUNTEREXAMPLE


def _count_row(job):
    table, n, M, a, b = job
    if table == "schur":
        return (n,) + schur_counts(n, cap=max(n, 60))
    return (n,) + genschur_counts(n, M, a, b, cap=max(n, 60))


def cmd_count(args) -> int:
    if args.table == "genschur":
        try:
            check_genschur(args.M, args.a, args.b)
        except ValueError as e:
            raise UsageError(str(e)) from None
    jobs = [(args.table, n, args.M, args.a, args.b) for n in range(args.nmax + 1)]
    workers = int(os.environ.get("KMEASURE_WORKERS", "1") or 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_count_row, jobs))
    else:
        rows = [_count_row(j) for j in jobs]
    all_equal = all(s == t for _, s, t in rows)
    if args.format == "json":
        print(json.dumps({"table": args.table, "rows": [list(r) for r in rows],
                          "all_equal": all_equal}, sort_keys=True))
    else:
        print("n\ts_n\tt_n\tequal")
        for n, s, t in rows:
            print(f"{n}\t{s}\t{t}\t{'yes' if s == t else 'no'}")
    return EXIT_OK if all_equal else EXIT_COUNTEREXAMPLE


def cmd_diagram(args) -> int:
    parts = _parse_partition(args.partition)
    d = ModularDiagram.of(parts, args.k)
    readoff = "".join(map(str, d.readoff())) if args.k + 1 <= 9 else ",".join(map(str, d.readoff()))
    payload = {"k": args.k, "partition": format_partition(parts), "grid": d.render(),
               "readoff": readoff, "code": str(d.code())}
    text = f"{d.render()}\nreadoff: {readoff}\ncode: {d.code()}"
    _emit(payload, text.lstrip("\n"), args.format)
    return EXIT_OK


def cmd_trace(args) -> int:
    _scheme(args)
    parts = _parse_partition(args.partition)
    try:
        rows = trace(args.scheme, parts, args.k)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.format == "json":
        print(json.dumps([r.__dict__ for r in rows], sort_keys=True))
    else:
        print(format_trace(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kmeasure", description="Partition/word encodings and identity checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, k_default=2):
        p.add_argument("--k", type=int, default=k_default)
        p.add_argument("--format", choices=("text", "json", "tsv"), default="text")

    schemes = ("alpha", "beta", "delta", "theta")
    p = sub.add_parser("encode", help="partition -> code word")
    p.add_argument("--scheme", choices=schemes, required=True)
    p.add_argument("--partition", required=True)
    common(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="code word -> partition")
    p.add_argument("--scheme", choices=schemes, required=True)
    p.add_argument("--word", required=True)
    common(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("stats", help="statistics of a partition or a word")
    p.add_argument("--partition")
    p.add_argument("--word")
    common(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="compare both sides of an identity")
    p.add_argument("--identity", choices=IDENTITIES, required=True)
    p.add_argument("--qmax", type=int, default=12)
    p.add_argument("--comp", type=_ints, default=(2, 1, 1), help="letter multiplicities, e.g. 2,1,1")
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--M", type=int, default=3)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=2)
    p.add_argument("--mutate", choices=MUTATIONS, default="none")
    p.add_argument("--timing", action="store_true", help="include wall time (output no longer byte-stable)")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="Schur-type count tables as TSV")
    p.add_argument("--table", choices=("schur", "genschur"), default="schur")
    p.add_argument("--nmax", type=int, default=30)
    p.add_argument("--M", type=int, default=3)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=2)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("diagram", help="k-modular diagram and its column read-off")
    p.add_argument("--partition", required=True)
    common(p, k_default=3)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("trace", help="step table of an encoding")
    p.add_argument("--scheme", choices=schemes, required=True)
    p.add_argument("--partition", required=True)
    common(p)
    p.set_defaults(func=cmd_trace)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if getattr(args, "k", 1) < 1:
        print("error: --k must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
