"""Command-line interface.

Subcommands: construct, analyze, complement, wd-transform, swrg-verify,
catalog. Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 enumeration cap exceeded. Enumeration caps can be overridden with the
ANTICODES_ENUM_CAP and ANTICODES_MINIMAL_CAP environment variables.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import catalog as cat
from . import codefile
from . import constructions as cons
from .gf import FieldError
from .linear import CapExceeded, CodeError
from .report import code_report
from .swrg import verify_swrg

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _render(data: dict, fmt: str) -> str:
    """Render a flat-ish report dict as json, csv, or an aligned table."""
    if fmt == "json":
        return json.dumps(data, indent=2, sort_keys=True)
    flat = _flatten(data)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["key", "value"])
        for key, value in flat:
            writer.writerow([key, value])
        return buf.getvalue().rstrip("\n")
    width = max(len(key) for key, _ in flat)
    return "\n".join(f"{key.ljust(width)}  {value}" for key, value in flat)


def _flatten(data, prefix=""):
    rows = []
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            rows.extend(_flatten(value, prefix=f"{name}."))
        else:
            rows.append((name, value))
    return rows


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------

def cmd_construct(args) -> int:
    family = args.family

    def need(name):
        value = getattr(args, name.strip("-").replace("-", "_"))
        if value is None:
            raise CodeError(f"construct {family} requires {name}")
        return value

    if family == "simplex":
        code = cons.simplex(need("--q"), need("--k"))
    elif family == "rs":
        code = cons.rs_code(need("--q"), need("--k"))
    elif family in ("comp-rs", "comp-mds"):
        q, k = need("--q"), need("--k")
        h = 0
        if args.K is not None:
            if args.K < k:
                raise CodeError(f"--K must be >= k={k}")
            h = args.K - k
        make = cons.complementary_rs if family == "comp-rs" \
            else cons.complementary_mds_trivial
        code = make(q, k, h)
    elif family == "fixed-weight":
        code = cons.fixed_weight_anticode(need("--k"), need("--w"))
    elif family == "two-subspace":
        code = cons.two_subspace_code(need("--q"))
    elif family == "ovoid":
        code = cons.ovoid_code(need("--q"))
    elif family == "dual-bch":
        code = cons.dual_bch_code(need("--m"))
    elif family == "kasami":
        code = cons.kasami_code(need("--m"))
    elif family == "concat":
        code = cons.concatenate_with_simplex(cons.ovoid_code(2 ** need("--s")))
    else:
        raise CodeError(f"unknown family {family!r}")

    if args.K is not None and family not in ("comp-rs", "comp-mds"):
        code = cons.complement(code, K=args.K)

    wd = code.weight_distribution()
    print(f"{code.label}: [{code.n},{code.k},{wd.min_weight}]_{code.field.q} "
          f"weights {wd.nonzero_weights()}", file=sys.stderr)
    if args.out:
        codefile.save_code(code, args.out)
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        print(json.dumps(codefile.code_to_dict(code, with_distribution=True),
                         indent=2, sort_keys=True))
    return EXIT_OK


def cmd_analyze(args) -> int:
    code = codefile.load_code(args.file)
    report = code_report(code)
    _emit(_render(report.to_dict(), args.format), args.out)
    return EXIT_OK


def cmd_complement(args) -> int:
    code = codefile.load_code(args.file)
    comp = cons.complement(code, K=args.K if args.K is not None else code.k)
    if args.out:
        codefile.save_code(comp, args.out)
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        print(json.dumps(codefile.code_to_dict(comp, with_distribution=True),
                         indent=2, sort_keys=True))
    return EXIT_OK


def cmd_wd_transform(args) -> int:
    code = codefile.load_code(args.file)
    K = args.K if args.K is not None else code.k
    predicted = cons.transform_wd(code.weight_distribution(), K)
    data = {"q": predicted.q, "n": predicted.n, "k": predicted.k,
            "d": predicted.min_weight, "counts": predicted.to_dict()}
    _emit(_render(data, args.format), args.out)
    return EXIT_OK


def cmd_swrg_verify(args) -> int:
    code = codefile.load_code(args.file)
    cert = verify_swrg(code, l=args.l)
    _emit(_render(cert.to_dict(), args.format), args.out)
    return EXIT_OK if cert.verdict == "is_l_swrg" else EXIT_MISMATCH


def cmd_catalog(args) -> int:
    if args.action != "verify":
        raise CodeError(f"unknown catalog action {args.action!r}")
    entries = cat.load_manifest(args.manifest)
    results, summary = cat.verify_catalog(entries, jobs=args.jobs)
    if args.format == "json":
        doc = {"summary": summary,
               "results": [{"id": r.id, "verdict": r.verdict,
                            "mismatches": r.mismatches, "note": r.note}
                           for r in results]}
        _emit(json.dumps(doc, indent=2, sort_keys=True), args.out)
    else:
        lines = []
        width = max(len(r.id) for r in results)
        for r in results:
            line = f"{r.id.ljust(width)}  {r.verdict}"
            if r.mismatches:
                line += "  (" + "; ".join(r.mismatches) + ")"
            lines.append(line)
        lines.append("")
        lines.append(
            f"{summary['passed']}/{summary['total']} passed, "
            f"{summary['failed']} failed, "
            f"{summary['known_discrepancy']} known-discrepancy")
        _emit("\n".join(lines), args.out)
    return EXIT_OK if summary["failed"] == 0 else EXIT_MISMATCH


# ----------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="anticodes",
                     description="Projective linear codes and anticodes: "
                                 "construction, analysis, verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_file=False):
        if with_file:
            p.add_argument("file", help="JSON code file")
        p.add_argument("--format", choices=["json", "csv", "text"],
                       default="json")
        p.add_argument("--out", default=None, help="write output to a file")

    p = sub.add_parser("construct", help="build a code from a named family")
    p.add_argument("family",
                   choices=["simplex", "rs", "comp-rs", "comp-mds",
                            "fixed-weight", "two-subspace", "ovoid",
                            "dual-bch", "kasami", "concat"])
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--w", type=int)
    p.add_argument("--K", type=int,
                   help="take the complement in dimension K "
                        "(lift parameter for comp-rs/comp-mds)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="full report for a code file")
    common(p, with_file=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("complement", help="complement of a code file")
    p.add_argument("file")
    p.add_argument("--K", type=int)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_complement)

    p = sub.add_parser("wd-transform",
                       help="complement distribution from the base "
                            "distribution alone")
    common(p, with_file=True)
    p.add_argument("--K", type=int)
    p.set_defaults(func=cmd_wd_transform)

    p = sub.add_parser("swrg-verify",
                       help="strong-walk-regularity certificate")
    common(p, with_file=True)
    p.add_argument("--l", type=int, default=3)
    p.set_defaults(func=cmd_swrg_verify)

    p = sub.add_parser("catalog", help="regression catalog operations")
    p.add_argument("action", choices=["verify"])
    p.add_argument("--manifest", default=None,
                   help="alternate manifest JSON (default: bundled)")
    p.add_argument("--jobs", type=int, default=4)
    p.add_argument("--format", choices=["json", "csv", "text"],
                   default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (CodeError, FieldError, cat.ManifestError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
