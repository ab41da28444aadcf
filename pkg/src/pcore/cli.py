"""Command-line front end.

    pcore largest --p 5 [--format text|json] [--parts]
    pcore tables --max-p 43 [--format csv|text] [--out DIR] [--paper-faithful]
    pcore verify --p 3,5,7 [--oracle] [--override-feasibility]
    pcore render --p 5

Exit status: 0 on success, 1 if a verification fails, 2 on bad input.
"""
import argparse
import json
import sys
from pathlib import Path

from .abacus import abacus_from_row_multiplicities, render_abacus, residue_sequence
from .checks import oracle_checks, property_checks
from .errors import FeasibilityRefused, InvalidModulus
from .tables import format_split, odd_primes_up_to, output_record, table1_csv, table1_text, table2_csv, table2_text
from .walk import check_odd_prime, largest_partition

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _prime_arg(value):
    try:
        return check_odd_prime(int(value))
    except (ValueError, InvalidModulus) as exc:
        raise UsageError(f"--p {value}: p must be an odd prime") from exc


def _prime_list(text):
    return [_prime_arg(v.strip()) for v in text.split(",") if v.strip()]


def cmd_largest(args, out):
    p = _prime_arg(args.p)
    record = output_record(p, with_parts=args.parts)
    if args.format == "json":
        out.write(json.dumps(record.to_json(with_parts=args.parts)) + "\n")
        return EXIT_OK
    out.write(f"p                    {record.p}\n")
    out.write(f"row multiplicities   ({format_split(record.row_multiplicities)})\n")
    out.write(f"bead multiplicities  ({', '.join(map(str, record.bead_multiplicities))})\n")
    out.write(f"length               {record.length}\n")
    out.write(f"size                 {record.size}\n")
    out.write(f"threshold N          {record.threshold}\n")
    if args.parts:
        out.write(f"parts                {' '.join(map(str, record.parts))}\n")
    return EXIT_OK


def cmd_tables(args, out):
    if args.max_p < 3:
        raise UsageError(f"--max-p {args.max_p}: no odd primes in range; need max-p >= 3")
    if args.format == "text":
        out.write(table1_text(args.max_p))
        out.write("\n")
        out.write(table2_text(args.max_p, args.paper_faithful))
        return EXIT_OK
    outdir = Path(args.out)
    files = {
        "table1.csv": table1_csv(args.max_p),
        "table2.csv": table2_csv(args.max_p, args.paper_faithful),
    }
    for name, text in files.items():
        path = outdir / name
        try:
            outdir.mkdir(parents=True, exist_ok=True)
            path.write_bytes(text.encode("ascii"))
        except OSError as exc:
            raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc
        out.write(f"wrote {path}\n")
    return EXIT_OK


def cmd_verify(args, out):
    primes = _prime_list(args.p)
    if not primes:
        raise UsageError("--p needs at least one odd prime")
    first_failure = None
    for p in primes:
        results = list(property_checks(p))
        if args.oracle:
            try:
                results.extend(oracle_checks(p, override=args.override_feasibility))
            except FeasibilityRefused as exc:
                raise UsageError(str(exc)) from exc
        for r in results:
            out.write(r.line() + "\n")
            if not r.passed and first_failure is None:
                first_failure = r
    if first_failure is not None:
        out.write(f"verification failed: p={first_failure.p} {first_failure.name}\n")
        return EXIT_FAILED
    out.write("all checks passed\n")
    return EXIT_OK


def cmd_render(args, out):
    p = _prime_arg(args.p)
    m = largest_partition(p).row_multiplicities
    rows = render_abacus(abacus_from_row_multiplicities(m))
    for row, residue in zip(rows, residue_sequence(m)):
        out.write(f"{row}  {residue}\n")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="pcore", description="Largest p-core p'-partitions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("largest", help="largest p-core p'-partition for one odd prime p")
    p.add_argument("--p", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--parts", action="store_true", help="also print the parts")
    p.set_defaults(func=cmd_largest)

    p = sub.add_parser("tables", help="reproduce the row-multiplicity and size tables")
    p.add_argument("--max-p", type=int, default=43)
    p.add_argument("--format", choices=("csv", "text"), default="csv")
    p.add_argument("--out", default=".")
    p.add_argument("--paper-faithful", action="store_true",
                   help="emit the published value in cells known to disagree with the construction")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", help="run the invariant checks")
    p.add_argument("--p", required=True, help="comma-separated odd primes")
    p.add_argument("--oracle", action="store_true", help="also compare against exhaustive search")
    p.add_argument("--override-feasibility", action="store_true", help="allow exhaustive search for p > 11")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw the abacus of the largest partition")
    p.add_argument("--p", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"pcore {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"pcore {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
