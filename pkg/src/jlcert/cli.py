"""Command-line front end.

Exit codes: 0 verified, 1 violation found, 2 usage or domain error,
3 undecided at the precision cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import certifier
from .bfile import ROW_PATTERNS, SUPPORTED_IDS, AlignmentError, BFileError, compare_oeis, ingest_bfile
from .combinatorics import DEFAULT_CAP, ResourceLimitError, cross_check_oracle
from .exactnum import DomainError
from .parallel import worker_count
from .recurrences import scan_all
from .report import BOUNDED_NOTE, CertReport, Status
from .tableio import table_to_csv, table_to_json
from .triangle import ENGINES, build_table, scan_delta_signs, scan_diagonals, scan_log_concavity, \
    scan_mode, scan_phi_base

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_UNDECIDED = 0, 1, 2, 3
_EXIT = {Status.VERIFIED: EXIT_OK, Status.VIOLATION: EXIT_VIOLATION, Status.UNDECIDED: EXIT_UNDECIDED}

VERIFY_KINDS = ("log-concavity", "mode", "recurrences", "bounds", "all")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jlcert", description="Jaco-Lucas triangle: compute and verify.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="print the triangle")
    t.add_argument("--n-max", type=_positive, required=True)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--engine", choices=ENGINES, default="closed_form")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("kind", choices=VERIFY_KINDS)
    v.add_argument("--n-max", type=_positive, required=True)
    v.add_argument("--k-max", type=_positive, default=certifier.DEFAULT_K_MAX)
    v.add_argument("--json", action="store_true", help="emit the JSON report")

    o = sub.add_parser("oracle", help="brute-force string count against the closed form")
    o.add_argument("--n-max", type=_positive, required=True)
    o.add_argument("--cap", type=_positive, default=DEFAULT_CAP)
    o.add_argument("--json", action="store_true")

    e = sub.add_parser("oeis", help="OEIS b-file tools")
    esub = e.add_subparsers(dest="oeis_command", required=True)
    c = esub.add_parser("compare", help="compare a local b-file")
    c.add_argument("--bfile", required=True)
    c.add_argument("--id", required=True, choices=SUPPORTED_IDS, type=str.upper)
    c.add_argument("--row-length", choices=ROW_PATTERNS, default=None,
                   help="row-length rule for A037027/A073370 (detected when omitted)")
    c.add_argument("--json", action="store_true")
    return p


def _verify(kind: str, n_max: int, k_max: int) -> CertReport:
    if kind == "all":
        return certifier.certify_all(n_max, k_max)
    cert = CertReport(f"verify {kind}", {"n_max": n_max, "k_max": k_max})
    if kind == "log-concavity":
        table = build_table(n_max + 1, "rec_2_3_columns")
        cert.add(scan_log_concavity(table, n_max))
        cert.extend(certifier.verify_theorem24(n_max, table))
    elif kind == "mode":
        table = build_table(max(n_max, 5), "rec_2_3_columns")
        cert.add(scan_mode(table, n_max=n_max))
        if n_max >= 4:
            cert.add(scan_delta_signs(table, n_max))
            if (n_max - 5) // 6 >= 1:
                cert.add(scan_diagonals(table, (n_max - 5) // 6))
                cert.add(scan_phi_base(table, n_max))
        else:
            cert.notes.append("the mode statement covers n >= 4; nothing to verify below that")
    elif kind == "recurrences":
        for rep in scan_all(n_max, k_max):
            cert.add(rep)
    elif kind == "bounds":
        table = build_table(n_max + 2, "rec_2_3_columns")
        cert.extend(certifier.verify_lemma22(n_max, table))
        cert.extend(certifier.verify_lemma23(n_max, table))
        cert.extend(certifier.verify_keystone())
        cert.extend(certifier.cone_certificates(k_max, max(n_max, 6 * k_max + 4)))
        cert.notes.append(BOUNDED_NOTE)
    return cert


def _emit(cert: CertReport, as_json: bool) -> int:
    if as_json:
        print(json.dumps(cert.to_document(), indent=1))
    else:
        print(cert.summary())
    return _EXIT[cert.status]


def run_command(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        worker_count()
        if args.command == "table":
            table = build_table(args.n_max, args.engine)
            sys.stdout.write(table_to_csv(table) if args.format == "csv" else table_to_json(table) + "\n")
            return EXIT_OK
        if args.command == "verify":
            return _emit(_verify(args.kind, args.n_max, args.k_max), args.json)
        if args.command == "oracle":
            cert = CertReport("oracle", {"n_max": args.n_max, "cap": args.cap})
            cert.add(cross_check_oracle(args.n_max, args.cap))
            return _emit(cert, args.json)
        if args.command == "oeis":
            bfile = ingest_bfile(args.bfile, args.id)
            return _emit(compare_oeis(bfile, args.id, args.row_length), args.json)
    except (DomainError, BFileError, AlignmentError, ResourceLimitError, ValueError, OSError) as exc:
        print(f"jlcert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
