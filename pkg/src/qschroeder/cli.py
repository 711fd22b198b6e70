"""
Command-line interface.

Exit status: 0 on success, 1 when a verification or comparison fails,
2 on usage or domain errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import bijections, closedform
from .paths import PathFamily, enumerate_family, parse_family, parse_word
from .qpoly import QPoly
from .stats import StepOrder, maj, maj_distribution
from .verify import SCOPES, run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _family(text: str) -> PathFamily:
    try:
        return parse_family(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _order(text: str) -> StepOrder:
    try:
        return StepOrder.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def closed_form(family: PathFamily, order: StepOrder) -> QPoly:
    if family.kind == "del":
        return closedform.mdel_closed(family.m, family.n, family.l)
    if family.kind == "sch":
        return closedform.msch_closed(family.n, family.l, order)
    return closedform.mbdel_closed(family.n, family.l, order)


def cmd_enumerate(args, out) -> int:
    family = _family(args.family)
    words = enumerate_family(family)
    if args.format == "json":
        out.write(json.dumps(list(words)) + "\n")
    else:
        for w in words:
            out.write(w + "\n")
    return EXIT_OK


def cmd_majdist(args, out) -> int:
    family = _family(args.family)
    order = _order(args.order)
    brute = maj_distribution(family, order) if args.mode in ("brute", "both") else None
    closed = closed_form(family, order) if args.mode in ("closed", "both") else None
    match = None if brute is None or closed is None else brute == closed

    if args.format == "json":
        data = {"family": str(family), "order": str(order)}
        if brute is not None:
            data["brute"] = brute.to_json()
        if closed is not None:
            data["closed"] = closed.to_json()
        if match is not None:
            data["match"] = match
        out.write(json.dumps(data) + "\n")
    elif args.format == "csv":
        poly = brute if brute is not None else closed
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["family", "n", "l", "order", "power", "coefficient"])
        for power, c in enumerate(poly.coeffs):
            if c:
                writer.writerow([str(family), family.n, family.l, str(order), power, c])
        if match is False:
            print("MISMATCH", file=sys.stderr)
    elif args.mode == "both":
        out.write(f"brute:  {brute}\nclosed: {closed}\n")
        out.write("MATCH\n" if match else "MISMATCH\n")
    else:
        out.write(f"{brute if brute is not None else closed}\n")
    return EXIT_FAIL if match is False else EXIT_OK


def cmd_phi(args, out) -> int:
    order = _order(args.order)
    try:
        word = parse_word(args.word)
        if args.direction == "forward":
            image, blk = bijections.phi_trace(word, order)
        else:
            image, blk = bijections.phi_inverse_trace(word, order)
    except ValueError as exc:
        raise UsageError(f"{type(exc).__name__}: {exc}") from exc
    out.write(image + "\n")
    out.write(
        f"k={blk.k} r={blk.r} s={blk.s} case={order.bijection_case} "
        f"maj {maj(word, order)}->{maj(image, order)}\n"
    )
    return EXIT_OK


def cmd_psi_collisions(args, out) -> int:
    try:
        groups = bijections.psi_collisions(args.n, args.l)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        data = [{"image": img, "preimages": pre} for img, pre in groups]
        out.write(json.dumps(data) + "\n")
    elif not groups:
        out.write("no collisions\n")
    else:
        for img, pre in groups:
            out.write(f"{img} <= {{{', '.join(pre)}}}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.n_max < 0:
        raise UsageError("--n-max must be >= 0")
    report = run_verification(args.n_max, args.scope)
    if args.report:
        Path(args.report).write_text(report.to_json() + "\n")
    if args.format == "json":
        out.write(report.to_json() + "\n")
    else:
        out.write(report.to_text() + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qschroeder",
        description="Major-index distributions on Delannoy and Schroeder paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the words of a path family")
    p.add_argument("family", help='"del:m,n,l", "sch:n,l" or "bdel:n,l"')
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("majdist", help="maj distribution of a path family")
    p.add_argument("family")
    p.add_argument("--order", required=True, help='e.g. "E<D<N"')
    p.add_argument("--mode", choices=("brute", "closed", "both"), default="both")
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.set_defaults(func=cmd_majdist)

    p = sub.add_parser("phi", help="apply the bijection phi or its inverse")
    p.add_argument("word")
    p.add_argument("--order", required=True)
    p.add_argument("--direction", choices=("forward", "inverse"), default="forward")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("psi-collisions", help="bad paths sharing a psi image")
    p.add_argument("n", type=int)
    p.add_argument("l", type=int)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_psi_collisions)

    p = sub.add_parser("verify", help="brute-force sweep against the closed forms")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--scope", choices=SCOPES, default="all")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.add_argument("--report", metavar="PATH", help="also write the JSON report here")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"qschroeder {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
