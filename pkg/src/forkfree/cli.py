"""Command-line entry point.

Exit status: 0 success / PASS, 1 counterexample or violation found,
2 usage or input-format error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Iterator
from pathlib import Path

from .canon import enumerate_graphs
from .certificate import CertificateFormatError, loads
from .classes import CLASSES, get_class
from .coloring import COLORERS, DivisionNotFound, LemmaViolation, OutOfClassError
from .divisibility import find_perfect_division
from .graph import Graph, GraphError
from .graph6 import iter_graph6, read_graph6_file, to_graph6
from .harness import CAMPAIGNS, run_campaign
from .patterns import PatternId, contains_induced, find_odd_balloon, find_odd_hole, find_odd_antihole
from .replay import validate

EXIT_OK, EXIT_FOUND, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _inputs(files: list[str]) -> Iterator[Graph]:
    if not files:
        yield from iter_graph6(sys.stdin.buffer)
        return
    for f in files:
        yield from read_graph6_file(f)


def _g6(g: Graph) -> str:
    return to_graph6(g).decode("ascii")


def _ints(values) -> str:
    return ",".join(str(v) for v in values) if values else "-"


def cmd_detect(args: argparse.Namespace) -> int:
    special = {"odd-balloon", "odd-hole", "odd-antihole"}
    pid = None if args.pattern in special else PatternId.parse(args.pattern)
    for g in _inputs(args.files):
        if pid is not None:
            occ = contains_induced(g, pid)
            witness = list(occ.map) if occ else None
        elif args.pattern == "odd-balloon":
            b = find_odd_balloon(g)
            witness = [*b.hole, b.center, b.leaf] if b else None
        elif args.pattern == "odd-hole":
            h = find_odd_hole(g)
            witness = list(h) if h else None
        else:
            h = find_odd_antihole(g)
            witness = list(h) if h else None
        if witness is None:
            print(f"{_g6(g)} FREE")
        else:
            print(f"{_g6(g)} CONTAINS {_ints(witness)}")
    return EXIT_OK


def cmd_free(args: argparse.Namespace) -> int:
    cls = get_class(args.cls)
    for g in _inputs(args.files):
        print(f"{_g6(g)} {'FREE' if cls(g) else 'NOT-FREE'}")
    return EXIT_OK


def cmd_divide(args: argparse.Namespace) -> int:
    status = EXIT_OK
    for g in _inputs(args.files):
        div = find_perfect_division(g)
        if div is None:
            print(f"{_g6(g)} NONE")
            status = EXIT_FOUND
        else:
            print(f"{_g6(g)} A={_ints(sorted(div.A))} B={_ints(sorted(div.B))} method={div.label}")
    return status


def cmd_color(args: argparse.Namespace) -> int:
    colorer = COLORERS[args.cls]
    cert_dir = Path(args.cert_dir) if args.cert_dir else None
    if cert_dir:
        cert_dir.mkdir(parents=True, exist_ok=True)
    status = EXIT_OK
    for idx, g in enumerate(_inputs(args.files)):
        try:
            colors, cert = colorer(g)
        except OutOfClassError as exc:
            raise UsageError(f"{_g6(g)}: {exc}") from None
        except (LemmaViolation, DivisionNotFound) as exc:
            print(f"{_g6(g)} VIOLATION {exc}")
            status = EXIT_FOUND
            continue
        path = "-"
        if cert_dir:
            target = cert_dir / f"cert-{idx:06d}.txt"
            target.write_text(cert.dumps())
            path = str(target)
        used = len(set(colors))
        print(f"{_g6(g)} colors={used} bound={cert.bound} certificate={path}")
        if args.show:
            sys.stdout.write(cert.dumps())
    return status


def cmd_replay(args: argparse.Namespace) -> int:
    status = EXIT_OK
    for name in args.certificates:
        try:
            cert = loads(Path(name).read_text())
        except CertificateFormatError as exc:
            raise UsageError(f"{name}: {exc}") from None
        errors = validate(cert)
        print(f"{name} {'VALID' if not errors else 'INVALID'}")
        for err in errors:
            print(f"  {err}")
        if errors:
            status = EXIT_FOUND
    return status


def cmd_verify(args: argparse.Namespace) -> int:
    source = args.input if args.input else "internal"
    report = run_campaign(
        args.campaign,
        args.max_n,
        source,
        graph_class=args.cls,
        n_min=args.min_n,
        workers=args.workers,
        fail_fast=args.fail_fast,
    )
    text = report.render(timing=args.timing)
    if args.report:
        Path(args.report).write_text(text)
    sys.stdout.write(text)
    return EXIT_OK if report.passed else EXIT_FOUND


def cmd_enumerate(args: argparse.Namespace) -> int:
    cls = get_class(args.filter) if args.filter else None
    out = sys.stdout.buffer
    for g in enumerate_graphs(args.n, cls):
        out.write(to_graph6(g) + b"\n")
    out.flush()
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 already; keep the message terse
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="forkfree", description="Perfect divisibility and colouring of fork-free graphs.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("detect", help="look for an induced pattern in each input graph")
    d.add_argument("--pattern", required=True, help="name, balloon:k, hole:k, antihole:k, odd-balloon, odd-hole, odd-antihole")
    d.add_argument("files", nargs="*")
    d.set_defaults(func=cmd_detect)

    f = sub.add_parser("free", help="test class membership")
    f.add_argument("--class", dest="cls", required=True, choices=sorted(CLASSES))
    f.add_argument("files", nargs="*")
    f.set_defaults(func=cmd_free)

    v = sub.add_parser("divide", help="print a perfect division of each input graph")
    v.add_argument("files", nargs="*")
    v.set_defaults(func=cmd_divide)

    c = sub.add_parser("color", help="certified colouring within C(omega+1, 2)")
    c.add_argument("--class", dest="cls", required=True, choices=["fork-gem", "fork-butterfly", "pd"])
    c.add_argument("--cert-dir", help="write one certificate file per input graph here")
    c.add_argument("--show", action="store_true", help="also print each certificate")
    c.add_argument("files", nargs="*")
    c.set_defaults(func=cmd_color)

    r = sub.add_parser("replay", help="validate certificate files")
    r.add_argument("certificates", nargs="+")
    r.set_defaults(func=cmd_replay)

    y = sub.add_parser("verify", help="run a verification campaign")
    y.add_argument("--campaign", required=True, choices=list(CAMPAIGNS))
    y.add_argument("--max-n", type=int, required=True)
    y.add_argument("--min-n", type=int, default=1)
    y.add_argument("--input", action="append", help="graph6 file (repeatable); default is internal enumeration")
    y.add_argument("--class", dest="cls", choices=sorted(CLASSES), help="override the class (theorem-1 only)")
    y.add_argument("--workers", type=int, default=1)
    y.add_argument("--fail-fast", action="store_true")
    y.add_argument("--report", help="also write the report to this path")
    y.add_argument("--timing", action="store_true", help="append wall time (makes reports non-reproducible)")
    y.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="emit one graph6 line per isomorphism class")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--filter", choices=sorted(CLASSES))
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
        return args.func(args)
    except UsageError as exc:
        print(f"forkfree: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, KeyError, ValueError) as exc:
        print(f"forkfree: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"forkfree: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
