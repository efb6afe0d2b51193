"""Command line front end."""
import argparse
import json
import logging
import sys
from typing import List, Optional, TextIO

from . import __version__
from .config import DecisionConfig, RunConfig
from .const import (
    EXIT_LOCAL_MIN,
    EXIT_NOT_LOCAL_MIN,
    EXIT_UNRESOLVED,
    EXIT_USAGE,
    OUTPUT_HUMAN,
    OUTPUT_JSON,
    STATUS_LOCAL_MIN,
    STATUS_NOT_LOCAL_MIN,
)
from .decision import decide
from .error import ParseError, QuasiminError
from .geometry import newton_model
from .parser import parse
from .poly import BivariatePoly
from .quasiform import decompose
from .server import run_server
from .svg import render_svg
from .types import NormalVector, Verdict

_LOGGER = logging.getLogger(__name__)

_EXIT_CODES = {
    STATUS_LOCAL_MIN: EXIT_LOCAL_MIN,
    STATUS_NOT_LOCAL_MIN: EXIT_NOT_LOCAL_MIN,
}


class UsageError(Exception):
    """Error for bad command line usage."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def exit_code(verdict: Verdict) -> int:
    return _EXIT_CODES.get(verdict.status, EXIT_UNRESOLVED)


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("expr", nargs="?", help="polynomial in x and y")
    parser.add_argument("--file", help="read the polynomial from a UTF-8 file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="quasimin", description="Decide local minima of polynomials in x, y"
    )
    parser.add_argument(
        "--version", action="version", version=f"quasimin {__version__}"
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log INFO, or DEBUG when repeated",
    )
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)
    commands.required = True

    check = commands.add_parser(
        "check", help="decide whether the origin is a local minimum"
    )
    _add_input(check)
    check.add_argument("--depth", type=int, default=DecisionConfig.depth)
    check.add_argument("--max-nu", type=int, default=DecisionConfig.max_nu)
    check.add_argument("--max-order", type=int, default=None)
    check.add_argument("--json", action="store_true", help="print the verdict as JSON")
    check.add_argument("--svg", metavar="PATH", help="also draw the Newton polygon")
    check.add_argument("--trace", type=int, choices=(0, 1, 2), default=0)

    newton = commands.add_parser("newton", help="draw the Newton polygon")
    _add_input(newton)
    newton.add_argument("--svg", metavar="PATH", required=True)

    dec = commands.add_parser("decompose", help="split into quasi-homogeneous forms")
    dec.add_argument("expr")
    dec.add_argument("a1", type=int)
    dec.add_argument("a2", type=int)

    serve = commands.add_parser("serve", help="answer checks over HTTP")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8080)
    return parser


def _read_input(args: argparse.Namespace) -> str:
    if args.file:
        with open(args.file, encoding="utf-8") as f:
            return f.read().strip()
    if args.expr is None:
        raise UsageError("an expression or --file is required")
    return args.expr


def _show_parse_error(error: ParseError, err: TextIO) -> None:
    print(f"error: {error}", file=err)
    if error.position is not None:
        print(f"  {error.text}", file=err)
        print(f"  {' ' * error.position}^", file=err)


def _write_svg(p: BivariatePoly, path: str) -> None:
    model = newton_model(p)
    with open(path, "w", encoding="utf-8") as f:
        f.write(render_svg(model))
    with open(f"{path}.json", "w", encoding="utf-8") as f:
        json.dump(model, f, indent=2)
    _LOGGER.info("Wrote %s", path)


def format_verdict(verdict: Verdict, trace: int = 0) -> str:
    lines = [verdict.status]
    certificate = verdict.certificate
    if certificate is not None:
        curve = certificate.curve
        lines.append(f"  x(t) = {curve.x_text}")
        lines.append(f"  y(t) = {curve.y_text}")
        if curve.generator is not None:
            lines.append(f"  r = {curve.generator}")
        leading = certificate.leading.format("r")
        lines.append(f"  p(x(t), y(t)) = ({leading})*t^{certificate.sigma} + ...")
        lines.append(f"  at t = {certificate.sample_t}: p = {certificate.value}")
    if verdict.unresolved:
        faces = ", ".join(str(a) for a in verdict.unresolved)
        lines.append(f"  unresolved faces: {faces}")
    if trace:
        for entry in verdict.trace:
            face = "" if entry.face is None else f" {entry.face}"
            line = f"  - {entry.rule}{face}"
            if trace > 1:
                line += f" [{entry.reference}] {json.dumps(dict(entry)['data'])}"
            lines.append(line)
    return "\n".join(lines)


def cmd_check(text: str, config: RunConfig, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    p = parse(text)
    verdict = decide(p, config.decision)
    if config.svg_path:
        _write_svg(p, config.svg_path)
    if config.output == OUTPUT_JSON:
        print(json.dumps(dict(verdict), indent=2), file=out)
    else:
        print(format_verdict(verdict, config.trace), file=out)
    return exit_code(verdict)


def cmd_newton(text: str, svg_path: str, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    p = parse(text)
    _write_svg(p, svg_path)
    model = newton_model(p)
    for face in model["faces"]:
        normal = "corner"
        if face["normal"] is not None:
            normal = f"normal {tuple(face['normal'])}"
        print(f"group {face['group']} {normal}: {face['points']}", file=out)
    return EXIT_LOCAL_MIN


def cmd_decompose(text: str, a1: int, a2: int, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    p = parse(text)
    dec = decompose(p, NormalVector(a1, a2))
    for index, form in enumerate(dec.forms, 1):
        g = form.characteristic().g
        print(f"phi{index}: level {form.level}: {form.poly}", file=out)
        print(f"  g{index}(u) = {g.format()}", file=out)
    return EXIT_LOCAL_MIN


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    _configure_logging(args.verbose)
    try:
        if args.command == "check":
            config = RunConfig(
                decision=DecisionConfig(
                    depth=args.depth, max_nu=args.max_nu, max_order=args.max_order
                ),
                output=OUTPUT_JSON if args.json else OUTPUT_HUMAN,
                svg_path=args.svg,
                trace=args.trace,
            )
            return cmd_check(_read_input(args), config)
        if args.command == "newton":
            return cmd_newton(_read_input(args), args.svg)
        if args.command == "decompose":
            return cmd_decompose(args.expr, args.a1, args.a2)
        run_server(args.host, args.port, DecisionConfig())
        return EXIT_LOCAL_MIN
    except ParseError as e:
        _show_parse_error(e, sys.stderr)
    except (QuasiminError, UsageError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
    return EXIT_USAGE
