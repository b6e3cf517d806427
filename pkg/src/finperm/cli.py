"""``finperm`` command-line tool.

Exit codes: 0 success (and "equal"/"fresh"), 1 "not equal"/"not fresh" or a
failed self-test, 2 usage or parse errors, 3 internal contract violations.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import redirect_stderr
from dataclasses import dataclass
from typing import Sequence, TextIO

from .cycles import canonical_cycles, cycles_to_expr, normalize, perm_to_cycles
from .errors import FinPermError, ParseError
from .expr import evaluate, expr_equiv, expr_to_json, semantic_support
from .gset import lambda_act, lambda_action
from .nominal import is_fresh, lambda_support
from .perm import Permutation, apply, compose, inverse
from .selftest import selftest
from .syntax import format_cycles, format_expr, format_term, parse_cycles, parse_expr, parse_term


@dataclass
class CliResult:
    status: int
    out: str
    err: str = ""


class _UsageError(Exception):
    pass


def _atom(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an atom: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"atoms are non-negative, got {value}")
    return value


def _flags(default) -> argparse.ArgumentParser:
    flags = argparse.ArgumentParser(add_help=False)
    flags.add_argument("--json", action="store_true", default=default, help="machine-readable output")
    flags.add_argument(
        "--from-cycles",
        action="store_true",
        default=default,
        help="read permutation arguments in cycle notation",
    )
    return flags


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finperm",
        description="Finite permutations of atoms: normalize, convert and compare; nominal queries on lambda terms.",
        parents=[_flags(False)],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    expr_help = "swap expression such as '(1 3)(3 5)', or '-' for stdin"
    # flags may also follow the subcommand; SUPPRESS keeps them from resetting the top-level values
    after = _flags(argparse.SUPPRESS)

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[after])

    add("normalize", "canonical swap expression").add_argument("expr", help=expr_help)
    add("cycles", "disjoint cycle notation").add_argument("expr", help=expr_help)
    p = add("apply", "image of an atom")
    p.add_argument("expr", help=expr_help)
    p.add_argument("atom", type=_atom)
    p = add("compose", "product; the second argument acts first")
    p.add_argument("left", help=expr_help)
    p.add_argument("right", help=expr_help)
    add("invert", "inverse permutation").add_argument("expr", help=expr_help)
    p = add("equal", "exit 0 if both denote the same permutation, 1 otherwise")
    p.add_argument("left", help=expr_help)
    p.add_argument("right", help=expr_help)
    add("support", "atoms moved by the permutation").add_argument("expr", help=expr_help)
    p = add("lamact", "rename a lambda term by a permutation")
    p.add_argument("expr", help=expr_help)
    p.add_argument("term", help="lambda term such as '\\x1. x1 x2', or '-'")
    add("lamsupport", "free variables of a lambda term").add_argument("term")
    p = add("fresh", "exit 0 if the atom is fresh for the term, 1 otherwise")
    p.add_argument("atom", type=_atom)
    p.add_argument("term")
    add("selftest", "run built-in checks").add_argument("level", choices=("quick", "full"))
    return parser


def _perm_json(p: Permutation) -> dict:
    cycles = canonical_cycles(perm_to_cycles(p))
    return {"cycles": [list(c.atoms) for c in cycles], "pairs": p.to_json()}


def _set_text(atoms) -> str:
    return "{" + ", ".join(map(str, sorted(atoms))) + "}"


def run(argv: Sequence[str], stdin: TextIO | None = None) -> CliResult:
    err = io.StringIO()
    try:
        with redirect_stderr(err):
            args = _parser().parse_args(list(argv))
    except SystemExit as exc:
        return CliResult(int(exc.code or 0), "", err.getvalue())

    stdin_text: list[str] = []

    def text_of(arg: str) -> str:
        if arg != "-":
            return arg
        if stdin_text:
            raise _UsageError("stdin ('-') can be used for one argument only")
        stdin_text.append((stdin or sys.stdin).read().strip())
        return stdin_text[0]

    def expr(arg: str):
        text = text_of(arg)
        return cycles_to_expr(parse_cycles(text)) if args.from_cycles else parse_expr(text)

    def emit(text: str, payload, status: int = 0) -> CliResult:
        if args.json:
            return CliResult(status, json.dumps({"command": args.command, "result": payload}, sort_keys=True) + "\n")
        return CliResult(status, text + "\n")

    def perm_out(p: Permutation) -> CliResult:
        return emit(format_cycles(perm_to_cycles(p)), _perm_json(p))

    try:
        cmd = args.command
        if cmd == "normalize":
            n = normalize(expr(args.expr))
            return emit(format_expr(n), {"expr": format_expr(n), "ast": expr_to_json(n)})
        if cmd == "cycles":
            return perm_out(evaluate(expr(args.expr)))
        if cmd == "apply":
            image = apply(evaluate(expr(args.expr)), args.atom)
            return emit(str(image), image)
        if cmd == "compose":
            return perm_out(compose(evaluate(expr(args.left)), evaluate(expr(args.right))))
        if cmd == "invert":
            return perm_out(inverse(evaluate(expr(args.expr))))
        if cmd == "equal":
            left, right = expr(args.left), expr(args.right)
            same = expr_equiv(left, right)
            return emit("equal" if same else "not equal", same, 0 if same else 1)
        if cmd == "support":
            supp = sorted(semantic_support(expr(args.expr)))
            return emit(_set_text(supp), supp)
        if cmd == "lamact":
            p = evaluate(expr(args.expr))
            t = lambda_act(p, parse_term(text_of(args.term)))
            return emit(format_term(t), {"term": format_term(t)})
        if cmd == "lamsupport":
            supp = list(lambda_support(parse_term(text_of(args.term))))
            return emit(_set_text(supp), supp)
        if cmd == "fresh":
            t = parse_term(text_of(args.term))
            fresh = is_fresh(lambda_action(), args.atom, lambda_support(t))
            return emit("fresh" if fresh else "not fresh", fresh, 0 if fresh else 1)
        if cmd == "selftest":
            results = selftest(args.level)
            passed = all(r.passed for r in results)
            lines = [
                f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail} ({r.seconds:.2f}s)" for r in results
            ]
            payload = {
                "passed": passed,
                "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
            }
            return emit("\n".join(lines), payload, 0 if passed else 1)
        raise AssertionError(f"unhandled command {cmd}")
    except ParseError as exc:
        return _failure(args, 2, "parse", str(exc), position=exc.position, expected=list(exc.expected))
    except _UsageError as exc:
        return _failure(args, 2, "usage", str(exc))
    except FinPermError as exc:
        return _failure(args, 3, "contract", str(exc))


def _failure(args, status: int, kind: str, message: str, **extra) -> CliResult:
    err = f"finperm: {kind} error: {message}\n"
    if args.json:
        body = {"command": args.command, "error": {"kind": kind, "message": message, **extra}}
        return CliResult(status, json.dumps(body, sort_keys=True) + "\n", err)
    return CliResult(status, "", err)


def main(argv: Sequence[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.out)
    sys.stderr.write(result.err)
    return result.status


if __name__ == "__main__":
    sys.exit(main())
