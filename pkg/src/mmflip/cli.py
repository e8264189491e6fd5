"""The `mmflip` command line: argument parsing and mapping of failures to exit codes."""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from typing import NoReturn, TextIO

from mmschemes import FormatMismatchError, RingError, SchemeError, SchemeFileError, StructuralError

from .commands import CommandRunner, Console
from .exceptions import ExitCode, UsageError

logger = logging.getLogger(__name__)

PROG = "mmflip"

type Handler = Callable[[CommandRunner, argparse.Namespace, Console], ExitCode]


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def _add_file(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="A scheme file in the bms v1 format.")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog=PROG, description="Exact tools for bilinear matrix multiplication schemes.")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    verify = commands.add_parser("verify", help="Check a scheme against the Brent equations.")
    _add_file(verify)
    verify.set_defaults(handler=CommandRunner.verify)

    gen = commands.add_parser("gen", help="Write a reference scheme.")
    kinds = gen.add_subparsers(dest="kind", required=True, parser_class=_ArgumentParser)
    standard = kinds.add_parser("standard", help="The classical algorithm for (n, m, p).")
    for dimension in ("n", "m", "p"):
        standard.add_argument(dimension, type=int)
    strassen = kinds.add_parser("strassen", help="Strassen's rank-7 scheme for (2, 2, 2).")
    for kind_parser in (standard, strassen):
        kind_parser.add_argument("--ring", default="Z", help="'Z' or 'Zp:<prime>'. Defaults to Z.")
        kind_parser.set_defaults(handler=CommandRunner.gen)

    compose = commands.add_parser("compose", help="Combine two schemes.")
    operation = compose.add_mutually_exclusive_group(required=True)
    operation.add_argument("--kron", dest="operation", action="store_const", const="kron")
    operation.add_argument("--sum-rows", dest="operation", action="store_const", const="rows")
    operation.add_argument("--sum-mid", dest="operation", action="store_const", const="middle")
    operation.add_argument("--sum-cols", dest="operation", action="store_const", const="cols")
    compose.add_argument("left")
    compose.add_argument("right")
    compose.set_defaults(handler=CommandRunner.compose)

    rotate = commands.add_parser("rotate", help="Cycle a scheme's factors, giving a scheme for (m, p, n).")
    _add_file(rotate)
    rotate.set_defaults(handler=CommandRunner.rotate)

    modreduce = commands.add_parser("modreduce", help="Map an integer scheme into Z_p.")
    _add_file(modreduce)
    modreduce.add_argument("-p", dest="modulus", type=int, required=True, help="A prime modulus.")
    modreduce.set_defaults(handler=CommandRunner.modreduce)

    walk = commands.add_parser("walk", help="Search for lower-rank schemes by random walks in the flip graph.")
    _add_file(walk)
    walk.add_argument("--seed", type=int, help="The search seed.")
    walk.add_argument("--steps", type=int, help="The maximum number of flips per walker.")
    walk.add_argument("--walkers", type=int, default=1, help="The number of independent walkers.")
    walk.add_argument("--target", type=int, help="Stop once a scheme of at most this rank is found.")
    walk.add_argument("--restart-after", type=int, help="Restart after this many flips without progress.")
    walk.add_argument("--config", help="A JSON walk configuration; command-line options take precedence.")
    walk.add_argument("--output", help="Write the best scheme here instead of stdout.")
    walk.add_argument("--log", help="Write the walk log here instead of stderr.")
    walk.add_argument("--report", help="Write a JSON summary of the winning walk here.")
    walk.set_defaults(handler=CommandRunner.walk)

    codegen = commands.add_parser("codegen", help="Print a scheme as a straight-line program.")
    _add_file(codegen)
    codegen.set_defaults(handler=CommandRunner.codegen)

    evalcheck = commands.add_parser("evalcheck", help="Compare a scheme's program with classical multiplication.")
    _add_file(evalcheck)
    evalcheck.add_argument("--trials", type=int, help="The number of random instances.")
    evalcheck.add_argument("--seed", type=int, default=0, help="The seed for the random instances.")
    evalcheck.add_argument(
        "--noncommutative", action="store_true", help="Use 2x2 integer matrices as entries instead of scalars.",
    )
    evalcheck.set_defaults(handler=CommandRunner.evalcheck)

    info = commands.add_parser("info", help="Describe a scheme and compare its rank with the known-rank table.")
    _add_file(info)
    info.set_defaults(handler=CommandRunner.info)

    selftest = commands.add_parser("selftest", help="Verify every bundled scheme.")
    selftest.set_defaults(handler=CommandRunner.selftest)

    return parser


def run_cli(
    argv: Sequence[str],
    runner: CommandRunner,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    """Runs one command line and returns its exit code.

    Args:
        argv (Sequence[str]): The arguments, without the program name.
        runner (CommandRunner): The command implementations.
        stdout (TextIO | None, optional): Where data is written. Defaults to `sys.stdout`.
        stderr (TextIO | None, optional): Where diagnostics are written. Defaults to `sys.stderr`.

    Returns:
        int: The process exit code.
    """
    console = Console(stdout or sys.stdout, stderr or sys.stderr)
    args = argparse.Namespace()
    try:
        args = build_parser().parse_args(argv)
        handler: Handler = args.handler
        return int(handler(runner, args, console))
    except UsageError as ex:
        console.error(ex.message)
        return ExitCode.USAGE
    except OSError as ex:
        console.error(f"{PROG}: {ex.filename or ''}: {ex.strerror or ex}")
        return ExitCode.NO_INPUT
    except SchemeFileError as ex:
        source = f"{args.file}: " if "file" in args else ""
        console.error(f"{PROG}: {source}{ex.message}")
        return ExitCode.STRUCTURAL_ERROR
    except (StructuralError, FormatMismatchError, RingError) as ex:
        console.error(f"{PROG}: {ex.message}")
        return ExitCode.STRUCTURAL_ERROR
    except SchemeError as ex:
        logger.error("%s failed: %s", args.command, ex.message)
        console.error(f"{PROG}: {ex.message}")
        return ExitCode.STRUCTURAL_ERROR
