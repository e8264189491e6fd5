"""The implementation of each command-line subcommand."""

import argparse
import logging
from pathlib import Path
from typing import Any, TextIO

from attrs import frozen

from mmschemes import (
    KnownRankRegistry,
    RingSpec,
    SplitAxis,
    certify_bundled,
    direct_sum,
    kronecker,
    load_bundled,
    mod_reduce,
    rotate,
    standard_scheme,
    strassen_scheme,
    verify,
)
from mmschemes.bilinear import (
    IntegerRing,
    MatrixRing,
    ModularRing,
    SamplingRing,
    check_equivalence,
    compile_scheme,
    emit_pseudocode,
)
from mmschemes.search import parallel_search
from mmschemes.serialization import format_walk_log, read_scheme, serialize, walk_report_to_json
from utils.validators import MAX_MODULUS, is_prime_modulus

from .app_config import AppConfig
from .exceptions import ExitCode, UsageError
from .services.walk_config_loader import WalkConfigLoader

logger = logging.getLogger(__name__)


@frozen
class Console:
    """The streams a command writes to: data goes to `out`, diagnostics to `err`."""

    out: TextIO
    err: TextIO

    def write(self, text: str) -> None:
        self.out.write(text)

    def error(self, text: str) -> None:
        self.err.write(text if text.endswith("\n") else f"{text}\n")


def _parse_ring(text: str) -> RingSpec:
    try:
        return RingSpec.from_text(text)
    except ValueError as ex:
        raise UsageError(str(ex)) from ex


def _one_based(index: tuple[int, ...]) -> str:
    return "(" + ",".join(str(x + 1) for x in index) + ")"


def _format_text(fmt: tuple[int, int, int]) -> str:
    return "(" + ",".join(str(x) for x in fmt) + ")"


class CommandRunner:
    """Runs the subcommands of the `mmflip` command line."""

    def __init__(
        self,
        app_config: AppConfig,
        registry: KnownRankRegistry,
        walk_config_loader: WalkConfigLoader,
    ) -> None:
        self._app_config = app_config
        self._registry = registry
        self._walk_config_loader = walk_config_loader

    def verify(self, args: argparse.Namespace, console: Console) -> ExitCode:
        s = read_scheme(Path(args.file))
        report = verify(s)
        if report.valid:
            console.write(f"valid rank={s.rank()} violated=0\n")
            return ExitCode.OK
        first = _one_based(report.first_violation) if report.first_violation else "-"
        console.write(f"invalid rank={s.rank()} violated={report.violated} first={first}\n")
        return ExitCode.NEGATIVE_RESULT

    def gen(self, args: argparse.Namespace, console: Console) -> ExitCode:
        ring = _parse_ring(args.ring)
        if args.kind == "standard":
            if min(args.n, args.m, args.p) < 1:
                raise UsageError(f"Format dimensions must be positive: ({args.n},{args.m},{args.p})")
            s = standard_scheme(args.n, args.m, args.p, ring)
        else:
            s = strassen_scheme(ring)
        console.write(serialize(s).decode("utf-8"))
        return ExitCode.OK

    def compose(self, args: argparse.Namespace, console: Console) -> ExitCode:
        left = read_scheme(Path(args.left))
        right = read_scheme(Path(args.right))
        if args.operation == "kron":
            result = kronecker(left, right)
        else:
            result = direct_sum(left, right, SplitAxis(args.operation))
        console.write(serialize(result).decode("utf-8"))
        return ExitCode.OK

    def rotate(self, args: argparse.Namespace, console: Console) -> ExitCode:
        console.write(serialize(rotate(read_scheme(Path(args.file)))).decode("utf-8"))
        return ExitCode.OK

    def modreduce(self, args: argparse.Namespace, console: Console) -> ExitCode:
        if not is_prime_modulus(args.modulus):
            raise UsageError(f"-p must be a prime no larger than {MAX_MODULUS}, got {args.modulus}")
        console.write(serialize(mod_reduce(read_scheme(Path(args.file)), args.modulus)).decode("utf-8"))
        return ExitCode.OK

    def walk(self, args: argparse.Namespace, console: Console) -> ExitCode:
        s = read_scheme(Path(args.file))
        if not s.ring.is_prime_field:
            raise UsageError(f"Walks require a prime field; {args.file} is over {s.ring}. Use modreduce first.")
        if args.walkers < 1:
            raise UsageError(f"--walkers must be at least 1, got {args.walkers}")

        content = Path(args.config).read_text(encoding="utf-8") if args.config else "{}"
        overrides: dict[str, Any] = {
            "seed": args.seed,
            "max_steps": args.steps,
            "target_rank": args.target,
            "restart_after": args.restart_after,
        }
        try:
            cfg = self._walk_config_loader.load_walk_config(
                content,
                defaults={"checkpoint_every": self._app_config.checkpoint_every},
                overrides=overrides,
            )
        except ValueError as ex:
            raise UsageError(f"Walk configuration is not valid JSON: {ex}") from ex
        if isinstance(cfg, list):
            for error in cfg:
                location = ".".join(str(part) for part in error.path) or "<root>"
                console.error(f"{location}: {error.message}")
            raise UsageError("Walk configuration is invalid")

        report = parallel_search(s, cfg, args.walkers, self._app_config.max_workers or None)
        logger.info("Search seed %d: best rank %d from %d", cfg.seed, report.best_rank, report.start_rank)

        scheme_bytes = serialize(report.best_scheme)
        if args.output:
            Path(args.output).write_bytes(scheme_bytes)
        else:
            console.write(scheme_bytes.decode("utf-8"))
        walk_log = format_walk_log(report)
        if args.log:
            Path(args.log).write_text(walk_log, encoding="utf-8")
        elif walk_log:
            console.error(walk_log)
        if args.report:
            Path(args.report).write_text(walk_report_to_json(report), encoding="utf-8")
        console.error(
            f"best rank={report.best_rank} start={report.start_rank} steps={report.steps_taken} seed={report.seed}",
        )
        return ExitCode.OK

    def codegen(self, args: argparse.Namespace, console: Console) -> ExitCode:
        console.write(emit_pseudocode(compile_scheme(read_scheme(Path(args.file)))))
        return ExitCode.OK

    def evalcheck(self, args: argparse.Namespace, console: Console) -> ExitCode:
        s = read_scheme(Path(args.file))
        trials = args.trials if args.trials is not None else self._app_config.evalcheck_trials
        if trials < 1:
            raise UsageError(f"--trials must be at least 1, got {trials}")
        algebra: SamplingRing[Any]
        if args.noncommutative:
            algebra = MatrixRing(2, modulus=s.ring.modulus)
        elif s.ring.modulus is not None:
            algebra = ModularRing(s.ring.modulus)
        else:
            algebra = IntegerRing()

        report = check_equivalence(compile_scheme(s), algebra, trials, args.seed)
        if report.equivalent:
            console.write(f"equivalent trials={report.trials} mismatches=0 algebra={algebra!r}\n")
            return ExitCode.OK
        trial, row, col = report.first_mismatch or (0, 0, 0)
        console.write(
            f"not-equivalent trials={report.trials} mismatches={report.mismatches} "
            f"first=trial {trial + 1} entry ({row + 1},{col + 1}) algebra={algebra!r}\n",
        )
        return ExitCode.NEGATIVE_RESULT

    def info(self, args: argparse.Namespace, console: Console) -> ExitCode:
        s = read_scheme(Path(args.file))
        lines = [
            f"format {_format_text(s.format)}",
            f"ring {s.ring}",
            f"rank {s.rank()}",
            f"naive-rank {s.naive_rank()}",
            f"max-abs-coefficient {s.max_abs_coefficient()}",
            f"ternary {'yes' if s.is_ternary() else 'no'}",
            f"nonzero-coefficients {s.nonzero_count()}",
        ]
        entry = self._registry.lookup(s.format)
        if entry is None:
            lines.append("known-ranks none")
        else:
            star = "*" if entry.best_is_char_restricted else ""
            lines.append(f"known-ranks naive={entry.naive} best={entry.best}{star} ours={entry.ours}")
            lines.append(f"improves-on-best {'yes' if entry.improves_on_best(s.rank()) else 'no'}")
        console.write("\n".join(lines) + "\n")
        return ExitCode.OK

    def selftest(self, _args: argparse.Namespace, console: Console) -> ExitCode:
        reports = certify_bundled()
        for name, report in reports.items():
            status = "valid" if report.valid else "invalid"
            console.write(f"{name} {status} rank={load_bundled(name).rank()} violated={report.violated}\n")
        return ExitCode.OK if all(report.valid for report in reports.values()) else ExitCode.NEGATIVE_RESULT
