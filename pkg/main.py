import argparse
import logging
import sys
from pathlib import Path

from errors import FeqnError, SpecError
from hardware_utils import bytes_to_gb, detect_hardware, worker_override, worker_pick
from run_management import run_processor
from run_management.report_model import ErrorReport
from run_management.run_manager import run
from run_management.spec_model import COMMANDS, parse_spec

# CLI Configuration
VERSION = "1.0.0"
EXIT_OK = 0
EXIT_ENGINE_ERROR = 1
EXIT_BAD_INPUT = 2

logger = logging.getLogger("feqn")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="feqn",
        description="Exact checks, characterizations and extensions for restricted linear and Pexider functional equations",
    )
    parser.add_argument("--version", action="version", version=f"feqn {VERSION}")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--spec", required=True, type=Path, help="JSON problem spec")
    parser.add_argument("--seed", type=int, help="overrides params.seed from the spec")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--workers", type=int, help="worker processes for data-parallel loops (default: from hardware)")
    parser.add_argument("--timing", action="store_true", help="add wall-clock time to the report")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true")
    verbosity.add_argument("-q", "--quiet", action="store_true")
    return parser


def configure_logging(verbose: bool, quiet: bool):
    # stdout carries only the report
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(level=level, format="%(message)s", stream=sys.stderr, force=True)


def configure_workers(requested) -> int:
    hardware = detect_hardware()
    logger.debug(
        f"Hardware Info: {hardware['cpu_count_logical']} logical CPUs, "
        f"{hardware['cpu_count_physical']} physical, "
        f"{bytes_to_gb(hardware['available_ram_bytes'])} of {bytes_to_gb(hardware['system_ram_bytes'])} GB RAM free"
    )
    workers = worker_pick(hardware) if requested is None else worker_override(requested, hardware)
    run_processor.set_workers(workers)
    logger.debug(f"Selected workers: {workers}")
    return workers


def emit(report, output_format: str, timing: bool = False):
    if output_format == "text":
        sys.stdout.write(report.render_text(timing))
    else:
        sys.stdout.write(report.render_json(timing))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose, args.quiet)

    try:
        configure_workers(args.workers)
    except ValueError as e:
        parser.error(str(e))

    try:
        text = args.spec.read_text(encoding="utf-8")
        spec = parse_spec(text)
        report = run(spec, args.command, args.seed)
    except (OSError, UnicodeDecodeError) as e:
        logger.error(f"❌ Cannot read spec file {args.spec}: {e}")
        error = SpecError(f"Cannot read spec file {args.spec}: {e}", path=str(args.spec))
        emit(ErrorReport(args.command, error.detail), args.format)
        return EXIT_BAD_INPUT
    except SpecError as e:
        logger.error(f"❌ Invalid spec: {e.message}")
        emit(ErrorReport(args.command, e.detail), args.format)
        return EXIT_BAD_INPUT
    except FeqnError as e:
        logger.error(f"❌ {args.command} failed: {e.message}")
        emit(ErrorReport(args.command, e.detail), args.format)
        return EXIT_ENGINE_ERROR

    emit(report, args.format, args.timing)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
