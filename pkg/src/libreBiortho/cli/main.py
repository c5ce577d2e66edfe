"""Argument parsing and exit-code handling."""

import argparse
import logging
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from libreBiortho.config import get_settings
from libreBiortho.errors import BiorthoError
from .commands import cmd_dict, cmd_duals, cmd_figures, cmd_project, cmd_verify
from .models import RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

COMMANDS = {
    'dict': cmd_dict,
    'duals': cmd_duals,
    'project': cmd_project,
    'figures': cmd_figures,
    'verify': cmd_verify,
}

# flag -> RunConfig field
FLAGS = {
    'grid_start': ('--grid-start', float, "First grid abscissa"),
    'grid_end': ('--grid-end', float, "Last grid abscissa"),
    'grid_points': ('--grid-points', int, "Number of grid samples"),
    'atom_count': ('--atoms', int, "Number of Mexican-hat atoms"),
    'dependence_tol': ('--tol', float, "Relative linear-dependence threshold"),
    'output_path': ('--out', str, "Output path prefix"),
    'target': ('--target', str, "Target CSV (t,value) for project"),
    'dual_index': ('--dual-index', int, "Dual traced by figures"),
    'seed': ('--seed', int, "Seed for random dictionaries and targets"),
    'log_level': ('--log-level', str, "Logging level"),
}

def _versions(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Invalid version list: {text}")

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    for dest, (flag, kind, help_text) in FLAGS.items():
        common.add_argument(flag, dest=dest, type=kind, default=None, help=help_text)
    common.add_argument('--versions', dest='versions', type=_versions, default=None,
                        help="Comma-separated family versions traced by figures (default 1,3,5)")

    parser = argparse.ArgumentParser(
        prog="libreBiortho",
        description="Recursive biorthogonal duals for orthogonal projection onto non-orthogonal waveforms",
    )
    subcommands = parser.add_subparsers(dest='command', required=True)
    for name, fn in COMMANDS.items():
        subcommands.add_parser(name, parents=[common], help=(fn.__doc__ or "").splitlines()[0])
    return parser

def _config_from_args(args: argparse.Namespace) -> RunConfig:
    provided: Dict[str, Any] = {
        dest: getattr(args, dest)
        for dest in list(FLAGS) + ['versions']
        if getattr(args, dest) is not None
    }
    return RunConfig(**provided)

def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    try:
        config = _config_from_args(args)
    except ValidationError as e:
        logging.basicConfig(level=getattr(logging, get_settings().LOG_LEVEL, logging.INFO))
        logger.error(f"Invalid configuration: {e}")
        return EXIT_USAGE

    logging.basicConfig(level=getattr(logging, config.log_level))

    try:
        result = COMMANDS[args.command](config)
    except (BiorthoError, ValueError) as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_USAGE

    if args.command == 'verify':
        return EXIT_OK if result.passed else EXIT_VERIFY_FAILED
    return EXIT_OK
