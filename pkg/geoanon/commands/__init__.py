"""
Command Infraestructure.

    $ geoanon <command> [options]
"""
import sys
from typing import Optional
from navconfig.logging import logging
from ..exceptions import ConfigError, IngestError, ValidationError
from ..version import __version__
from .abstract import COMMANDS, BaseCommand, get_command
from .exceptions import CommandError, CommandNotFound, UsageError

__all__ = ("BaseCommand", "CommandError", "main")

USAGE_ERRORS = (UsageError, CommandNotFound, ConfigError, ValidationError, IngestError)

USAGE = f"usage: geoanon {{{','.join(COMMANDS)}}} [options]"


def exit_code(err: BaseException) -> int:
    """2 when a usage or input error caused ``err``, 1 otherwise."""
    seen = set()
    current: Optional[BaseException] = err
    while current is not None and id(current) not in seen:
        if isinstance(current, USAGE_ERRORS):
            return 2
        seen.add(id(current))
        current = current.__cause__
    return 1


def root_cause(err: BaseException) -> BaseException:
    while err.__cause__ is not None:
        err = err.__cause__
    return err


def main(argv: Optional[list[str]] = None) -> int:
    args = list(sys.argv[1:] if argv is None else argv)
    if not args:
        print(USAGE, file=sys.stderr)
        return 2
    if args[0] in ("-h", "--help"):
        print(USAGE)
        return 0
    if args[0] in ("-v", "--version"):
        print(f"geoanon {__version__}")
        return 0
    command = args.pop(0)
    try:
        cls = get_command(command)
        cls(args).handle()
    except SystemExit as exc:
        # --help / --version of a command
        return exc.code if isinstance(exc.code, int) else 0
    except Exception as err:  # pylint: disable=W0718
        code = exit_code(err)
        cause = root_cause(err)
        print(f"Error: {cause}", file=sys.stderr)
        if code == 1:
            logging.getLogger("geoanon.command").exception(err)
        return code
    return 0


if __name__ == "__main__":
    sys.exit(main())
