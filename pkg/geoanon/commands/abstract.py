import sys
from abc import ABC
from argparse import SUPPRESS, ArgumentParser
from importlib import import_module
from inspect import signature
import traceback
from typing import Any, NoReturn
from navconfig.logging import logging
from ..conf import APP_LOGNAME
from ..version import __version__
from .exceptions import CommandError, CommandNotFound, UsageError

COMMANDS = ("generate", "anonymize", "evaluate", "render", "bench", "estimate")

# ANSI colour per output level, used only on terminals
LEVEL_COLORS = {
    "INFO": "\033[92m",
    "DEBUG": "\033[94m",
    "WARNING": "\033[93m",
    "ERROR": "\033[91m",
    "CRITICAL": "\033[1m\033[91m",
}
RESET = "\033[0m"


class CommandParser(ArgumentParser):
    """ArgumentParser raising UsageError instead of exiting."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


class BaseCommand(ABC):
    """BaseCommand.

    Abstract Command for geoanon cli-based commands.
    """

    help: str = "Base Help Command"
    epilog: str = ""
    default_action: str = "run"  # Default action when no action is provided
    actions: tuple[str, ...] = ("run",)

    def __init__(self, args: list[str]):
        self.args: list = list(args)
        command_name = self.__class__.__name__.lower().replace("command", "")
        self.name = command_name
        self.parser = CommandParser(
            prog=f"geoanon {command_name}",
            description=self.help,
            epilog=self.epilog or self.help,
            add_help=False,
        )
        self.parser.add_argument(
            "-v", "--version", action="version", version=f"%(prog)s v.{__version__}"
        )
        self.parser.add_argument(
            "-h", "--help", action="help", default=SUPPRESS, help="Display this Message"
        )
        self.parser.add_argument(
            "-d", "--debug", action="store_true", help="Enable Debug"
        )
        self.parser.add_argument(
            "--traceback",
            action="store_true",
            help="Return the Traceback on CommandError",
        )
        # Handle default action when no action is provided or first arg is a flag
        if not self.args or self.args[0].startswith("-"):
            self.args.insert(0, self.default_action)
        elif self.args[0] not in self.actions:
            self.args.insert(0, self.default_action)
        self.action: str = self.args.pop(0)
        self.parse_arguments(self.parser)
        self.logger = logging.getLogger(f"{APP_LOGNAME}.command.{command_name}")

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__}>"

    def write(self, message: Any, level: str = "INFO") -> None:
        if not message:
            return
        stream = sys.stderr if level in ("ERROR", "WARNING", "CRITICAL") else sys.stdout
        prefix = "" if level in ("INFO", "DEBUG") else f"{level}: "
        text = f"{prefix}{message}"
        if stream.isatty() and level in LEVEL_COLORS:
            text = f"{LEVEL_COLORS[level]}{text}{RESET}"
        print(text, file=stream)

    def parse_arguments(self, parser: ArgumentParser) -> None:
        """
        parse_arguments.
            allow for subclassed comands to add custom arguments
        """

    def handle(self, **kwargs) -> Any:
        if self.action not in self.actions or not hasattr(self, self.action):
            raise CommandNotFound(f"Method {self.action} from {self!s} not Found")
        fn = getattr(self, self.action)
        # adding an epilog using the docstring
        self.parser.epilog = str(fn.__doc__)
        options = self.parser.parse_args(self.args)
        if options.debug:
            logging.getLogger(APP_LOGNAME).setLevel(logging.DEBUG)
            self.write(f"Executing : {self.action} Command.", level="DEBUG")
        try:
            if len(signature(fn).parameters) > 0:
                output = fn(options, **kwargs)
            else:
                output = fn()
        except Exception as err:
            if options.traceback:
                print(traceback.format_exc(), file=sys.stderr)
            raise CommandError(
                f"Error Calling Method: {self.action}, error: {err}"
            ) from err
        self.write(output, level="INFO")
        return output


def get_command(command: str) -> type[BaseCommand]:
    if command not in COMMANDS:
        raise CommandNotFound(
            f"Unknown command '{command}', expected one of: {', '.join(COMMANDS)}"
        )
    clsname = f"{command.capitalize()}Command"
    try:
        module = import_module(f"geoanon.commands.{command}")
        return getattr(module, clsname)
    except (ImportError, AttributeError) as ex:
        raise CommandNotFound(f"Command {clsname} was not found: {ex}") from ex
