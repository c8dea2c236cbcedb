"""Base Exception for geoanon Commands.
"""


class CommandError(Exception):
    """
    Exception Base Class for raise problems in the execution of a Command
    """


class CommandNotFound(CommandError):
    """
    Raised when the command (or its action) does not exist.
    """


class UsageError(CommandError):
    """
    Invalid command line: missing or malformed arguments.
    """
