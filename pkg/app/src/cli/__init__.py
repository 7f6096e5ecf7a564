# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
Command layer of the engine.

Commands raise domain errors freely; ``command_error_handler`` turns them into a
CommandError carrying the process exit code, the way an HTTP surface maps domain
errors to status codes.
"""

from functools import wraps

from pydantic import BaseModel

from src.crystal import TableauParseError
from src import logger

# Exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_PARSE = 3


class CommandError(Exception):
    """A failed command with its exit code and a printable detail."""

    def __init__(self, exit_code: int, detail: str):
        self.exit_code = exit_code
        self.detail = detail
        super().__init__(detail)


class CommandResult(BaseModel):
    """Rendered output of a command and the exit code it asks for."""
    exit_code: int = EXIT_OK
    text: str = ""


def command_error_handler(operation: str):
    """Decorator to normalize error handling across commands."""
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except CommandError:
                raise
            except TableauParseError as e:
                res_txt = f"TableauParseError: {str(e)}"
                logger.error(res_txt)
                raise CommandError(EXIT_PARSE, res_txt)
            except ValueError as e:
                res_txt = f"ValueError: {str(e)}"
                logger.error(res_txt)
                raise CommandError(EXIT_USAGE, res_txt)
            except Exception as e:
                res_txt = f"Could not {operation}: {str(e)}"
                logger.error(res_txt)
                raise CommandError(EXIT_USAGE, res_txt)
        return wrapper
    return decorator
