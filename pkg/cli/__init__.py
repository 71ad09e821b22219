from .commands import EXIT_FALSE, EXIT_INPUT, EXIT_OK, execute
from .runner import build_parser, parse_command, render, run

__all__ = [
    "EXIT_FALSE",
    "EXIT_INPUT",
    "EXIT_OK",
    "build_parser",
    "execute",
    "parse_command",
    "render",
    "run",
]
