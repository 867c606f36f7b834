from cli import app
from cli.app import COMMANDS, EXIT_CAPACITY, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, build_parser, run

__all__ = [
    "app",
    "COMMANDS",
    "EXIT_CAPACITY",
    "EXIT_DOMAIN",
    "EXIT_OK",
    "EXIT_USAGE",
    "build_parser",
    "run",
]
