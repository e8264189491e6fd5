"""The main entry point for the application."""

import logging
import sys

import environ
from dotenv import load_dotenv

from utils.log_tools import configure_logger

from .app_config import AppConfig
from .cli import run_cli
from .commands import CommandRunner
from .composition_root import init_container

logger = logging.getLogger("mmflip")


def main() -> None:
    """The main entry point for the application."""
    load_dotenv()
    cfg = environ.to_config(AppConfig)
    configure_logger(cfg.logging.location or None, cfg.logging.levels)
    container = init_container(app_config=cfg)

    try:
        exit_code = run_cli(sys.argv[1:], container[CommandRunner])
    except Exception as ex:  # noqa: BLE001
        logger.fatal("Unhandled exception %s", ex, exc_info=ex)
        exit_code = 1
    sys.exit(exit_code)


if __name__ == "__main__":
    main()
