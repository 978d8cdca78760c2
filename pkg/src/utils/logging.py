"""
Logging helpers
All package loggers live under the ``sinckdv`` namespace
"""

import logging
from typing import Union

ROOT_LOGGER = "sinckdv"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
PACKAGE_PREFIX = "src."


def get_logger(name: str) -> logging.Logger:
    """Get a child logger of the package namespace; module names lose their ``src.`` prefix"""
    if name.startswith(PACKAGE_PREFIX):
        name = name[len(PACKAGE_PREFIX):]
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def configure_logging(level: Union[int, str] = "INFO") -> logging.Logger:
    """
    Install a single stream handler on the package root logger.

    Calling it again only updates the level, so repeated CLI invocations in
    one process do not stack handlers.

    Args:
        level: Logging level name or number

    Returns:
        The package root logger
    """
    root = logging.getLogger(ROOT_LOGGER)
    if isinstance(level, str):
        level = level.upper()
    root.setLevel(level)
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
    return root
