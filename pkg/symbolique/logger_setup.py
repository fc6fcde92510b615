"""Logging for the command-line tool. Records go to stderr so stdout stays a clean payload."""

import logging
import sys


class StderrHandler(logging.StreamHandler):
    """Stream handler bound to whatever `sys.stderr` is at emit time."""

    def __init__(self):
        super().__init__(sys.stderr)

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, _value):
        pass


def setup_logging(level: int = logging.INFO) -> logging.Logger:
    """Configures the `symbolique` logger; safe to call once per `main()` run."""
    logger = logging.getLogger("symbolique")
    logger.setLevel(level)

    existing = [h for h in logger.handlers if isinstance(h, StderrHandler)]
    if not existing:
        handler = StderrHandler()
        handler.setFormatter(logging.Formatter("%(asctime)s - %(levelname)s - %(message)s"))
        logger.addHandler(handler)
        existing = [handler]
    for handler in existing:
        handler.setLevel(level)

    return logger
