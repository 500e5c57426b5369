"""Logging setup for the coherence_lab logger hierarchy."""

import logging
import sys

LOGGER_NAME = "coherence_lab"
HANDLER_NAME = "coherence_lab.stderr"


def configure_logging(level: str = "WARNING") -> logging.Logger:
    """Attach a single stderr handler to the package logger.
    
    Repeated calls update the level and point the handler at the current
    ``sys.stderr``, which may have been replaced since the last call.
    """
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(level)
    handler = next((h for h in logger.handlers if h.get_name() == HANDLER_NAME), None)
    if not isinstance(handler, logging.StreamHandler):
        handler = logging.StreamHandler()
        handler.set_name(HANDLER_NAME)
        handler.setFormatter(
            logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")
        )
        logger.addHandler(handler)
    handler.setStream(sys.stderr)
    return logger
