import logging
import sys

import structlog


def configure_logging(verbose: bool = False) -> None:
    """Route structlog events to standard error; WARNING and up unless verbose."""
    level = logging.DEBUG if verbose else logging.WARNING
    processors = [
        structlog.contextvars.merge_contextvars,
        structlog.processors.add_log_level,
    ]
    if verbose:
        processors.append(structlog.processors.TimeStamper(fmt='iso'))
    processors.append(structlog.dev.ConsoleRenderer(colors=False))
    structlog.configure(
        processors=processors,
        wrapper_class=structlog.make_filtering_bound_logger(level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
