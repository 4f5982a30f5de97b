import logging
import sys

import structlog

from sigma_lab import settings


__all__ = ["configure_logging"]


def configure_logging(level: str | None = None) -> None:
    level = (level or settings.SIGMA_LAB_LOG_LEVEL).upper()
    if level not in logging.getLevelNamesMapping():
        raise ValueError(
            f"Invalid log level: {level}. Must be one of ['DEBUG', 'INFO',"
            " 'WARNING', 'ERROR', 'CRITICAL']"
        )
    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso", utc=True),
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(
            logging.getLevelNamesMapping()[level]
        ),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
