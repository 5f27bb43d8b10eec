import logging
import sys

from loki_logger_handler.loki_logger_handler import LokiLoggerHandler

from config.config import Settings, load_config

APPLICATION_NAME = "combinatorics-toolkit"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(settings: Settings | None = None) -> logging.Logger:
    """Sets up logging configuration with a stderr handler and, when configured, Loki."""
    settings = settings or load_config()

    root_logger = logging.getLogger()
    root_logger.setLevel(settings.log_level.upper())

    # stdout carries command results, so console logs go to stderr
    if not any(getattr(h, "_combi_handler", False) for h in root_logger.handlers):
        stream_handler = logging.StreamHandler(sys.stderr)
        stream_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        stream_handler._combi_handler = True  # type: ignore[attr-defined]
        root_logger.addHandler(stream_handler)

        if settings.grafana_loki_url is not None:
            loki_handler = LokiLoggerHandler(
                url=str(settings.grafana_loki_url),
                labels={"application": APPLICATION_NAME, "environment": settings.environment},
                label_keys={},
                timeout=10,
            )
            loki_handler._combi_handler = True  # type: ignore[attr-defined]
            root_logger.addHandler(loki_handler)

    return logging.getLogger(APPLICATION_NAME)
