import logging
import sys
from functools import lru_cache

from aws_lambda_powertools import Logger


@lru_cache
def get_logger(service_name: str = "inflation_spectra") -> Logger:
    """
    Returns a singleton instance of the Logger.

    Records are written to stderr so that tables printed on stdout
    stay machine readable.

    Args:
        service_name (str): The name of the service using the logger.
                          Defaults to "inflation_spectra"

    Returns:
        Logger: Configured Logger instance from aws_lambda_powertools
    """
    return Logger(
        service=service_name,
        logger_handler=logging.StreamHandler(sys.stderr),
    )
