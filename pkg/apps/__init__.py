"""Apps package."""

from loguru import logger

# Library use stays quiet; the CLI re-enables logging for this package.
logger.disable("apps")
