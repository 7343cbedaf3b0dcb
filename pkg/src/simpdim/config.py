"""Configuration module for simpdim."""

import os
import logging
from logging.handlers import RotatingFileHandler
from pathlib import Path

# Project root (the directory holding src/)
PROJECT_ROOT = Path(__file__).parent.parent

# Computation limits
FACE_CAP = int(os.environ.get("SIMPDIM_FACE_CAP", "5000000"))
MAX_ENUMERATION_N = int(os.environ.get("SIMPDIM_MAX_ENUMERATION_N", "6"))

# Parallelism; results never depend on it
DEFAULT_THREADS = int(os.environ.get("SIMPDIM_THREADS", "1"))

# Display and high-precision settings
DECIMAL_DIGITS = int(os.environ.get("SIMPDIM_DECIMAL_DIGITS", "12"))
PRECISION_DIGITS = int(os.environ.get("SIMPDIM_PRECISION_DIGITS", "60"))

# Logging configuration
LOG_DIR = Path(os.environ.get("SIMPDIM_LOG_DIR", str(PROJECT_ROOT / "logs")))
LOG_DIR.mkdir(parents=True, exist_ok=True)
LOG_FILE = LOG_DIR / "simpdim.log"
LOG_LEVEL = os.environ.get("LOG_LEVEL", "INFO").upper()
LOG_MAX_FILE_SIZE = int(os.environ.get("LOG_MAX_FILE_SIZE", "10485760"))  # 10MB default
LOG_BACKUP_COUNT = int(os.environ.get("LOG_BACKUP_COUNT", "5"))

# MCP server configuration
MCP_TRANSPORT = os.environ.get("MCP_TRANSPORT", "stdio")  # stdio, sse, or streamable-http
MCP_HOST = os.environ.get("MCP_HOST", "0.0.0.0")
MCP_PORT = int(os.environ.get("MCP_PORT", "8000"))

log_formatter = logging.Formatter(
    "%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s"
)

file_handler = RotatingFileHandler(
    LOG_FILE,
    encoding="utf-8",
    maxBytes=LOG_MAX_FILE_SIZE,
    backupCount=LOG_BACKUP_COUNT,
)
file_handler.setFormatter(log_formatter)

# stdout carries results only, so the console handler writes to stderr
console_handler = None
if os.environ.get("SIMPDIM_ENV", "production").lower() == "development":
    console_handler = logging.StreamHandler()
    console_handler.setFormatter(log_formatter)

logger = logging.getLogger("simpdim")
logger.setLevel(getattr(logging, LOG_LEVEL, logging.INFO))
logger.addHandler(file_handler)

if console_handler:
    logger.addHandler(console_handler)


def log_configuration() -> None:
    """Log current configuration settings."""
    logger.info("=== simpdim configuration ===")
    logger.info(f"Face cap: {FACE_CAP}")
    logger.info(f"Max enumeration n: {MAX_ENUMERATION_N}")
    logger.info(f"Default threads: {DEFAULT_THREADS}")
    logger.info(f"Decimal digits: {DECIMAL_DIGITS}")
    logger.info(f"Precision digits: {PRECISION_DIGITS}")
    logger.info(f"Transport: {MCP_TRANSPORT}")
    if MCP_TRANSPORT in ["sse", "streamable-http"]:
        logger.info(f"Server Host: {MCP_HOST}")
        logger.info(f"Server Port: {MCP_PORT}")
    logger.info(f"Log Level: {LOG_LEVEL}")
    logger.info("=== Configuration End ===")


def get_face_cap() -> int:
    """Return the refinement face cap, re-reading SIMPDIM_FACE_CAP so late overrides apply."""
    value = os.environ.get("SIMPDIM_FACE_CAP")
    if value is None:
        return FACE_CAP
    try:
        return int(value)
    except ValueError:
        logger.warning(f"Ignoring non-integer SIMPDIM_FACE_CAP={value!r}")
        return FACE_CAP
