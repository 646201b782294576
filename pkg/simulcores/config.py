import os
import logging
from typing import Optional

import dotenv
from pydantic import BaseModel, ConfigDict, Field

from .errors import ConfigurationError

# Load environment variables from a local .env if one exists
dotenv.load_dotenv()

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class Settings(BaseModel):
    """
    Runtime configuration. Every value has a default; nothing is required.
    """
    model_config = ConfigDict(frozen=True)

    log_level: str = Field("WARNING", description="Root logging level")
    log_file: Optional[str] = Field(None, description="Optional log file, written in addition to stderr")
    max_oracle_size: int = Field(5000, ge=0, description="Largest Tripathi bound a verification sweep may use")
    threads: int = Field(1, ge=1, description="Workers for oracle enumeration and lattice-point search")
    api_host: str = Field("0.0.0.0", description="Bind address for the HTTP API")
    api_port: int = Field(3000, ge=1, le=65535, description="Port for the HTTP API")


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}")


def get_settings(default_log_level: str = "WARNING") -> Settings:
    """
    Build settings from the environment.

    Args:
        default_log_level: Level used when SIMULCORES_LOG_LEVEL is unset

    Returns:
        A frozen Settings instance
    """
    return Settings(
        log_level=os.getenv("SIMULCORES_LOG_LEVEL", default_log_level).upper(),
        log_file=os.getenv("SIMULCORES_LOG_FILE") or None,
        max_oracle_size=_int_from_env("SIMULCORES_MAX_ORACLE_SIZE", 5000),
        threads=_int_from_env("SIMULCORES_THREADS", 1),
        api_host=os.getenv("SIMULCORES_API_HOST", "0.0.0.0"),
        api_port=_int_from_env("SIMULCORES_API_PORT", 3000),
    )


def configure_logging(level: str = "WARNING", log_file: Optional[str] = None) -> None:
    """
    Configure root logging: always stderr, plus a file when requested.
    """
    handlers = [logging.StreamHandler()]
    if log_file:
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )
