from __future__ import annotations

import logging
from functools import lru_cache
from typing import Literal, Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


Executor = Literal["process", "thread"]

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", extra="ignore")

    APP_ENV: str = "local"
    LOG_LEVEL: str = "INFO"

    # Solver policies
    WREATHMAC_CACHE: str = ".wreathmac-cache"
    JOBS: int = Field(1, ge=1)
    EXECUTOR: Executor = "process"
    FACTOR_DEPTH_SLACK: int = Field(1, ge=0)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()  # type: ignore[call-arg]


def configure_logging(settings: Optional[Settings] = None) -> None:
    """Send log records to stderr so stdout stays clean JSON."""
    s = settings or get_settings()
    level = getattr(logging, s.LOG_LEVEL.upper(), logging.INFO)
    logging.basicConfig(level=level, format=LOG_FORMAT)
