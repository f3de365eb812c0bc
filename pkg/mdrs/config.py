"""
Settings loaded from the environment (.env supported)
환경 변수(.env 포함)에서 읽는 실행 설정
"""

import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from .errors import InvalidSettings

DEFAULT_BUDGET = 2 ** 24
DEFAULT_CHUNK = 2 ** 15


def _env_flag(name: str) -> bool:
    return os.getenv(name, "").strip().lower() in ("1", "true", "yes", "on")


class Settings(BaseModel):
    """Runtime settings shared by the library and the CLI"""

    ci: bool = Field(False, description="MDRS_CI: randomized commands must be given --seed")
    budget: int = Field(DEFAULT_BUDGET, ge=1, description="MDRS_BUDGET: max codewords per exhaustive scan")
    threads: int = Field(1, ge=1, description="MDRS_THREADS: default worker count")
    chunk: int = Field(DEFAULT_CHUNK, ge=1, description="MDRS_CHUNK: messages per enumeration chunk")
    log_level: str = Field("WARNING", description="MDRS_LOG_LEVEL")

    @classmethod
    def from_env(cls) -> "Settings":
        load_dotenv()
        try:
            return cls(
                ci=_env_flag("MDRS_CI"),
                budget=int(os.getenv("MDRS_BUDGET", DEFAULT_BUDGET)),
                threads=int(os.getenv("MDRS_THREADS", 1)),
                chunk=int(os.getenv("MDRS_CHUNK", DEFAULT_CHUNK)),
                log_level=os.getenv("MDRS_LOG_LEVEL", "WARNING").upper(),
            )
        except (ValueError, ValidationError) as e:
            raise InvalidSettings(f"invalid MDRS_* environment: {e}") from e


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Settings singleton"""
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings


def reset_settings() -> None:
    """Drop the cached settings so the next call re-reads the environment"""
    global _settings
    _settings = None
