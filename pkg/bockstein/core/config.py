from __future__ import annotations

from typing import Any, Optional

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # только окружение: BOCKSTEIN_SEARCH_MAX_VALUE=8 и т.п.; флаги CLI важнее
    model_config = SettingsConfigDict(env_prefix="BOCKSTEIN_", extra="ignore")

    # --- Поиск свидетелей
    search_max_value: int = 6

    # 0 = по числу физических ядер (psutil)
    search_workers: int = 0

    # сколько первых компонент в одной задаче пула
    search_chunk_size: int = 64

    # --- Журнал проверки (verify-paper)
    verify_max_n: int = 12
    law_max_value: int = 2

    log_level: Optional[str] = None
    log_profile: Optional[str] = None

    @field_validator("search_max_value")
    @classmethod
    def _v_max_value(cls: type["Settings"], v: int) -> int:
        if v < 1:
            raise ValueError("search_max_value must be >= 1")
        return v

    @field_validator("search_workers")
    @classmethod
    def _v_workers(cls: type["Settings"], v: int) -> int:
        if v < 0:
            raise ValueError("search_workers must be >= 0")
        return v

    @field_validator("search_chunk_size")
    @classmethod
    def _v_chunk(cls: type["Settings"], v: int) -> int:
        if v < 1:
            raise ValueError("search_chunk_size must be >= 1")
        return v

    @field_validator("verify_max_n")
    @classmethod
    def _v_verify_max_n(cls: type["Settings"], v: int) -> int:
        if v < 5:
            raise ValueError("verify_max_n must be >= 5")
        return v

    @field_validator("law_max_value")
    @classmethod
    def _v_law_max_value(cls: type["Settings"], v: int) -> int:
        if v < 1 or v > 6:
            raise ValueError("law_max_value must be 1..6")
        return v

    @field_validator("log_level", mode="before")
    @classmethod
    def _v_log_level(cls: type["Settings"], v: Any) -> Optional[str]:
        if v is None or v == "":
            return None
        v = str(v).strip().upper()
        if v not in ("DEBUG", "INFO", "WARNING", "ERROR"):
            raise ValueError("log_level must be DEBUG|INFO|WARNING|ERROR")
        return v
