from __future__ import annotations

import logging
import sys
from dataclasses import dataclass
from typing import Any, Optional

from bockstein.core.config import Settings
from bockstein.core.context import INVOCATION_ID

log = logging.getLogger("bockstein")
search_log = logging.getLogger("bockstein.search")
ledger_log = logging.getLogger("bockstein.ledger")

LOG_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | rid=%(rid)s | %(message)s"

LOG_PROFILES: dict[str, dict[str, Any]] = {
    "DEFAULT": {
        "title": "Обычные логи (WARNING), без поиска и журнала",
        "log_level": "WARNING",
        "search_log": False,
        "ledger_log": False,
    },
    "SEARCH_DEBUG": {
        "title": "Отладка поиска (INFO + чанки поиска)",
        "log_level": "INFO",
        "search_log": True,
        "ledger_log": False,
    },
    "LEDGER_DEBUG": {
        "title": "Отладка журнала (INFO + каждая запись журнала)",
        "log_level": "INFO",
        "search_log": False,
        "ledger_log": True,
    },
    "FULL_DEBUG": {
        "title": "Полная отладка (DEBUG + поиск + журнал)",
        "log_level": "DEBUG",
        "search_log": True,
        "ledger_log": True,
    },
    "QUIET": {
        "title": "Тихий режим (ERROR)",
        "log_level": "ERROR",
        "search_log": False,
        "ledger_log": False,
    },
}


@dataclass
class LoggingRuntime:
    log_level: str
    search_log: bool
    ledger_log: bool


class InvocationIdFilter(logging.Filter):
    def filter(self, record: logging.LogRecord) -> bool:
        record.rid = INVOCATION_ID.get()
        return True


def _our_handler() -> Optional[logging.Handler]:
    for h in logging.getLogger().handlers:
        if getattr(h, "_bockstein", False):
            return h
    return None


def setup_base_logging(settings: Settings) -> None:
    """Один обработчик на stderr; stdout остаётся для вывода команд."""
    level = getattr(logging, (settings.log_level or "WARNING").upper(), logging.WARNING)
    root = logging.getLogger()

    handler = _our_handler()
    if handler is None:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler.addFilter(InvocationIdFilter())
        handler._bockstein = True  # type: ignore[attr-defined]
        root.addHandler(handler)
    elif isinstance(handler, logging.StreamHandler):
        # sys.stderr мог смениться (перехват вывода в тестах)
        handler.setStream(sys.stderr)

    handler.setLevel(level)
    log.setLevel(level)


def normalize_profile(v: Optional[str]) -> Optional[str]:
    if not v:
        return None
    v = v.strip().upper().replace("-", "_")
    return v or None


def resolve_runtime(settings: Settings, profile: Optional[str] = None) -> LoggingRuntime:
    """
    - профиль из флага, иначе из BOCKSTEIN_LOG_PROFILE
    - без профиля: уровень из BOCKSTEIN_LOG_LEVEL (по умолчанию WARNING)
    """
    key = normalize_profile(profile or settings.log_profile)
    if key:
        preset = LOG_PROFILES.get(key)
        if not preset:
            raise RuntimeError(f"Unknown log profile {key}. Available: {', '.join(LOG_PROFILES.keys())}")
        return LoggingRuntime(
            log_level=preset["log_level"],
            search_log=bool(preset["search_log"]),
            ledger_log=bool(preset["ledger_log"]),
        )
    return LoggingRuntime(log_level=(settings.log_level or "WARNING").upper(), search_log=False, ledger_log=False)


def apply_logging_runtime(runtime: LoggingRuntime) -> None:
    lvl = getattr(logging, runtime.log_level.upper(), logging.WARNING)

    handler = _our_handler()
    if handler is not None:
        handler.setLevel(logging.DEBUG if (runtime.search_log or runtime.ledger_log) else lvl)

    log.setLevel(lvl)
    # подробные логи поиска/журнала идут на DEBUG
    search_log.setLevel(logging.DEBUG if runtime.search_log else max(lvl, logging.INFO))
    ledger_log.setLevel(logging.DEBUG if runtime.ledger_log else max(lvl, logging.INFO))

    log.debug(
        "Logging profile applied: level=%s, search_log=%s, ledger_log=%s",
        runtime.log_level,
        runtime.search_log,
        runtime.ledger_log,
    )


def apply_logging_profile(settings: Settings, profile: Optional[str] = None) -> LoggingRuntime:
    runtime = resolve_runtime(settings, profile)
    apply_logging_runtime(runtime)
    return runtime
