from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel

from bockstein.calculus.dimtype import BocksteinGroup, DimensionType
from bockstein.calculus.abelian import GroupExpr
from bockstein.core.config import Settings
from bockstein.text.group_syntax import parse_basis_group, parse_group
from bockstein.text.literals import parse_dimtype


class UsageError(RuntimeError):
    """Ошибка вызова: exit 2, одна строка диагностики."""

    def __init__(self: "UsageError", message: str, token: Optional[str] = None) -> None:
        super().__init__(message)
        self.token = token


@dataclass
class CommandResult:
    text: str
    data: Any = None
    exit_code: int = 0

    def structured(self) -> Any:
        if isinstance(self.data, BaseModel):
            return self.data.model_dump(mode="json")
        return self.data


Handler = Callable[[argparse.Namespace, Settings], CommandResult]


@dataclass
class _Arg:
    flags: Tuple[str, ...]
    kwargs: Dict[str, Any]


def arg(*flags: str, **kwargs: Any) -> _Arg:
    return _Arg(flags, kwargs)


@dataclass
class _Command:
    name: str
    help: str
    args: List[_Arg]
    handler: Handler


@dataclass
class CommandGroup:
    """Набор подкоманд одной темы (как роутер: регистрируется в include_commands)."""

    tag: str
    commands: List[_Command] = field(default_factory=list)

    def command(self, name: str, *, help: str, args: Optional[List[_Arg]] = None) -> Callable[[Handler], Handler]:
        def _wrap(fn: Handler) -> Handler:
            self.commands.append(_Command(name=name, help=help, args=list(args or []), handler=fn))
            return fn

        return _wrap


# --- Разбор литералов (ошибки библиотеки пробрасываются и дают exit 2)

def load_type(text: str) -> DimensionType:
    return parse_dimtype(text)


def load_group(text: str) -> GroupExpr:
    return parse_group(text)


def load_basis_group(text: str) -> BocksteinGroup:
    return parse_basis_group(text)


def prime_list(raw: str) -> List[int]:
    """"2,3" -> [2, 3]; простота проверяется в SearchBounds."""
    out: List[int] = []
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        if not (part.isascii() and part.isdigit()):
            raise argparse.ArgumentTypeError(f"expected a comma-separated list of primes, got {part!r}")
        out.append(int(part))
    return out


def positive_int(raw: str) -> int:
    try:
        v = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {raw!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {raw!r}")
    return v


def natural_int(raw: str) -> int:
    try:
        v = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {raw!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {raw!r}")
    return v
