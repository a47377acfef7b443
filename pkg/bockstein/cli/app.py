from __future__ import annotations

import argparse
import json
import logging
import sys
import time
import uuid
from typing import Any, NoReturn, Optional, Sequence

from pydantic import ValidationError

from bockstein.calculus.dimtype import DomainRangeError, FormalValidityError
from bockstein.cli.commands import include_commands
from bockstein.cli.deps import CommandResult, UsageError
from bockstein.core.build_info import version_line, version_payload
from bockstein.core.config import Settings
from bockstein.core.context import INVOCATION_ID
from bockstein.core.logging_runtime import apply_logging_profile, setup_base_logging
from bockstein.schemas.outputs import OutputEnvelope
from bockstein.text.literals import LiteralSyntaxError

log = logging.getLogger("bockstein")


class _HelpRequested(Exception):
    def __init__(self: "_HelpRequested", text: str) -> None:
        super().__init__("help")
        self.text = text


class _Parser(argparse.ArgumentParser):
    """argparse без sys.exit: ошибки -> UsageError, --help -> текст в конверте."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")

    def print_help(self, file: Any = None) -> None:
        raise _HelpRequested(self.format_help())

    def exit(self, status: int = 0, message: Optional[str] = None) -> NoReturn:
        raise UsageError((message or "").strip() or f"{self.prog}: exit {status}")


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured (JSON) output")
    common.add_argument("--log-profile", default=None, help="DEFAULT, SEARCH_DEBUG, LEDGER_DEBUG, FULL_DEBUG, QUIET")

    parser = _Parser(prog="bockstein", description="Calculus of dimension types over the Bockstein basis.")
    parser.add_argument("--version", action="store_true", help="print the build information and exit")
    parser.add_argument("--json", action="store_true", help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="verb", metavar="COMMAND")
    include_commands(sub, common)
    return parser


def _render(result: CommandResult, structured: bool) -> OutputEnvelope:
    data = result.structured()
    if structured:
        body = json.dumps(data, indent=2, ensure_ascii=False)
    else:
        body = result.text
    return OutputEnvelope(
        format="structured" if structured else "text",
        body=body,
        exit_code=result.exit_code,
        data=data,
    )


def _usage(message: str, structured: bool) -> OutputEnvelope:
    # одна строка диагностики
    line = " ".join(str(message).split())
    if structured:
        return OutputEnvelope(format="structured", body=json.dumps({"error": line}), exit_code=2, data={"error": line})
    return OutputEnvelope(format="text", body=f"error: {line}", exit_code=2)


def _wants_json(argv: Sequence[str]) -> bool:
    return "--json" in argv


def _dispatch(argv: Sequence[str], settings: Settings) -> OutputEnvelope:
    parser = build_parser()
    args = parser.parse_args(list(argv))
    structured = _wants_json(argv)

    if args.version:
        return _render(CommandResult(version_line(), version_payload()), structured)
    if not args.verb:
        raise UsageError("missing command; run with --help for the list")

    try:
        apply_logging_profile(settings, args.log_profile)
    except RuntimeError as e:
        raise UsageError(str(e), token=args.log_profile) from e

    started = time.perf_counter()
    result: CommandResult = args.handler(args, settings)
    log.info("%s done: exit=%d took=%.1fms", args.verb, result.exit_code, (time.perf_counter() - started) * 1000.0)
    return _render(result, structured)


def run(argv: Optional[Sequence[str]] = None, settings: Optional[Settings] = None) -> OutputEnvelope:
    argv = list(sys.argv[1:] if argv is None else argv)
    structured = _wants_json(argv)
    token = INVOCATION_ID.set(uuid.uuid4().hex[:12])
    try:
        try:
            settings = settings or Settings()
        except ValidationError as e:
            return _usage(f"bad BOCKSTEIN_* environment: {e.errors()[0]['msg']}", structured)
        setup_base_logging(settings)

        try:
            return _dispatch(argv, settings)
        except _HelpRequested as h:
            return OutputEnvelope(format="text", body=h.text.rstrip("\n"), exit_code=0)
        except UsageError as e:
            log.debug("usage error: %s", e)
            return _usage(str(e), structured)
        except LiteralSyntaxError as e:
            return _usage(f"bad literal: {e}", structured)
        except FormalValidityError as e:
            return _usage(f"{e.rule}: {e}", structured)
        except DomainRangeError as e:
            return _usage(str(e), structured)
        except ValidationError as e:
            return _usage(e.errors()[0]["msg"], structured)
    finally:
        INVOCATION_ID.reset(token)


def main() -> int:
    env = run()
    stream = sys.stdout if env.exit_code != 2 else sys.stderr
    if env.body:
        print(env.body, file=stream)
    return env.exit_code
