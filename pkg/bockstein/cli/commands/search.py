from __future__ import annotations

import argparse
from typing import List, Optional

from bockstein.cli.deps import CommandGroup, CommandResult, arg, natural_int, positive_int, prime_list
from bockstein.core.config import Settings
from bockstein.schemas.certificate import SearchBounds, SearchReport
from bockstein.services.search import search_decomposition, search_map

group = CommandGroup(tag="search")

_BOUNDS = [
    arg("--max-value", type=positive_int, default=None, help="largest value in candidate types (default from settings)"),
    arg("--allow-exceptions", type=prime_list, default=None, metavar="P,...", help="also vary the listed primes"),
    arg("--include-unrealizable", action="store_true", help="admit types violating the zero rule"),
    arg("--workers", type=natural_int, default=None, help="worker processes, 0 = physical cores"),
    arg("--assert", dest="assert_", action="store_true", help="exit 1 when nothing is found"),
]


def _bounds(args: argparse.Namespace, settings: Settings) -> SearchBounds:
    primes: Optional[List[int]] = args.allow_exceptions
    return SearchBounds(
        max_value=args.max_value if args.max_value is not None else settings.search_max_value,
        primes=primes or [],
        realizable_only=not args.include_unrealizable,
    )


def _workers(args: argparse.Namespace, settings: Settings) -> int:
    return args.workers if args.workers is not None else settings.search_workers


def _result(args: argparse.Namespace, report: SearchReport) -> CommandResult:
    code = 1 if (args.assert_ and not report.certificates) else 0
    return CommandResult(report.to_text(), report, code)


@group.command("search-decomposition", help="witness pairs for exotic decompositions in dimension n", args=[
    arg("n", type=int, help="dimension n >= 2"),
    *_BOUNDS,
])
def cmd_search_decomposition(args: argparse.Namespace, settings: Settings) -> CommandResult:
    report = search_decomposition(
        args.n,
        _bounds(args, settings),
        workers=_workers(args, settings),
        chunk_size=settings.search_chunk_size,
    )
    return _result(args, report)


@group.command("search-map", help="witness pairs for exotic maps X -> Y, dim X = n, dim Y = m", args=[
    arg("n", type=int, help="dimension of X, n >= 4"),
    arg("m", type=int, help="dimension of Y, 2 <= m <= n-2"),
    *_BOUNDS,
])
def cmd_search_map(args: argparse.Namespace, settings: Settings) -> CommandResult:
    report = search_map(
        args.n,
        args.m,
        _bounds(args, settings),
        workers=_workers(args, settings),
        chunk_size=settings.search_chunk_size,
    )
    return _result(args, report)
