from __future__ import annotations

import argparse

from bockstein.cli.deps import CommandGroup, CommandResult, arg, positive_int
from bockstein.core.config import Settings
from bockstein.services.ledger import verify_paper

group = CommandGroup(tag="ledger")


@group.command("verify-paper", help="replay the printed computations; exit 1 on any failed entry", args=[
    arg("--max-n", type=positive_int, default=None, help="upper end of the n-range (default from settings)"),
    arg("--law-max-value", type=positive_int, default=None, help="value bound of the law replay"),
    arg("--failures-only", action="store_true", help="print failed entries and the summary only"),
])
def cmd_verify_paper(args: argparse.Namespace, settings: Settings) -> CommandResult:
    report = verify_paper(
        max_n=args.max_n if args.max_n is not None else settings.verify_max_n,
        law_max_value=args.law_max_value if args.law_max_value is not None else settings.law_max_value,
    )
    text = report.to_text()
    if args.failures_only:
        total = len(report.entries)
        text = "\n".join([e.line() for e in report.failures] + [f"{total - len(report.failures)}/{total} entries pass"])
    return CommandResult(text, report, 0 if report.passed else 1)
