import argparse

from bockstein.cli.commands.calculus import group as calculus_group
from bockstein.cli.commands.groups import group as groups_group
from bockstein.cli.commands.search import group as search_group
from bockstein.cli.commands.ledger import group as ledger_group

GROUPS = (calculus_group, groups_group, search_group, ledger_group)


def include_commands(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]", common: argparse.ArgumentParser) -> None:
    for group in GROUPS:
        for cmd in group.commands:
            p = subparsers.add_parser(cmd.name, help=cmd.help, description=cmd.help, parents=[common])
            for a in cmd.args:
                p.add_argument(*a.flags, **a.kwargs)
            p.set_defaults(handler=cmd.handler, verb=cmd.name)
