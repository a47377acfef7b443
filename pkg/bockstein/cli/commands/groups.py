from __future__ import annotations

import argparse

from bockstein.calculus.decorated import ext_text
from bockstein.cli.deps import CommandGroup, CommandResult, arg, load_group, load_type
from bockstein.core.config import Settings
from bockstein.schemas.outputs import DimGOut, SigmaOut, ext_out
from bockstein.services.groups import dim_g, sigma

group = CommandGroup(tag="groups")

_GROUP = arg("group", metavar="G", help='direct sum of Z, Q, Z/p^k, Z(pinf), Z_(p), Z[1/p], e.g. "Z + Z/4"')


@group.command("sigma", help="Bockstein family sigma(G)", args=[_GROUP])
def cmd_sigma(args: argparse.Namespace, settings: Settings) -> CommandResult:
    G = load_group(args.group)
    s = sigma(G)
    out = SigmaOut(
        group=str(G),
        members=s.render(),
        cofinite_localized=s.cofinite_localized,
        excluded=sorted(s.excluded),
    )
    return CommandResult(str(s), out)


@group.command("dimg", help="dim_G through sigma(G)", args=[
    arg("type", metavar="D", help="dimension-type literal"),
    _GROUP,
])
def cmd_dimg(args: argparse.Namespace, settings: Settings) -> CommandResult:
    D = load_type(args.type)
    G = load_group(args.group)
    res = dim_g(D, G)
    out = DimGOut(type=D.literal(), group=str(G), value=ext_out(res.value), degenerate=res.degenerate)
    return CommandResult(ext_text(res.value), out)
