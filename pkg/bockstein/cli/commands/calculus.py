from __future__ import annotations

import argparse
from typing import Dict, List, Optional

from bockstein.calculus.decorated import Decoration, ext_text, is_finite
from bockstein.calculus.dimtype import (
    DimensionType,
    GroupKind,
    Singularity,
    add_const,
    boxplus,
    critical_primes,
    dim,
    evaluate,
    evaluate_slot,
    field_gap,
    is_boltyanskii,
    leq,
    oplus,
    square_dim,
    star,
    validate,
)
from bockstein.cli.deps import CommandGroup, CommandResult, arg, load_basis_group, load_type, natural_int
from bockstein.core.config import Settings
from bockstein.schemas.outputs import ClassifyOut, ExtOut, SlotOut, ext_out

group = CommandGroup(tag="calculus")

_TYPE = arg("type", metavar="D", help='dimension-type literal, e.g. "q=2 all=3+"')
_PAIR = [arg("d1", metavar="D1", help="first literal"), arg("d2", metavar="D2", help="second literal")]
_SLOT_KINDS = (GroupKind.ZP, GroupKind.ZP_INFINITY, GroupKind.Z_LOCALIZED)
_SINGULARITY = {
    Decoration.NONE: Singularity.REGULAR,
    Decoration.PLUS: Singularity.PLUS_SINGULAR,
    Decoration.MINUS: Singularity.MINUS_SINGULAR,
}


def _slot(D: DimensionType, p: Optional[int]) -> SlotOut:
    values: Dict[str, ExtOut] = {GroupKind.Q.value: ext_out(D.q)}
    for kind in _SLOT_KINDS:
        values[kind.value] = ext_out(evaluate_slot(D, kind, p))
    dec = D.default if p is None else D.at(p)
    return SlotOut(slot="p" if p is None else str(p), singularity=_SINGULARITY[dec.dec].value, values=values)


def _slot_line(s: SlotOut) -> str:
    where = "p (generic)" if s.slot == "p" else f"p={s.slot}"
    vals = " ".join(f"{k}={v}" for k, v in s.values.items() if k != GroupKind.Q.value)
    return f"{where}: {vals} [{s.singularity}]"


def _slots(D: DimensionType) -> List[SlotOut]:
    return [_slot(D, p) for p, _ in D.slots()]


@group.command("eval", help="value at a Bockstein group, or the full table", args=[
    _TYPE,
    arg("group", nargs="?", default=None, metavar="G", help="Q, Z/p, Z(pinf) or Z_(p)"),
])
def cmd_eval(args: argparse.Namespace, settings: Settings) -> CommandResult:
    D = load_type(args.type)
    if args.group is None:
        slots = _slots(D)
        lines = [f"Q: {ext_text(D.q)}"] + [_slot_line(s) for s in slots]
        data = {"type": D.literal(), "slots": [s.model_dump(mode="json") for s in slots]}
        return CommandResult("\n".join(lines), data)
    G = load_basis_group(args.group)
    value = evaluate(D, G)
    return CommandResult(ext_text(value), {"type": D.literal(), "group": str(G), "value": ext_out(value)})


@group.command("dim", help="covering dimension dim D", args=[_TYPE])
def cmd_dim(args: argparse.Namespace, settings: Settings) -> CommandResult:
    D = load_type(args.type)
    n = dim(D)
    return CommandResult(ext_text(n), {"type": D.literal(), "dim": ext_out(n)})


@group.command("star", help="involution D* (swap + and -)", args=[_TYPE])
def cmd_star(args: argparse.Namespace, settings: Settings) -> CommandResult:
    D = load_type(args.type)
    out = star(D)
    return CommandResult(out.literal(), {"input": D.literal(), "result": out.literal()})


def _binary(name: str, result: DimensionType, D1: DimensionType, D2: DimensionType) -> CommandResult:
    return CommandResult(
        result.literal(),
        {"operation": name, "d1": D1.literal(), "d2": D2.literal(), "result": result.literal()},
    )


@group.command("boxplus", help="product type D1 [+] D2", args=_PAIR)
def cmd_boxplus(args: argparse.Namespace, settings: Settings) -> CommandResult:
    D1, D2 = load_type(args.d1), load_type(args.d2)
    return _binary("boxplus", boxplus(D1, D2), D1, D2)


@group.command("oplus", help="sum type D1 (+) D2 = (D1* [+] D2*)*", args=_PAIR)
def cmd_oplus(args: argparse.Namespace, settings: Settings) -> CommandResult:
    D1, D2 = load_type(args.d1), load_type(args.d2)
    return _binary("oplus", oplus(D1, D2), D1, D2)


@group.command("add", help="shift by a constant D + k", args=[
    _TYPE,
    arg("k", type=natural_int, help="natural number"),
])
def cmd_add(args: argparse.Namespace, settings: Settings) -> CommandResult:
    D = load_type(args.type)
    out = add_const(D, args.k)
    return CommandResult(out.literal(), {"input": D.literal(), "k": args.k, "result": out.literal()})


@group.command("leq", help="pointwise order D1 <= D2", args=_PAIR + [
    arg("--assert", dest="assert_", action="store_true", help="exit 1 when the answer is false"),
])
def cmd_leq(args: argparse.Namespace, settings: Settings) -> CommandResult:
    D1, D2 = load_type(args.d1), load_type(args.d2)
    ok = leq(D1, D2)
    code = 1 if (args.assert_ and not ok) else 0
    return CommandResult("true" if ok else "false", {"d1": D1.literal(), "d2": D2.literal(), "leq": ok}, code)


@group.command("classify", help="validity, Boltyanskii/standard, critical primes", args=[_TYPE])
def cmd_classify(args: argparse.Namespace, settings: Settings) -> CommandResult:
    D = load_type(args.type)
    report = validate(D)
    n = dim(D)
    out = ClassifyOut(
        type=D.literal(),
        formal=report.formal,
        realizable=report.realizable,
        violations=[f"{v.location}: {v.rule}" for v in report.violations],
        dim=ext_out(n),
        slots=_slots(D),
    )
    if is_finite(n) and n >= 1:
        out = out.model_copy(update={
            "kind": "boltyanskii" if is_boltyanskii(D) else "standard",
            "critical_primes": critical_primes(D).describe(),
            "field_gap": field_gap(D),
            "square_dim": ext_out(square_dim(D)),
        })

    lines = [
        f"type: {out.type}",
        f"realizable: {'yes' if out.realizable else 'no'}" + (f" ({'; '.join(out.violations)})" if out.violations else ""),
        f"dim: {out.dim}",
    ]
    if out.kind is not None:
        lines.append(f"kind: {out.kind}")
        lines.append(f"critical primes: {out.critical_primes}")
        lines.append(f"field gap: {out.field_gap}")
        lines.append(f"dim(D [+] D): {out.square_dim}")
    lines.extend(_slot_line(s) for s in out.slots)
    return CommandResult("\n".join(lines), out)
