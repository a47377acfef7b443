from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import FrozenSet, List

from bockstein.calculus.abelian import AtomKind, GroupExpr
from bockstein.calculus.decorated import ExtNat
from bockstein.calculus.dimtype import (
    BocksteinGroup,
    DimensionType,
    GroupKind,
    Q,
    ZLocalized,
    Zp,
    ZpInfinity,
    evaluate,
    evaluate_slot,
    require_formal,
)
from bockstein.calculus.primes import PrimeSet
from bockstein.text.group_syntax import parse_group

__all__ = ["SigmaSet", "DimG", "parse_group", "sigma", "dim_g", "localized_primes"]

log = logging.getLogger("bockstein.groups")


@dataclass(frozen=True)
class SigmaSet:
    """
    sigma(G): конечные члены + необязательное семейство
    "Z_(p) для всех p, кроме excluded".
    """

    members: FrozenSet[BocksteinGroup] = frozenset()
    cofinite_localized: bool = False
    excluded: FrozenSet[int] = frozenset()

    @property
    def is_empty(self) -> bool:
        return not self.members and not self.cofinite_localized

    def __contains__(self, G: object) -> bool:
        if G in self.members:
            return True
        return (
            self.cofinite_localized
            and isinstance(G, BocksteinGroup)
            and G.kind is GroupKind.Z_LOCALIZED
            and G.prime not in self.excluded
        )

    def render(self) -> List[str]:
        out = [str(G) for G in sorted(self.members, key=_member_key)]
        if self.cofinite_localized:
            if self.excluded:
                out.append("Z_(p) for all p not in {" + ", ".join(str(p) for p in sorted(self.excluded)) + "}")
            else:
                out.append("Z_(p) for all p")
        return out

    def __str__(self) -> str:
        rendered = self.render()
        return ", ".join(rendered) if rendered else "(empty)"


_KIND_ORDER = {GroupKind.Q: 0, GroupKind.ZP: 1, GroupKind.ZP_INFINITY: 2, GroupKind.Z_LOCALIZED: 3}


def _member_key(G: BocksteinGroup) -> tuple:
    return (G.prime or 0, _KIND_ORDER[G.kind])


def localized_primes(G: GroupExpr) -> PrimeSet:
    """Простые p, по которым G/Tor не делится на p (при G/Tor != 0)."""
    out = PrimeSet.finite(())
    for a in G.torsion_free_atoms:
        if a.kind is AtomKind.Z:
            out = out.union(PrimeSet.all_but())
        elif a.kind is AtomKind.Z_LOC:
            out = out.union(PrimeSet.finite([a.prime]))
        elif a.kind is AtomKind.Z_INV_P:
            out = out.union(PrimeSet.all_but([a.prime]))
    return out


def sigma(G: GroupExpr) -> SigmaSet:
    members = set()

    tf = G.torsion_free_atoms
    loc = localized_primes(G)
    if tf and loc.is_empty:
        # G/Tor != 0 и делится на все p
        members.add(Q)
    if not loc.cofinite:
        members.update(ZLocalized(p) for p in loc.primes)

    for p in G.torsion_primes:
        tor = G.p_torsion_atoms(p)
        if all(a.kind is AtomKind.ZP_INF for a in tor):
            members.add(ZpInfinity(p))
        else:
            members.add(Zp(p))

    out = SigmaSet(
        members=frozenset(members),
        cofinite_localized=loc.cofinite,
        excluded=loc.primes if loc.cofinite else frozenset(),
    )
    log.debug("sigma(%s) = %s", G, out)
    return out


@dataclass(frozen=True)
class DimG:
    value: ExtNat
    degenerate: bool = False


def dim_g(D: DimensionType, G: GroupExpr) -> DimG:
    """Теорема Бокштейна: dim_G = sup dim_H по H из sigma(G). Для G = 0 -> 0 (degenerate)."""
    require_formal(D)
    s = sigma(G)
    if s.is_empty:
        return DimG(0, degenerate=True)
    values: List[ExtNat] = [evaluate(D, H) for H in s.members]
    if s.cofinite_localized:
        # default действует на бесконечно многих простых вне S
        values.append(evaluate_slot(D, GroupKind.Z_LOCALIZED))
        values.extend(
            evaluate(D, ZLocalized(p)) for p in D.exception_primes if p not in s.excluded
        )
    return DimG(max(values))
