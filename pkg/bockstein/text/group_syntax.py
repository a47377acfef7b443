from __future__ import annotations

import re
from typing import List, Tuple

from bockstein.calculus.abelian import AtomKind, GroupAtom, GroupExpr
from bockstein.calculus.dimtype import BocksteinGroup, GroupKind
from bockstein.calculus.primes import is_prime
from bockstein.text.literals import LiteralSyntaxError, sanitize_literal

# Атомы: Z | Q | Z/<p>^<k> | Z/<p> | Z(<p>inf) | Z_(<p>) | Z[1/<p>] | 0
_ATOM_PATTERNS: List[Tuple[re.Pattern[str], AtomKind]] = [
    (re.compile(r"Z/(?P<p>[0-9]+)(?:\^(?P<k>[0-9]+))?"), AtomKind.ZMOD_PK),
    (re.compile(r"Z\((?P<p>[0-9]+)inf\)"), AtomKind.ZP_INF),
    (re.compile(r"Z_\((?P<p>[0-9]+)\)"), AtomKind.Z_LOC),
    (re.compile(r"Z\[1/(?P<p>[0-9]+)\]"), AtomKind.Z_INV_P),
    (re.compile(r"Z"), AtomKind.Z),
    (re.compile(r"Q"), AtomKind.Q),
]
_ZERO = re.compile(r"0")
_DIGIT = re.compile(r"[0-9]")


def _skip_ws(text: str, i: int) -> int:
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def _atom_at(text: str, i: int) -> Tuple[GroupAtom | None, int]:
    if _ZERO.match(text, i) and not _DIGIT.match(text, i + 1):
        return None, i + 1
    for pattern, kind in _ATOM_PATTERNS:
        m = pattern.match(text, i)
        if not m:
            continue
        if kind in (AtomKind.Z, AtomKind.Q):
            return GroupAtom(kind), m.end()
        p = int(m.group("p"))
        if not is_prime(p):
            raise LiteralSyntaxError(text, m.start("p"), m.group(0), f"{p} is not prime")
        k = 1
        if kind is AtomKind.ZMOD_PK and m.group("k") is not None:
            k = int(m.group("k"))
            if k < 1:
                raise LiteralSyntaxError(text, m.start("k"), m.group(0), "exponent must be >= 1")
        return GroupAtom(kind, p, k), m.end()
    end = i
    while end < len(text) and text[end] != "+" and not text[end].isspace():
        end += 1
    raise LiteralSyntaxError(text, i, text[i:end] or text[i:], "expected a group atom")


def parse_group(text: str) -> GroupExpr:
    """atom ("+" atom)*; "0" - нулевая группа."""
    clean = sanitize_literal(text)
    if not clean:
        raise LiteralSyntaxError(clean, 0, "", "empty group expression")
    atoms: List[GroupAtom] = []
    i = 0
    while True:
        i = _skip_ws(clean, i)
        atom, i = _atom_at(clean, i)
        if atom is not None:
            atoms.append(atom)
        i = _skip_ws(clean, i)
        if i >= len(clean):
            break
        if clean[i] != "+":
            raise LiteralSyntaxError(clean, i, clean[i:].split()[0], "expected '+'")
        i += 1
    return GroupExpr.of(atoms)


def print_group(G: GroupExpr) -> str:
    return str(G)


def parse_basis_group(text: str) -> BocksteinGroup:
    """Одиночный член базиса Бокштейна: Q, Z/p, Z(pinf), Z_(p)."""
    G = parse_group(text)
    if len(G.atoms) != 1:
        raise LiteralSyntaxError(sanitize_literal(text), 0, text, "expected a single Bockstein group")
    a = G.atoms[0]
    if a.kind is AtomKind.Q:
        return BocksteinGroup(GroupKind.Q)
    if a.kind is AtomKind.ZMOD_PK and a.k == 1:
        return BocksteinGroup(GroupKind.ZP, a.prime)
    if a.kind is AtomKind.ZP_INF:
        return BocksteinGroup(GroupKind.ZP_INFINITY, a.prime)
    if a.kind is AtomKind.Z_LOC:
        return BocksteinGroup(GroupKind.Z_LOCALIZED, a.prime)
    raise LiteralSyntaxError(sanitize_literal(text), 0, str(a), "not a Bockstein basis group")


def basis_group_as_expr(G: BocksteinGroup) -> GroupExpr:
    if G.kind is GroupKind.Q:
        return GroupExpr.of([GroupAtom(AtomKind.Q)])
    kind = {
        GroupKind.ZP: AtomKind.ZMOD_PK,
        GroupKind.ZP_INFINITY: AtomKind.ZP_INF,
        GroupKind.Z_LOCALIZED: AtomKind.Z_LOC,
    }[G.kind]
    return GroupExpr.of([GroupAtom(kind, G.prime)])
