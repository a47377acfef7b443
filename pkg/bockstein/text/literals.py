from __future__ import annotations

import re
from typing import Dict, Iterator, Optional, Tuple

from bockstein.calculus.decorated import INF, Decoration, DecoratedValue, ExtNat
from bockstein.calculus.dimtype import DimensionType
from bockstein.calculus.primes import is_prime

_DV_RE = re.compile(r"^(?:(?P<inf>inf)|(?P<n>[0-9]+)(?P<dec>[+-]?))$")
_EXT_RE = re.compile(r"^(?:inf|[0-9]+)$")
_TOKEN_RE = re.compile(r"^(?P<key>q|all|p(?P<p>[0-9]+))=(?P<val>.*)$")
_DEC_BY_SUFFIX: Dict[str, Decoration] = {"": Decoration.NONE, "+": Decoration.PLUS, "-": Decoration.MINUS}


class LiteralSyntaxError(ValueError):
    def __init__(self: "LiteralSyntaxError", text: str, position: int, token: str, reason: str) -> None:
        super().__init__(f"{reason} at position {position}: {token!r}")
        self.text = text
        self.position = position
        self.token = token
        self.reason = reason


def sanitize_literal(s: str) -> str:
    """\u0421\u0440\u0435\u0437\u0430\u0435\u0442 BOM \u0438 \u043f\u0440\u043e\u0431\u0435\u043b\u044b \u043f\u043e \u043a\u0440\u0430\u044f\u043c; \u0432\u043d\u0443\u0442\u0440\u0435\u043d\u043d\u0438\u0435 \u043f\u0440\u043e\u0431\u0435\u043b\u044b \u043d\u0435 \u0442\u0440\u043e\u0433\u0430\u0435\u0442.

    \u041f\u043e\u0437\u0438\u0446\u0438\u0438 \u0432 LiteralSyntaxError \u0441\u0447\u0438\u0442\u0430\u044e\u0442\u0441\u044f \u043f\u043e \u044d\u0442\u043e\u0439 \u0441\u0442\u0440\u043e\u043a\u0435 (e.text).
    """
    s = (s or "").lstrip("\ufeff\uFFFD")
    return s.strip()


def _tokens(text: str) -> Iterator[Tuple[int, str]]:
    for m in re.finditer(r"\S+", text):
        yield m.start(), m.group(0)


def _parse_ext(text: str, position: int, token: str, raw: str) -> ExtNat:
    if raw == "inf":
        return INF
    if not _EXT_RE.match(raw):
        raise LiteralSyntaxError(text, position, token, "expected a natural number or 'inf'")
    return int(raw)


def parse_decorated(raw: str, *, text: Optional[str] = None, position: int = 0) -> DecoratedValue:
    src = text if text is not None else raw
    m = _DV_RE.match(raw)
    if not m:
        raise LiteralSyntaxError(src, position, raw, "expected a decorated value <n>, <n>+, <n>- or inf")
    if m.group("inf"):
        return DecoratedValue(INF)
    v = DecoratedValue(int(m.group("n")), _DEC_BY_SUFFIX[m.group("dec")])
    bad = v.violations()
    if bad:
        rule, detail = bad[0]
        raise LiteralSyntaxError(src, position, raw, f"{rule}: {detail}")
    return v


def print_decorated(v: DecoratedValue) -> str:
    return str(v)


def parse_dimtype(text: str) -> DimensionType:
    """
    Грамматика: q=<n|inf> [all=<dv>] [p<prime>=<dv>]*
    Синтаксические ошибки -> LiteralSyntaxError (с позицией),
    нарушения формальной корректности -> FormalValidityError.
    """
    clean = sanitize_literal(text)
    toks = list(_tokens(clean))
    if not toks:
        raise LiteralSyntaxError(clean, 0, "", "empty dimension-type literal")

    q: Optional[ExtNat] = None
    default: Optional[DecoratedValue] = None
    exceptions: Dict[int, DecoratedValue] = {}

    for idx, (pos, tok) in enumerate(toks):
        m = _TOKEN_RE.match(tok)
        if not m:
            raise LiteralSyntaxError(clean, pos, tok, "expected q=, all= or p<prime>=")
        key = m.group("key")
        val = m.group("val")
        val_pos = pos + len(key) + 1
        if key == "q":
            if idx != 0:
                raise LiteralSyntaxError(clean, pos, tok, "q= must come first")
            q = _parse_ext(clean, val_pos, tok, val)
        elif q is None:
            raise LiteralSyntaxError(clean, pos, tok, "literal must start with q=")
        elif key == "all":
            if default is not None or exceptions:
                raise LiteralSyntaxError(clean, pos, tok, "all= must directly follow q=")
            default = parse_decorated(val, text=clean, position=val_pos)
        else:
            p = int(m.group("p"))
            if not is_prime(p):
                raise LiteralSyntaxError(clean, pos + 1, tok, f"{p} is not prime")
            if p in exceptions:
                raise LiteralSyntaxError(clean, pos, tok, f"prime {p} given twice")
            exceptions[p] = parse_decorated(val, text=clean, position=val_pos)

    assert q is not None
    return DimensionType.make(q, default, exceptions)


def print_dimtype(D: DimensionType) -> str:
    return D.literal()
