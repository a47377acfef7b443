from __future__ import annotations

from typing import Iterable, List, Optional, Sequence

from hypothesis import strategies as st

from bockstein.calculus.decorated import Decoration, DecoratedValue
from bockstein.calculus.dimtype import DimensionType, dim, validate

_SIGNS = (Decoration.MINUS, Decoration.PLUS)


def decorated_values(max_value: int) -> List[DecoratedValue]:
    """Все корректные значения 0..max_value (с декорациями при value >= 1)."""
    out = [DecoratedValue(0)]
    for v in range(1, max_value + 1):
        out.extend([DecoratedValue(v, Decoration.MINUS), DecoratedValue(v), DecoratedValue(v, Decoration.PLUS)])
    return out


def uniform_types(max_value: int, max_q: Optional[int] = None) -> List[DimensionType]:
    """Однородные формально корректные типы: q <= max_q, значения <= max_value."""
    top_q = max_value if max_q is None else max_q
    out: List[DimensionType] = []
    for q in range(0, top_q + 1):
        out.append(DimensionType.make(q))
        for v in range(1, max_value + 1):
            for dec in _SIGNS:
                out.append(DimensionType.make(q, DecoratedValue(v, dec)))
    return out


def realizable(types: Iterable[DimensionType]) -> List[DimensionType]:
    return [D for D in types if validate(D).realizable]


def positive_dim(types: Iterable[DimensionType]) -> List[DimensionType]:
    return [D for D in types if dim(D) >= 1]


@st.composite
def dimension_types(draw: st.DrawFn, max_value: int = 6, primes: Sequence[int] = (2, 3)) -> DimensionType:
    q = draw(st.integers(min_value=0, max_value=max_value))
    values = st.one_of(
        st.just(DecoratedValue(q)),
        st.builds(DecoratedValue, st.integers(min_value=1, max_value=max_value), st.sampled_from(_SIGNS)),
    )
    default = draw(values)
    exceptions = {p: draw(values) for p in primes if draw(st.booleans())}
    return DimensionType.make(q, default, exceptions)
