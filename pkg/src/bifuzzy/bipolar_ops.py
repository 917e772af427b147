"""Symmetric maximum and the three bipolar maxima.

All comparisons are exact: these are order operations on their inputs,
not arithmetic results.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .core import ScoreVector, BIPOLAR, REALS
from .errors import EmptyInput, LengthMismatch

VARIANTS = ("neutral", "pos", "neg")

# right/left are the names used for integrals built on the pos/neg maxima
_ALIASES = {"neutral": "neutral", "pos": "pos", "right": "pos", "neg": "neg", "left": "neg"}


def symmetric_max(a: float, b: float) -> float:
    """Larger-magnitude operand, 0 when the operands are exact opposites."""
    if b == -a:
        return 0.0
    if abs(a) > abs(b):
        return a
    if abs(b) > abs(a):
        return b
    return a  # a == b


def _distinct(xs: Iterable[float]) -> set[float]:
    values = set(xs)
    if not values:
        raise EmptyInput("bipolar maximum of an empty collection is undefined")
    return values


def bipolar_max(xs: Iterable[float]) -> float:
    """The value whose magnitude strictly beats every other distinct value, else 0.

    >>> bipolar_max([9, -9, 7, -3])
    0.0
    >>> bipolar_max([5, -3, 2])
    5
    """
    values = _distinct(xs)
    top = max(abs(v) for v in values)
    winners = [v for v in values if abs(v) == top]
    if len(winners) == 1:
        return winners[0]
    return 0.0


def bipolar_max_pos(xs: Iterable[float]) -> float:
    """Greatest-magnitude value; an opposite pair resolves to the nonnegative one."""
    values = _distinct(xs)
    top = max(abs(v) for v in values)
    return max(v for v in values if abs(v) == top)


def bipolar_max_neg(xs: Iterable[float]) -> float:
    """Greatest-magnitude value; an opposite pair resolves to the nonpositive one."""
    values = _distinct(xs)
    top = max(abs(v) for v in values)
    return min(v for v in values if abs(v) == top)


def bipolar_max_variant(variant: str):
    """Operator for ``neutral``, ``pos``/``right`` or ``neg``/``left``."""
    try:
        key = _ALIASES[variant]
    except KeyError:
        raise ValueError(f"unknown bipolar maximum variant {variant!r}") from None
    return {"neutral": bipolar_max, "pos": bipolar_max_pos, "neg": bipolar_max_neg}[key]


def vector_bipolar_max(family: Sequence[Sequence[float]], variant: str = "neutral") -> ScoreVector:
    """Componentwise bipolar maximum of equally long vectors."""
    if not family:
        raise EmptyInput("need at least one vector")
    n = len(family[0])
    if any(len(v) != n for v in family):
        raise LengthMismatch("all vectors must have the same length")
    op = bipolar_max_variant(variant)
    scores = tuple(op(v[i] for v in family) for i in range(n))
    scale = BIPOLAR if all(-1.0 <= s <= 1.0 for s in scores) else REALS
    return ScoreVector(scores, scale)
