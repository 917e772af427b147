"""Bipolar Choquet, Shilkret and Sugeno integrals on [-1, 1].

Every integral looks the bi-capacity up at the level pairs
``({x_j >= t}, {x_j <= -t})`` for the magnitudes ``t = |x_i|``; see
:func:`bifuzzy.core.level_pair` for the convention at ``t = 0``.
"""

from __future__ import annotations

from typing import Sequence

from .bipolar_ops import bipolar_max, bipolar_max_variant
from .core import BiCapacity, EPS, as_scores, level_pair
from .errors import LinkViolation, ScaleViolation

#: Inputs this far outside [-1, 1] are clamped; anything further is rejected.
SCALE_SLACK = 1e-12


def bipolar_scores(x: Sequence[float], n: int) -> tuple[float, ...]:
    values = as_scores(x, n)
    out = []
    for i, v in enumerate(values, 1):
        if not -1.0 - SCALE_SLACK <= v <= 1.0 + SCALE_SLACK:
            raise ScaleViolation(f"x_{i}={v!r} is outside [-1,1]")
        out.append(min(1.0, max(-1.0, v)))
    return tuple(out)


def abs_sort_permutation(x: Sequence[float]) -> list[int]:
    """0-based indices ordering ``|x|`` nondecreasingly; ties by index."""
    return sorted(range(len(x)), key=lambda i: (abs(x[i]), i))


def bipolar_choquet(x: Sequence[float], mb: BiCapacity) -> float:
    """Sum of magnitude increments weighted by the bi-capacity of each level pair."""
    x = bipolar_scores(x, mb.n)
    total = 0.0
    previous = 0.0
    for i in abs_sort_permutation(x):
        level = abs(x[i])
        if level > previous:
            total += (level - previous) * mb[level_pair(x, level)]
            previous = level
    return total


def bipolar_choquet_oracle(x: Sequence[float], mb: BiCapacity) -> float:
    """Integral over t >= 0 of ``mb({x_i > t}, {x_i < -t})``.

    The integrand is constant between consecutive distinct magnitudes and
    vanishes beyond the largest one, so each piece is evaluated at its
    midpoint with strict inequalities.
    """
    x = bipolar_scores(x, mb.n)
    breaks = sorted({0.0} | {abs(v) for v in x})
    total = 0.0
    for lo, hi in zip(breaks, breaks[1:]):
        t = (lo + hi) / 2
        pos = neg = 0
        for j, v in enumerate(x):
            if v > t:
                pos |= 1 << j
            elif v < -t:
                neg |= 1 << j
        total += (hi - lo) * mb[pos, neg]
    return total


def _levels(x: Sequence[float]) -> list[float]:
    return sorted({abs(v) for v in x})


def shilkret_terms(x: Sequence[float], mb: BiCapacity) -> list[float]:
    x = bipolar_scores(x, mb.n)
    return [t * mb[level_pair(x, t)] for t in _levels(x)]


def sugeno_terms(x: Sequence[float], mb: BiCapacity) -> list[float]:
    x = bipolar_scores(x, mb.n)
    terms = []
    for t in _levels(x):
        m = mb[level_pair(x, t)]
        if m > 0:
            terms.append(min(m, t))
        elif m < 0:
            terms.append(-min(-m, t))
        else:
            terms.append(0.0)
    return terms


def bipolar_shilkret(x: Sequence[float], mb: BiCapacity, variant: str = "neutral") -> float:
    """Bipolar maximum of ``|x_i| * mb(level pair at |x_i|)``.

    ``variant`` is ``neutral``, ``right`` (ties toward the nonnegative
    term) or ``left`` (ties toward the nonpositive term).
    """
    return bipolar_max_variant(variant)(shilkret_terms(x, mb))


def bipolar_sugeno(x: Sequence[float], mb: BiCapacity, variant: str = "neutral") -> float:
    """Bipolar maximum of ``sign(m) * min(|m|, |x_i|)`` with m the level-pair value."""
    return bipolar_max_variant(variant)(sugeno_terms(x, mb))


def link_check(x: Sequence[float], mb: BiCapacity, family: str = "shilkret",
               eps: float = EPS) -> tuple[float, float, float]:
    """Return (neutral, right, left) after checking how the three variants relate."""
    terms = {"shilkret": shilkret_terms, "sugeno": sugeno_terms}[family](x, mb)
    neutral = bipolar_max(terms)
    right = bipolar_max_variant("right")(terms)
    left = bipolar_max_variant("left")(terms)
    if neutral != bipolar_max([right, left]):
        raise LinkViolation(f"neutral {neutral!r} != bipolar max of ({right!r}, {left!r})")
    if neutral != 0:
        if not right == left == neutral:
            raise LinkViolation(f"nonzero neutral {neutral!r} but right={right!r}, left={left!r}")
    elif abs(right + left) > eps:
        raise LinkViolation(f"zero neutral but right={right!r} is not -left={-left!r}")
    return neutral, right, left


BIPOLAR_INTEGRALS = {
    "choquet": bipolar_choquet,
    "shilkret": bipolar_shilkret,
    "sugeno": bipolar_sugeno,
}
