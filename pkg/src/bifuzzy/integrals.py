"""Choquet, Shilkret and Sugeno integrals on ordinary (unipolar) scales.

Besides the classical forms this module carries the negative forms, for
vectors with no positive component, and the symmetric forms that apply the
positive integral to ``x v 0`` and the negative one to ``x ^ 0``.
"""

from __future__ import annotations

from typing import Sequence

from .core import Capacity, Measure, UNIT, BIPOLAR, NEGATIVE_UNIT, as_scores
from .errors import DimensionMismatch, PositiveComponent, ScaleMismatch


def sort_permutation(x: Sequence[float]) -> list[int]:
    """0-based indices ordering ``x`` nondecreasingly; ties by index."""
    return sorted(range(len(x)), key=lambda i: (x[i], i))


def _upper_set(x: Sequence[float], level: float) -> int:
    mask = 0
    for j, v in enumerate(x):
        if v >= level:
            mask |= 1 << j
    return mask


def _lower_set(x: Sequence[float], level: float) -> int:
    mask = 0
    for j, v in enumerate(x):
        if v <= level:
            mask |= 1 << j
    return mask


def _check_scale(x: Sequence[float], scale, what: str) -> None:
    for i, v in enumerate(x, 1):
        if v not in scale:
            raise ScaleMismatch(f"x_{i}={v!r} is outside the {what} scale {scale}")


# -- Choquet ------------------------------------------------------------------


def choquet(x: Sequence[float], mu: Capacity, order: Sequence[int] | None = None) -> float:
    """Choquet integral in its sorted-sum form.

    ``order`` may supply any 0-based permutation sorting ``x``
    nondecreasingly; the value does not depend on how ties are ordered.
    """
    x = as_scores(x, mu.n)
    if order is None:
        order = sort_permutation(x)
    else:
        order = list(order)
        if sorted(order) != list(range(mu.n)) or any(
                x[order[k]] > x[order[k + 1]] for k in range(mu.n - 1)):
            raise ValueError("order is not a sorting permutation of x")
    total = x[order[0]]
    for k in range(1, mu.n):
        step = x[order[k]] - x[order[k - 1]]
        if step:
            total += step * mu[_upper_set(x, x[order[k]])]
    return total


def choquet_level_oracle(x: Sequence[float], mu: Capacity) -> float:
    """Schmeidler's form: min x plus the exact integral of t -> mu({x >= t}).

    The survival function is a step function, so the integral is a finite
    sum over consecutive distinct levels, each interval evaluated at its
    midpoint.
    """
    x = as_scores(x, mu.n)
    levels = sorted(set(x))
    total = 0.0
    for lo, hi in zip(levels, levels[1:]):
        mid = (lo + hi) / 2
        mask = 0
        for j, v in enumerate(x):
            if v > mid:
                mask |= 1 << j
        total += (hi - lo) * mu[mask]
    return total + levels[0]


def choquet_negative(x: Sequence[float], mu: Capacity) -> float:
    """Mirror of the Choquet integral: ``-Ch(-x)``."""
    return -choquet([-v for v in x], mu)


def choquet_symmetric(x: Sequence[float], mu: Capacity) -> float:
    """Sipos-style Choquet integral: positive part minus mirrored negative part."""
    x = as_scores(x, mu.n)
    return choquet([max(v, 0.0) for v in x], mu) - choquet([max(-v, 0.0) for v in x], mu)


# -- Shilkret -----------------------------------------------------------------


def shilkret(x: Sequence[float], mu: Capacity) -> float:
    """``max_i x_i * mu({j: x_j >= x_i})``, evaluated literally on any real input."""
    x = as_scores(x, mu.n)
    return max(v * mu[_upper_set(x, v)] for v in set(x))


def shilkret_negative(x: Sequence[float], mu: Capacity) -> float:
    """``min_i x_i * mu({j: x_j <= x_i})`` for vectors with no positive component."""
    x = as_scores(x, mu.n)
    for i, v in enumerate(x, 1):
        if v > 0:
            raise PositiveComponent(f"x_{i}={v!r} > 0; the negative Shilkret integral needs x <= 0")
    return min(v * mu[_lower_set(x, v)] for v in set(x))


def shilkret_symmetric(x: Sequence[float], mu: Capacity) -> float:
    x = as_scores(x, mu.n)
    return (shilkret([max(v, 0.0) for v in x], mu)
            + shilkret_negative([min(v, 0.0) for v in x], mu))


# -- Sugeno -------------------------------------------------------------------


def _as_measure(nu: Measure | Capacity) -> Measure:
    return nu.as_measure() if isinstance(nu, Capacity) else nu


def sugeno(x: Sequence[float], nu: Measure | Capacity) -> float:
    """``max_i min(x_i, nu({j: x_j >= x_i}))``; a Capacity is a measure on [0,1]."""
    nu = _as_measure(nu)
    x = as_scores(x, nu.n)
    _check_scale(x, nu.scale, "measure")
    return max(min(v, nu[_upper_set(x, v)]) for v in set(x))


def sugeno_subset_oracle(x: Sequence[float], nu: Measure | Capacity) -> float:
    """Max over all coalitions A of ``min(nu(A), min_{i in A} x_i)``.

    The minimum over the empty coalition is taken as the top of the scale,
    so the empty term contributes ``nu({})``, the bottom.  Exponential in n.
    """
    nu = _as_measure(nu)
    x = as_scores(x, nu.n)
    top = nu.scale.upper
    best = None
    for mask in range(1 << nu.n):
        floor = top
        for j in range(nu.n):
            if mask >> j & 1 and x[j] < floor:
                floor = x[j]
        term = min(nu[mask], floor)
        if best is None or term > best:
            best = term
    return best


def sugeno_negative(x: Sequence[float], mu: Capacity) -> float:
    """``min_i max(x_i, -mu({j: x_j <= x_i}))`` for x in [-1, 0]^n."""
    x = as_scores(x, mu.n)
    _check_scale(x, NEGATIVE_UNIT, "negative")
    return min(max(v, -mu[_lower_set(x, v)]) for v in set(x))


def sugeno_symmetric(x: Sequence[float], mu: Capacity) -> float:
    """Sugeno of the positive part minus Sugeno of the negative part, x in [-1,1]^n."""
    x = as_scores(x, mu.n)
    _check_scale(x, BIPOLAR, "symmetric")
    return sugeno([max(v, 0.0) for v in x], mu) - sugeno([max(-v, 0.0) for v in x], mu)


UNIPOLAR = {
    ("choquet", "classic"): choquet,
    ("choquet", "negative"): choquet_negative,
    ("choquet", "symmetric"): choquet_symmetric,
    ("shilkret", "classic"): shilkret,
    ("shilkret", "negative"): shilkret_negative,
    ("shilkret", "symmetric"): shilkret_symmetric,
    ("sugeno", "classic"): sugeno,
    ("sugeno", "negative"): sugeno_negative,
    ("sugeno", "symmetric"): sugeno_symmetric,
}

# natural scale of each polarity when nothing else pins it down
POLARITY_SCALE = {"classic": UNIT, "negative": NEGATIVE_UNIT, "symmetric": BIPOLAR}
