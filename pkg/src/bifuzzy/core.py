"""Scales, score vectors, coalitions, capacities and bi-capacities.

Criteria are numbered ``1..n`` in everything user facing.  Internally a
coalition is an ``int`` bitmask where criterion ``i`` is bit ``i - 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import (
    BoundaryViolation,
    DimensionMismatch,
    DisjointnessViolation,
    DuplicateEntry,
    MissingEntry,
    MonotonicityViolation,
    ScaleViolation,
    ValidationError,
)

#: Tolerance for comparing computed (not stored) quantities.
EPS = 1e-9

MAX_CRITERIA = 20

Coalition = int


# -- scales -----------------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    lower: float
    upper: float
    lower_open: bool = False
    upper_open: bool = False

    def __post_init__(self):
        if math.isnan(self.lower) or math.isnan(self.upper):
            raise ValueError("interval endpoints must not be NaN")
        if not self.lower < self.upper:
            raise ValueError(f"need lower < upper, got [{self.lower}, {self.upper}]")
        # infinite endpoints are always open
        if math.isinf(self.lower):
            object.__setattr__(self, "lower_open", True)
        if math.isinf(self.upper):
            object.__setattr__(self, "upper_open", True)

    @classmethod
    def closed(cls, lower: float, upper: float) -> Interval:
        return cls(float(lower), float(upper))

    @property
    def is_closed(self) -> bool:
        return not (self.lower_open or self.upper_open)

    def __contains__(self, value: float) -> bool:
        if self.lower_open:
            if not value > self.lower:
                return False
        elif not value >= self.lower:
            return False
        if self.upper_open:
            return value < self.upper
        return value <= self.upper

    def __str__(self):
        left = "]" if self.lower_open else "["
        right = "[" if self.upper_open else "]"
        return f"{left}{self.lower:g}, {self.upper:g}{right}"


UNIT = Interval.closed(0.0, 1.0)
BIPOLAR = Interval.closed(-1.0, 1.0)
NEGATIVE_UNIT = Interval.closed(-1.0, 0.0)
REALS = Interval(-math.inf, math.inf)


@dataclass(frozen=True)
class ScoreVector(Sequence[float]):
    """Evaluations of one alternative, one per criterion, on a declared scale."""

    scores: tuple[float, ...]
    scale: Interval = REALS

    def __post_init__(self):
        scores = tuple(float(v) for v in self.scores)
        object.__setattr__(self, "scores", scores)
        if not scores:
            raise DimensionMismatch("a score vector needs at least one criterion")
        for i, v in enumerate(scores, 1):
            if v not in self.scale:
                raise ScaleViolation(f"score x_{i}={v!r} lies outside {self.scale}")

    def __len__(self):
        return len(self.scores)

    def __getitem__(self, i):
        return self.scores[i]

    def __iter__(self) -> Iterator[float]:
        return iter(self.scores)

    def __neg__(self) -> ScoreVector:
        scale = Interval(-self.scale.upper, -self.scale.lower,
                         self.scale.upper_open, self.scale.lower_open)
        return ScoreVector(tuple(-v for v in self.scores), scale)


def as_scores(x: Iterable[float], n: int | None = None) -> tuple[float, ...]:
    """Plain float tuple from a ScoreVector or any sequence, checking length."""
    values = tuple(float(v) for v in x)
    if n is not None and len(values) != n:
        raise DimensionMismatch(f"expected {n} scores, got {len(values)}")
    return values


# -- coalitions ---------------------------------------------------------------


def coalition(members: Iterable[int] = ()) -> Coalition:
    """Bitmask for a set of 1-based criterion indices."""
    mask = 0
    for i in members:
        if not 1 <= i <= MAX_CRITERIA:
            raise ValueError(f"criterion index {i} out of range 1..{MAX_CRITERIA}")
        mask |= 1 << (i - 1)
    return mask


def members(mask: Coalition) -> list[int]:
    """Sorted 1-based criterion indices of a bitmask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def full(n: int) -> Coalition:
    return (1 << n) - 1


def _fmt_set(mask: Coalition) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


class _SignedBase(NamedTuple):
    pos: Coalition
    neg: Coalition


class SignedCoalition(_SignedBase):
    """A disjoint pair (A, B): A scored +1, B scored -1.

    Hashes and compares like the plain tuple ``(pos, neg)``.
    """

    __slots__ = ()

    def __new__(cls, pos: Coalition = 0, neg: Coalition = 0):
        if pos & neg:
            raise DisjointnessViolation(
                f"criteria {members(pos & neg)} appear on both sides of the pair")
        return super().__new__(cls, pos, neg)

    @classmethod
    def of(cls, pos: Iterable[int] = (), neg: Iterable[int] = ()) -> SignedCoalition:
        return cls(coalition(pos), coalition(neg))

    def __str__(self):
        return f"({_fmt_set(self.pos)},{_fmt_set(self.neg)})"

    def sup(self, other: SignedCoalition) -> SignedCoalition:
        return SignedCoalition(self.pos | other.pos, self.neg & other.neg)

    def inf(self, other: SignedCoalition) -> SignedCoalition:
        return SignedCoalition(self.pos & other.pos, self.neg | other.neg)


@lru_cache(maxsize=32)
def _all_pairs(n: int) -> tuple[SignedCoalition, ...]:
    pairs = []
    for digits in product((0, 1, 2), repeat=n):
        pos = neg = 0
        for i, d in enumerate(digits):
            if d == 1:
                pos |= 1 << i
            elif d == 2:
                neg |= 1 << i
        pairs.append(SignedCoalition(pos, neg))
    return tuple(pairs)


def signed_coalitions(n: int) -> Iterator[SignedCoalition]:
    """All 3**n disjoint pairs over ``n`` criteria."""
    return iter(_all_pairs(n))


def lattice_leq(p: SignedCoalition, q: SignedCoalition) -> bool:
    """The bi-capacity order: A within C and B containing D."""
    return p.pos & ~q.pos == 0 and q.neg & ~p.neg == 0


def pair_inclusion(p: SignedCoalition, q: SignedCoalition) -> bool:
    """Componentwise inclusion of pairs, the order used to build chains."""
    return p.pos & ~q.pos == 0 and p.neg & ~q.neg == 0


def indicator(p: SignedCoalition | Coalition, n: int) -> ScoreVector:
    """The vector valued 1 on the positive side, -1 on the negative side.

    A bare bitmask is read as ``(mask, {})``.
    """
    if isinstance(p, int) and not isinstance(p, tuple):
        p = SignedCoalition(p, 0)
    if (p.pos | p.neg) >> n:
        raise DimensionMismatch(f"pair {p} mentions criteria beyond n={n}")
    scores = tuple(1.0 if p.pos >> i & 1 else -1.0 if p.neg >> i & 1 else 0.0
                   for i in range(n))
    return ScoreVector(scores, BIPOLAR)


def level_pair(x: Sequence[float], t: float) -> SignedCoalition:
    """``({j: x_j >= t}, {j: x_j <= -t})``, with ``x_j < 0`` on the negative side at t = 0."""
    if t < 0:
        raise ValueError("level must be nonnegative")
    pos = neg = 0
    if t > 0:
        for j, v in enumerate(x):
            if v >= t:
                pos |= 1 << j
            elif v <= -t:
                neg |= 1 << j
    else:
        for j, v in enumerate(x):
            if v >= 0:
                pos |= 1 << j
            else:
                neg |= 1 << j
    return SignedCoalition(pos, neg)


# -- comonotonicity -----------------------------------------------------------


def is_comonotone(x: Sequence[float], y: Sequence[float]) -> bool:
    if len(x) != len(y):
        raise DimensionMismatch("comonotonicity needs vectors of equal length")
    n = len(x)
    return all((x[i] - x[j]) * (y[i] - y[j]) >= 0
               for i in range(n) for j in range(i + 1, n))


def is_bipolar_comonotone(x: Sequence[float], y: Sequence[float]) -> bool:
    if len(x) != len(y):
        raise DimensionMismatch("comonotonicity needs vectors of equal length")
    if any(a * b < 0 for a, b in zip(x, y)):
        return False
    return is_comonotone([abs(v) for v in x], [abs(v) for v in y])


# -- capacities -------------------------------------------------------------


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_CRITERIA:
        raise ValidationError(f"criterion count must be in 1..{MAX_CRITERIA}, got {n}")


def _finite(value: float, where) -> float:
    """``where`` is a label or a zero-argument callable producing one."""
    value = float(value)
    if not math.isfinite(value):
        label = where() if callable(where) else where
        raise BoundaryViolation(f"{label} has non-finite value {value!r}")
    return value


@dataclass(frozen=True)
class Capacity:
    """Monotone set function with mu({}) = 0 and mu(N) = 1.

    ``table[mask]`` is the value of the coalition ``mask``.  Construction
    validates everything; instances are always well formed.
    """

    n: int
    table: tuple[float, ...]

    def __post_init__(self):
        _check_n(self.n)
        table = tuple(float(v) for v in self.table)
        object.__setattr__(self, "table", table)
        if len(table) != 1 << self.n:
            raise MissingEntry(f"capacity on {self.n} criteria needs {1 << self.n} values")
        for mask, v in enumerate(table):
            _finite(v, lambda: f"coalition {_fmt_set(mask)}")
            if not 0.0 <= v <= 1.0:
                raise BoundaryViolation(f"mu({_fmt_set(mask)})={v!r} outside [0,1]")
        if table[0] != 0.0:
            raise BoundaryViolation(f"mu({{}}) must be 0, got {table[0]!r}")
        if table[-1] != 1.0:
            raise BoundaryViolation(f"mu(N) must be 1, got {table[-1]!r}")
        _check_set_monotone(self.n, table, "mu")

    def __getitem__(self, mask: Coalition) -> float:
        return self.table[mask]

    @classmethod
    def from_function(cls, n: int, f) -> Capacity:
        return cls(n, tuple(f(mask) for mask in range(1 << n)))

    @classmethod
    def additive(cls, weights: Sequence[float]) -> Capacity:
        """Capacity summing per-criterion weights (weights should add to 1)."""
        n = len(weights)
        total = float(sum(weights))
        table = [0.0] * (1 << n)
        for mask in range(1, 1 << n):
            table[mask] = sum(weights[i] for i in range(n) if mask >> i & 1) / total
        table[-1] = 1.0
        return cls(n, tuple(table))

    def as_measure(self) -> Measure:
        return Measure(self.n, UNIT, self.table)


def _check_set_monotone(n: int, table: Sequence[float], name: str) -> None:
    for mask in range(1 << n):
        v = table[mask]
        for i in range(n):
            bit = 1 << i
            if not mask & bit and table[mask | bit] < v:
                upper = mask | bit
                raise MonotonicityViolation(
                    f"{name}({_fmt_set(mask)})={v!r} > {name}({_fmt_set(upper)})={table[upper]!r}",
                    lower=mask, upper=upper)


def validate_capacity(n: int, entries: Iterable[tuple[Coalition, float]]) -> Capacity:
    """Assemble a Capacity from ``(mask, value)`` entries covering all 2**n subsets."""
    _check_n(n)
    size = 1 << n
    table: list[float | None] = [None] * size
    for mask, value in entries:
        if not 0 <= mask < size:
            raise ValidationError(f"coalition {_fmt_set(mask)} mentions criteria beyond n={n}")
        if table[mask] is not None:
            raise DuplicateEntry(f"coalition {_fmt_set(mask)} given twice")
        table[mask] = _finite(value, lambda: f"coalition {_fmt_set(mask)}")
    for mask, v in enumerate(table):
        if v is None:
            raise MissingEntry(f"no value for coalition {_fmt_set(mask)}")
    return Capacity(n, tuple(table))


@dataclass(frozen=True)
class Measure:
    """Monotone set function into a closed scale [alpha, beta], attaining both ends."""

    n: int
    scale: Interval
    table: tuple[float, ...]

    def __post_init__(self):
        _check_n(self.n)
        if not self.scale.is_closed:
            raise BoundaryViolation(
                f"a measure needs a closed scale so that nu({{}}) and nu(N) are attained, got {self.scale}")
        table = tuple(float(v) for v in self.table)
        object.__setattr__(self, "table", table)
        if len(table) != 1 << self.n:
            raise MissingEntry(f"measure on {self.n} criteria needs {1 << self.n} values")
        for mask, v in enumerate(table):
            _finite(v, lambda: f"coalition {_fmt_set(mask)}")
            if v not in self.scale:
                raise BoundaryViolation(f"nu({_fmt_set(mask)})={v!r} outside {self.scale}")
        if table[0] != self.scale.lower or table[-1] != self.scale.upper:
            raise BoundaryViolation(
                f"need nu({{}})={self.scale.lower:g} and nu(N)={self.scale.upper:g}, "
                f"got {table[0]!r} and {table[-1]!r}")
        _check_set_monotone(self.n, table, "nu")

    def __getitem__(self, mask: Coalition) -> float:
        return self.table[mask]


@dataclass(frozen=True)
class BiCapacity:
    """Monotone function on disjoint pairs, -1 at (0,N), 0 at (0,0), 1 at (N,0).

    Look values up with ``mb[pair]`` or ``mb[pos_mask, neg_mask]``.
    """

    n: int
    table: Mapping[tuple[int, int], float] = field(repr=False)

    def __post_init__(self):
        _check_n(self.n)
        n = self.n
        size = 1 << n
        table: dict[tuple[int, int], float] = {}
        for key, value in dict(self.table).items():
            pos, neg = key
            if pos >= size or neg >= size:
                raise ValidationError(f"pair {SignedCoalition(pos, neg)} mentions criteria beyond n={n}")
            if pos & neg:
                SignedCoalition(pos, neg)  # raises DisjointnessViolation
            value = _finite(value, lambda: f"pair {SignedCoalition(pos, neg)}")
            if not -1.0 <= value <= 1.0:
                raise BoundaryViolation(f"mu_b{SignedCoalition(pos, neg)}={value!r} outside [-1,1]")
            table[(pos, neg)] = value
        if len(table) != 3 ** n:
            for p in signed_coalitions(n):
                if p not in table:
                    raise MissingEntry(f"no value for pair {p}")
        top = full(n)
        for key, want in (((0, 0), 0.0), ((top, 0), 1.0), ((0, top), -1.0)):
            if table[key] != want:
                raise BoundaryViolation(
                    f"mu_b{SignedCoalition(*key)} must be {want:g}, got {table[key]!r}")
        object.__setattr__(self, "table", table)
        _check_bicapacity_monotone(n, table)

    def __getitem__(self, key) -> float:
        return self.table[key]

    def __eq__(self, other):
        if not isinstance(other, BiCapacity):
            return NotImplemented
        return self.n == other.n and self.table == other.table

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.table.items()))))

    def positive_part(self) -> Capacity:
        """Capacity A -> mu_b(A, {})."""
        return Capacity(self.n, tuple(self.table[(mask, 0)] for mask in range(1 << self.n)))

    def negative_part(self) -> Capacity:
        """Capacity A -> -mu_b({}, A)."""
        return Capacity(self.n, tuple(0.0 - self.table[(0, mask)] for mask in range(1 << self.n)))

    @classmethod
    def from_function(cls, n: int, f) -> BiCapacity:
        return cls(n, {p: f(p) for p in signed_coalitions(n)})


def covering_moves(n: int, p: SignedCoalition) -> Iterator[SignedCoalition]:
    """Upper covers of ``p``: drop one criterion from B, or add a free one to A."""
    for i in range(n):
        bit = 1 << i
        if p.neg & bit:
            yield SignedCoalition(p.pos, p.neg & ~bit)
        elif not p.pos & bit:
            yield SignedCoalition(p.pos | bit, p.neg)


@lru_cache(maxsize=32)
def _covering_edges(n: int) -> tuple[tuple[SignedCoalition, SignedCoalition], ...]:
    return tuple((p, q) for p in signed_coalitions(n) for q in covering_moves(n, p))


def _check_bicapacity_monotone(n: int, table: Mapping[tuple[int, int], float]) -> None:
    for p, q in _covering_edges(n):
        if table[q] < table[p]:
            raise MonotonicityViolation(
                f"mu_b{p}={table[p]!r} > mu_b{q}={table[q]!r} although {p} precedes {q}",
                lower=p, upper=q)


def validate_bicapacity(n: int, entries: Iterable[tuple[SignedCoalition | tuple[int, int], float]]) -> BiCapacity:
    """Assemble a BiCapacity from ``(pair, value)`` entries covering all 3**n pairs."""
    _check_n(n)
    table: dict[tuple[int, int], float] = {}
    for key, value in entries:
        pos, neg = key
        p = SignedCoalition(pos, neg)  # raises DisjointnessViolation
        if p in table:
            raise DuplicateEntry(f"pair {p} given twice")
        table[p] = value
    return BiCapacity(n, table)
