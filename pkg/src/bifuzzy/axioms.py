"""Executable axioms, seeded input generators and carrier elicitation.

Axioms quantify over infinite domains.  :func:`check_axiom` draws seeded
instances from each axiom's domain and, where a finite sub-domain is small
enough (every signed coalition times a dyadic level grid), enumerates it
exhaustively as well.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .bipolar import bipolar_choquet, bipolar_shilkret, bipolar_sugeno
from .bipolar_ops import bipolar_max_variant, vector_bipolar_max
from .core import (
    BIPOLAR,
    EPS,
    NEGATIVE_UNIT,
    UNIT,
    BiCapacity,
    Capacity,
    Interval,
    Measure,
    ScoreVector,
    SignedCoalition,
    covering_moves,
    full,
    indicator,
    is_bipolar_comonotone,
    is_comonotone,
    pair_inclusion,
    signed_coalitions,
    validate_bicapacity,
    validate_capacity,
)
from .errors import UnsupportedAxiomForScale, ValidationError
from .integrals import UNIPOLAR, sugeno

EXHAUSTIVE_LIMIT = 10 ** 5
LEVEL_GRID = tuple(k / 8 for k in range(1, 9))
HOMOGENEITY_DYADIC = (0.25, 0.5, 0.75, 1.0)
MAX_WITNESSES = 25


# -- handles ------------------------------------------------------------------


@dataclass(frozen=True)
class AggregatorHandle:
    """A deterministic aggregation function on ``scale**n``."""

    n: int
    scale: Interval
    eval: Callable[[tuple[float, ...]], float]
    name: str = "aggregator"

    def __call__(self, x: Sequence[float]) -> float:
        return self.eval(tuple(x))

    @classmethod
    def from_table(cls, n: int, scale: Interval, points: Mapping[tuple[float, ...], float],
                   name: str = "table") -> AggregatorHandle:
        """Wrap a tabulated function; evaluating off the grid raises KeyError."""
        frozen = {tuple(float(v) for v in k): float(val) for k, val in points.items()}
        return cls(n, scale, lambda x: frozen[tuple(float(v) for v in x)], name)


def bind(family: str, polarity: str, carrier, variant: str = "neutral",
         scale: Interval | None = None) -> AggregatorHandle:
    """Bind a built-in integral to its carrier.

    ``polarity`` is one of ``classic``, ``negative``, ``symmetric`` (carrier
    is a Capacity, or a Measure for classic Sugeno) or ``bipolar`` (carrier
    is a BiCapacity).
    """
    if polarity == "bipolar":
        if not isinstance(carrier, BiCapacity):
            raise ValidationError("bipolar integrals need a bi-capacity carrier")
        if family == "choquet":
            if variant != "neutral":
                raise ValueError("the bipolar Choquet integral has no right/left variants")
            fn = lambda x: bipolar_choquet(x, carrier)  # noqa: E731
        elif family == "shilkret":
            fn = lambda x: bipolar_shilkret(x, carrier, variant)  # noqa: E731
        elif family == "sugeno":
            fn = lambda x: bipolar_sugeno(x, carrier, variant)  # noqa: E731
        else:
            raise ValueError(f"unknown integral family {family!r}")
        label = f"bipolar-{family}" + ("" if variant == "neutral" else f"({variant})")
        return AggregatorHandle(carrier.n, scale or BIPOLAR, fn, label)

    if isinstance(carrier, BiCapacity):
        raise ValidationError(f"{polarity} integrals need a capacity, not a bi-capacity")
    if variant != "neutral":
        raise ValueError("right/left variants exist only for bipolar integrals")
    if isinstance(carrier, Measure):
        if (family, polarity) != ("sugeno", "classic"):
            raise ValidationError("only the classic Sugeno integral takes a general measure")
        return AggregatorHandle(carrier.n, scale or carrier.scale,
                                lambda x: sugeno(x, carrier), "sugeno")
    try:
        integral = UNIPOLAR[family, polarity]
    except KeyError:
        raise ValueError(f"unknown integral {family!r} with polarity {polarity!r}") from None
    if scale is None:
        scale = _DEFAULT_SCALE[family, polarity]
    label = family if polarity == "classic" else f"{polarity}-{family}"
    return AggregatorHandle(carrier.n, scale, lambda x: integral(x, carrier), label)


# Schmeidler's Choquet integral works on any interval; [-1,1] exercises both signs.
_DEFAULT_SCALE = {
    ("choquet", "classic"): BIPOLAR,
    ("shilkret", "classic"): UNIT,
    ("sugeno", "classic"): UNIT,
    ("choquet", "negative"): NEGATIVE_UNIT,
    ("shilkret", "negative"): NEGATIVE_UNIT,
    ("sugeno", "negative"): NEGATIVE_UNIT,
    ("choquet", "symmetric"): BIPOLAR,
    ("shilkret", "symmetric"): BIPOLAR,
    ("sugeno", "symmetric"): BIPOLAR,
}


def demo_handle(name: str, n: int) -> AggregatorHandle:
    """Reference aggregators on [-1,1]^n that are not built-in integrals."""
    if name == "mean":
        return AggregatorHandle(n, BIPOLAR, lambda x: sum(x) / len(x), "mean")
    if name == "max":
        return AggregatorHandle(n, BIPOLAR, max, "max")
    raise ValueError(f"unknown demo aggregator {name!r}")


# -- elicitation --------------------------------------------------------------


def elicit_capacity(G: AggregatorHandle) -> Capacity:
    """``A -> G(1_A)``; on a nonpositive scale the mirror ``A -> -G(-1_A)``."""
    n = G.n
    if 0.0 in G.scale and 1.0 in G.scale:
        entries = [(mask, G(indicator(mask, n))) for mask in range(1 << n)]
    elif 0.0 in G.scale and -1.0 in G.scale:
        entries = [(mask, 0.0 - G(-indicator(mask, n))) for mask in range(1 << n)]
    else:
        raise UnsupportedAxiomForScale(f"cannot evaluate indicators on {G.scale}")
    return validate_capacity(n, entries)


def elicit_measure(G: AggregatorHandle) -> Measure:
    """``A -> G(beta on A, alpha elsewhere)`` on a closed scale [alpha, beta]."""
    if not G.scale.is_closed:
        raise UnsupportedAxiomForScale("measure elicitation needs a closed scale")
    lo, hi = G.scale.lower, G.scale.upper
    n = G.n
    table = [G(tuple(hi if mask >> j & 1 else lo for j in range(n))) for mask in range(1 << n)]
    return Measure(n, G.scale, tuple(table))


def elicit_bicapacity(G: AggregatorHandle) -> BiCapacity:
    """``(A, B) -> G(1_(A,B))``."""
    if not (-1.0 in G.scale and 1.0 in G.scale):
        raise UnsupportedAxiomForScale(f"bi-capacity elicitation needs [-1,1], got {G.scale}")
    return validate_bicapacity(G.n, [(p, G(indicator(p, G.n))) for p in signed_coalitions(G.n)])


# -- random carriers ----------------------------------------------------------


def _snap(value: float, grid: int | None) -> float:
    return value if grid is None else round(value * grid) / grid


def random_capacity(n: int, seed: int, grid: int | None = None) -> Capacity:
    """Seeded random capacity; ``grid`` snaps values to multiples of ``1/grid``."""
    rng = random.Random(seed)
    table = [0.0] * (1 << n)
    for mask in sorted(range(1, (1 << n) - 1), key=lambda m: bin(m).count("1")):
        floor = max(table[mask & ~(1 << i)] for i in range(n) if mask >> i & 1)
        table[mask] = _snap(floor + (1.0 - floor) * rng.random() * rng.random(), grid)
    table[-1] = 1.0
    return Capacity(n, tuple(table))


def random_measure(n: int, scale: Interval, seed: int) -> Measure:
    cap = random_capacity(n, seed)
    lo, hi = scale.lower, scale.upper
    table = [lo + (hi - lo) * v for v in cap.table]
    table[0], table[-1] = lo, hi
    return Measure(n, scale, tuple(min(hi, max(lo, v)) for v in table))


@lru_cache(maxsize=None)
def _fill_order(n: int) -> tuple[tuple[SignedCoalition, tuple[SignedCoalition, ...]], ...]:
    """Pairs in an order compatible with the lattice, each with its lower covers."""
    pairs = sorted(signed_coalitions(n),
                   key=lambda p: (bin(p.pos).count("1") - bin(p.neg).count("1"), p.pos, p.neg))
    below: dict[tuple[int, int], list[SignedCoalition]] = {}
    for p in pairs:
        for q in covering_moves(n, p):
            below.setdefault(q, []).append(p)
    return tuple((p, tuple(below.get(p, ()))) for p in pairs)


def random_bicapacity(n: int, seed: int, grid: int | None = None) -> BiCapacity:
    """Seeded random bi-capacity, filled bottom-up along the lattice order."""
    rng = random.Random(seed)
    top = full(n)
    table: dict[tuple[int, int], float] = {}
    for p, lower in _fill_order(n):
        if p == (0, top):
            table[p] = -1.0
            continue
        floor = max((table[q] for q in lower), default=-1.0)
        if p == (0, 0):
            table[p] = 0.0
        elif p == (top, 0):
            table[p] = 1.0
        else:
            ceiling = 0.0 if p.pos == 0 else 1.0
            table[p] = _snap(floor + (ceiling - floor) * rng.random() * rng.random(), grid)
    return BiCapacity(n, table)


# -- generators ---------------------------------------------------------------


def _finite_box(scale: Interval) -> tuple[float, float]:
    lo, hi = scale.lower, scale.upper
    if math.isinf(lo) and math.isinf(hi):
        return -1.0, 1.0
    if math.isinf(lo):
        return hi - 2.0, hi
    if math.isinf(hi):
        return lo, lo + 2.0
    return lo, hi


def _summable_box(scale: Interval) -> tuple[float, float]:
    """Sub-box B of the scale with B + B inside the scale."""
    lo, hi = _finite_box(scale)
    if lo >= 0:
        box = lo, hi / 2
    elif hi <= 0:
        box = lo / 2, hi
    else:
        box = lo / 2, hi / 2
    if box[0] > box[1]:
        raise UnsupportedAxiomForScale(f"no pair of vectors on {scale} sums inside it")
    return box


def _draw(rng: random.Random, lo: float, hi: float, scale: Interval) -> float:
    """Uniform draw, a quarter of the time snapped to an eighth-grid to force ties."""
    for _ in range(100):
        if rng.random() < 0.25:
            v = lo + (hi - lo) * rng.randint(0, 8) / 8
        else:
            v = rng.uniform(lo, hi)
        if v in scale:
            return v
    raise UnsupportedAxiomForScale(f"could not sample inside {scale}")


def gen_comonotone_pair(n: int, scale: Interval, seed: int,
                        summable: bool = True) -> tuple[ScoreVector, ScoreVector]:
    """Two vectors sorted by one shared random permutation.

    With ``summable`` (the default) both are drawn from a sub-box whose
    sums stay on the scale.
    """
    rng = random.Random(seed)
    lo, hi = _summable_box(scale) if summable else _finite_box(scale)
    perm = rng.sample(range(n), n)
    xs = sorted(_draw(rng, lo, hi, scale) for _ in range(n))
    ys = sorted(_draw(rng, lo, hi, scale) for _ in range(n))
    x = [0.0] * n
    y = [0.0] * n
    for rank, j in enumerate(perm):
        x[j] = xs[rank]
        y[j] = ys[rank]
    return ScoreVector(tuple(x), scale), ScoreVector(tuple(y), scale)


def _random_chain(rng: random.Random, n: int, k: int) -> list[SignedCoalition]:
    """A ⊆-decreasing chain of k pairs: each criterion gets a side and a depth."""
    sides = [rng.choice((1, 1, -1, -1, 0)) for _ in range(n)]
    depths = [rng.randint(1, k) for _ in range(n)]
    chain = []
    for level in range(1, k + 1):
        pos = neg = 0
        for j in range(n):
            if depths[j] >= level:
                if sides[j] > 0:
                    pos |= 1 << j
                elif sides[j] < 0:
                    neg |= 1 << j
        chain.append(SignedCoalition(pos, neg))
    return chain


def bipolar_comonotone_from_chain(n: int, chain: Sequence[SignedCoalition],
                                  x_steps: Sequence[float],
                                  y_steps: Sequence[float]) -> tuple[ScoreVector, ScoreVector]:
    """``x = sum_i x_steps[i] * 1_(chain[i])`` and likewise ``y``.

    With a ⊆-decreasing chain and nonnegative steps the two vectors are
    bipolar comonotone.
    """
    if not len(chain) == len(x_steps) == len(y_steps):
        raise ValueError("one step per chain element is required")
    for upper, lower in zip(chain, chain[1:]):
        if not pair_inclusion(lower, upper):
            raise ValueError(f"{lower} is not included in {upper}")
    if any(s < 0 for s in x_steps) or any(s < 0 for s in y_steps):
        raise ValueError("steps must be nonnegative")

    def build(steps):
        out = [0.0] * n
        for p, step in zip(chain, steps):
            for j in range(n):
                if p.pos >> j & 1:
                    out[j] += step
                elif p.neg >> j & 1:
                    out[j] -= step
        return ScoreVector(tuple(out), BIPOLAR)

    return build(x_steps), build(y_steps)


def gen_bipolar_comonotone_pair(n: int, seed: int) -> tuple[ScoreVector, ScoreVector]:
    """Bipolar comonotone pair on [-1,1]^n whose sum also stays in [-1,1]^n."""
    rng = random.Random(seed)
    k = rng.randint(1, n + 1)
    chain = _random_chain(rng, n, k)

    def steps():
        out = []
        for _ in range(k):
            u = rng.random()
            out.append(0.0 if u < 0.15 else rng.randint(1, 8) / 16 if u < 0.4 else rng.random())
        return out

    xs, ys = steps(), steps()
    total = sum(xs) + sum(ys)
    if total > 1.0:
        shrink = (1.0 - 1e-9) / total
        xs = [s * shrink for s in xs]
        ys = [s * shrink for s in ys]
    return bipolar_comonotone_from_chain(n, chain, xs, ys)


@dataclass(frozen=True)
class ChainSpec:
    """Levels ``0 < l_1 < ... < l_k <= 1`` on a ⊆-decreasing chain of pairs."""

    levels: tuple[float, ...]
    pairs: tuple[SignedCoalition, ...]

    def __post_init__(self):
        if not self.levels or len(self.levels) != len(self.pairs):
            raise ValueError("need one pair per level and at least one level")
        if not (0 < self.levels[0] and self.levels[-1] <= 1
                and all(a < b for a, b in zip(self.levels, self.levels[1:]))):
            raise ValueError(f"levels must increase strictly inside (0,1]: {self.levels}")
        for upper, lower in zip(self.pairs, self.pairs[1:]):
            if not pair_inclusion(lower, upper):
                raise ValueError(f"chain is not decreasing: {lower} not within {upper}")

    @property
    def k(self) -> int:
        return len(self.levels)

    def vectors(self, n: int) -> list[ScoreVector]:
        """The scaled indicators ``l_i * 1_(A_i, B_i)``."""
        return [ScoreVector(tuple(l * v for v in indicator(p, n)), BIPOLAR)
                for l, p in zip(self.levels, self.pairs)]


def gen_chain(n: int, seed: int) -> ChainSpec:
    rng = random.Random(seed)
    k = rng.randint(1, n + 1)
    levels = sorted(rng.sample(range(1, 65), k))
    if rng.random() < 0.3:
        levels[-1] = 64
    return ChainSpec(tuple(v / 64 for v in levels), tuple(_random_chain(rng, n, k)))


# -- reports ------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    trial: int
    witness: dict
    lhs: float
    rhs: float
    gap: float


@dataclass
class AxiomReport:
    axiom: str
    trials: int
    checked: int = 0
    violation_count: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def _record(self, trial: int, witness: dict, lhs: float, rhs: float) -> None:
        self.violation_count += 1
        if len(self.violations) < MAX_WITNESSES:
            gap = abs(lhs - rhs) if math.isfinite(lhs) and math.isfinite(rhs) else math.inf
            self.violations.append(Violation(trial, witness, lhs, rhs, gap))

    def compare(self, trial: int, witness: dict, lhs: float, rhs: float, eps: float) -> None:
        self.checked += 1
        if not abs(lhs - rhs) <= eps:
            self._record(trial, witness, lhs, rhs)

    def to_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "passed": self.passed,
            "trials": self.trials,
            "checked": self.checked,
            "violation_count": self.violation_count,
            "violations": [
                {"trial": v.trial, "witness": v.witness, "lhs": v.lhs, "rhs": v.rhs, "gap": v.gap}
                for v in self.violations
            ],
        }


# -- axiom checks -------------------------------------------------------------

MAXITIVITY_PREFIX = "bipolar-comonotone-maxitivity"

AXIOMS = (
    "idempotency",
    "homogeneity",
    "additivity",
    "maxitivity",
    "minitivity",
    "min-stability",
    "comonotone-additivity",
    "comonotone-maxitivity",
    "comonotone-minitivity",
    "bipolar-comonotone-additivity",
    MAXITIVITY_PREFIX,
    MAXITIVITY_PREFIX + "(right)",
    MAXITIVITY_PREFIX + "(left)",
    "bipolar-sign-stability",
    "bipolar-min-stability",
    "odd-symmetry",
)


def maxitivity_axiom(variant: str) -> str:
    return MAXITIVITY_PREFIX if variant == "neutral" else f"{MAXITIVITY_PREFIX}({variant})"


def canonical_axiom(name: str) -> str:
    if name == MAXITIVITY_PREFIX + "(neutral)":
        return MAXITIVITY_PREFIX
    if name not in AXIOMS:
        raise ValueError(f"unknown axiom {name!r}; known: {', '.join(AXIOMS)}")
    return name


def _subseed(seed: int, label: str, trial: int) -> int:
    digest = hashlib.blake2b(f"{seed}|{label}|{trial}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def _sign(v: float, eps: float) -> int:
    return 0 if abs(v) <= eps else (1 if v > 0 else -1)


def _vec(x) -> list[float]:
    return [float(v) for v in x]


def _random_vector(rng: random.Random, n: int, scale: Interval, box=None) -> tuple[float, ...]:
    lo, hi = box or _finite_box(scale)
    return tuple(_draw(rng, lo, hi, scale) for _ in range(n))


def _random_pair(rng: random.Random, n: int) -> SignedCoalition:
    pos = neg = 0
    for j in range(n):
        side = rng.randrange(3)
        if side == 1:
            pos |= 1 << j
        elif side == 2:
            neg |= 1 << j
    return SignedCoalition(pos, neg)


def _require_bipolar(G: AggregatorHandle, axiom: str) -> None:
    if not (-1.0 in G.scale and 1.0 in G.scale):
        raise UnsupportedAxiomForScale(f"{axiom} is defined on [-1,1]^n, not on {G.scale}")


def _check_idempotency(G, report, trials, seed, eps):
    lo, hi = _finite_box(G.scale)
    grid = [lo + (hi - lo) * k / 8 for k in range(9)]
    constants = [c for c in grid if c in G.scale]
    rng = random.Random(_subseed(seed, report.axiom, -1))
    constants += [_draw(rng, lo, hi, G.scale) for _ in range(trials)]
    for trial, c in enumerate(constants):
        report.compare(trial, {"c": c}, G((c,) * G.n), c, eps)


def _check_homogeneity(G, report, trials, seed, eps):
    for trial in range(trials):
        rng = random.Random(_subseed(seed, report.axiom, trial))
        x = _random_vector(rng, G.n, G.scale)
        c = HOMOGENEITY_DYADIC[trial // 2 % 4] if trial % 2 == 0 else 1.0 - rng.random()
        cx = tuple(c * v for v in x)
        if not all(v in G.scale for v in cx):
            continue
        report.compare(trial, {"x": _vec(x), "c": c}, G(cx), c * G(x), eps)


def _check_pairwise(G, report, trials, seed, eps, combine, merge, source):
    for trial in range(trials):
        sub = _subseed(seed, report.axiom, trial)
        if source == "comonotone":
            x, y = gen_comonotone_pair(G.n, G.scale, sub, summable=combine == "sum")
        elif source == "bipolar":
            x, y = gen_bipolar_comonotone_pair(G.n, sub)
        else:
            rng = random.Random(sub)
            box = _summable_box(G.scale) if combine == "sum" else None
            x = _random_vector(rng, G.n, G.scale, box)
            y = _random_vector(rng, G.n, G.scale, box)
        if combine == "sum":
            z = tuple(a + b for a, b in zip(x, y))
        elif combine == "max":
            z = tuple(max(a, b) for a, b in zip(x, y))
        else:
            z = tuple(min(a, b) for a, b in zip(x, y))
        report.compare(trial, {"x": _vec(x), "y": _vec(y)}, G(z), merge(G(x), G(y)), eps)


def _check_min_stability(G, report, trials, seed, eps):
    lo, hi = _finite_box(G.scale)
    for trial in range(trials):
        rng = random.Random(_subseed(seed, report.axiom, trial))
        x = _random_vector(rng, G.n, G.scale)
        gamma = _draw(rng, lo, hi, G.scale)
        clipped = tuple(min(v, gamma) for v in x)
        report.compare(trial, {"x": _vec(x), "gamma": gamma}, G(clipped), min(G(x), gamma), eps)


def _check_bipolar_maxitivity(G, report, trials, seed, eps, variant):
    op = bipolar_max_variant(variant)
    for trial in range(trials):
        chain = gen_chain(G.n, _subseed(seed, report.axiom, trial))
        vectors = chain.vectors(G.n)
        lhs = G(vector_bipolar_max(vectors, variant))
        rhs = op([G(v) for v in vectors])
        witness = {"levels": list(chain.levels), "pairs": [str(p) for p in chain.pairs]}
        report.compare(trial, witness, lhs, rhs, eps)


def _indicator_samples(G, trials, seed, label):
    """(trial, pair, levels) for the exhaustive grid first, then random draws.

    Exhaustive grid entries carry negative trial numbers.
    """
    n = G.n
    out = []
    if 3 ** n * len(LEVEL_GRID) ** 2 <= EXHAUSTIVE_LIMIT:
        for i, p in enumerate(signed_coalitions(n)):
            out.append((-1 - i, p, LEVEL_GRID))
    for trial in range(trials):
        rng = random.Random(_subseed(seed, label, trial))
        r, s = 1.0 - rng.random(), 1.0 - rng.random()
        out.append((trial, _random_pair(rng, n), (r, s)))
    return out


def _scaled(p, level, n):
    return tuple(level * v for v in indicator(p, n))


def _check_sign_stability(G, report, trials, seed, eps):
    for trial, p, levels in _indicator_samples(G, trials, seed, report.axiom):
        values = [(r, G(_scaled(p, r, G.n))) for r in levels]
        for i, (r, gr) in enumerate(values):
            for s, gs in values[i + 1:]:
                report.checked += 1
                if _sign(gr, eps) != _sign(gs, eps):
                    report._record(trial, {"pair": str(p), "r": r, "s": s}, gr, gs)


def _check_bipolar_min_stability(G, report, trials, seed, eps):
    for trial, p, levels in _indicator_samples(G, trials, seed, report.axiom):
        values = sorted((lvl, abs(G(_scaled(p, lvl, G.n)))) for lvl in set(levels))
        for i, (s, gs) in enumerate(values):
            for r, gr in values[i + 1:]:
                report.checked += 1
                witness = {"pair": str(p), "r": r, "s": s}
                if gr < gs - eps:
                    report._record(trial, witness, gr, gs)
                elif gr > gs + eps and abs(gs - s) > eps:
                    report._record(trial, witness, gs, s)


def _check_odd_symmetry(G, report, trials, seed, eps):
    for trial in range(trials):
        rng = random.Random(_subseed(seed, report.axiom, trial))
        x = _random_vector(rng, G.n, G.scale)
        neg = tuple(-v for v in x)
        if not all(v in G.scale for v in neg):
            raise UnsupportedAxiomForScale(f"odd-symmetry needs a symmetric scale, got {G.scale}")
        report.compare(trial, {"x": _vec(x)}, G(neg), -G(x), eps)


def check_axiom(G: AggregatorHandle, axiom: str, trials: int = 1000, seed: int = 0,
                eps: float = EPS) -> AxiomReport:
    """Test one axiom on ``trials`` seeded instances (plus exhaustive sub-domains)."""
    axiom = canonical_axiom(axiom)
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    report = AxiomReport(axiom, trials)
    if axiom == "maxitivity" and G.scale.lower < 0:
        raise UnsupportedAxiomForScale("maxitivity needs a scale with lower end >= 0")
    if axiom == "minitivity" and G.scale.upper > 0:
        raise UnsupportedAxiomForScale("minitivity needs a scale with upper end <= 0")
    if axiom.startswith("bipolar-"):
        _require_bipolar(G, axiom)

    args = (G, report, trials, seed, eps)
    if axiom == "idempotency":
        _check_idempotency(*args)
    elif axiom == "homogeneity":
        _check_homogeneity(*args)
    elif axiom == "additivity":
        _check_pairwise(*args, "sum", lambda a, b: a + b, "free")
    elif axiom == "maxitivity":
        _check_pairwise(*args, "max", max, "free")
    elif axiom == "minitivity":
        _check_pairwise(*args, "min", min, "free")
    elif axiom == "min-stability":
        _check_min_stability(*args)
    elif axiom == "comonotone-additivity":
        _check_pairwise(*args, "sum", lambda a, b: a + b, "comonotone")
    elif axiom == "comonotone-maxitivity":
        _check_pairwise(*args, "max", max, "comonotone")
    elif axiom == "comonotone-minitivity":
        _check_pairwise(*args, "min", min, "comonotone")
    elif axiom == "bipolar-comonotone-additivity":
        _check_pairwise(*args, "sum", lambda a, b: a + b, "bipolar")
    elif axiom.startswith(MAXITIVITY_PREFIX):
        variant = axiom[len(MAXITIVITY_PREFIX) + 1:-1] or "neutral"
        _check_bipolar_maxitivity(*args, variant)
    elif axiom == "bipolar-sign-stability":
        _check_sign_stability(*args)
    elif axiom == "bipolar-min-stability":
        _check_bipolar_min_stability(*args)
    elif axiom == "odd-symmetry":
        _check_odd_symmetry(*args)
    report.violations.sort(key=lambda v: v.trial)
    return report


# -- characterization suites -------------------------------------------------

FAMILIES = ("choquet", "shilkret", "sugeno",
            "bipolar-choquet", "bipolar-shilkret", "bipolar-sugeno")

DEMO_BUNDLE = (
    "idempotency",
    "homogeneity",
    "bipolar-comonotone-additivity",
    MAXITIVITY_PREFIX,
    "bipolar-sign-stability",
    "bipolar-min-stability",
)


def axiom_bundle(family: str, polarity: str, variant: str = "neutral") -> tuple[str, ...]:
    """Axioms whose conjunction characterizes the given integral."""
    if polarity == "symmetric":
        return ("idempotency", "odd-symmetry")
    if polarity == "bipolar":
        return {
            "choquet": ("idempotency", "bipolar-comonotone-additivity"),
            "shilkret": ("idempotency", maxitivity_axiom(variant), "homogeneity"),
            "sugeno": ("idempotency", maxitivity_axiom(variant),
                       "bipolar-sign-stability", "bipolar-min-stability"),
        }[family]
    if polarity == "classic":
        return {
            "choquet": ("idempotency", "comonotone-additivity"),
            "shilkret": ("idempotency", "comonotone-maxitivity", "homogeneity"),
            "sugeno": ("idempotency", "comonotone-maxitivity", "min-stability"),
        }[family]
    if polarity == "negative":
        return {
            "choquet": ("idempotency", "comonotone-additivity"),
            "shilkret": ("idempotency", "comonotone-minitivity", "homogeneity"),
            "sugeno": ("idempotency", "comonotone-minitivity"),
        }[family]
    raise ValueError(f"unknown polarity {polarity!r}")


@dataclass
class SuiteResult:
    name: str
    reports: list[AxiomReport]
    roundtrip: bool | None  # None when there is no carrier to compare against

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports) and self.roundtrip is not False

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "exact_roundtrip": self.roundtrip,
            "axioms": [r.to_dict() for r in self.reports],
        }


def _split_family(family: str, polarity: str | None, carrier) -> tuple[str, str]:
    if family.startswith("bipolar-"):
        return family[len("bipolar-"):], "bipolar"
    if polarity is None:
        polarity = "bipolar" if isinstance(carrier, BiCapacity) else "classic"
    return family, polarity


def _roundtrip(G: AggregatorHandle, carrier) -> bool:
    try:
        if isinstance(carrier, BiCapacity):
            return elicit_bicapacity(G) == carrier
        if isinstance(carrier, Measure):
            return elicit_measure(G) == carrier
        return elicit_capacity(G) == carrier
    except ValidationError:
        return False


def run_characterization_suite(family: str, carrier, trials: int = 1000, seed: int = 0,
                               eps: float = EPS, polarity: str | None = None,
                               variant: str = "neutral") -> SuiteResult:
    """Check the axiom bundle of ``family`` bound to ``carrier``, then elicit it back."""
    base, polarity = _split_family(family, polarity, carrier)
    G = bind(base, polarity, carrier, variant)
    reports = [check_axiom(G, ax, trials, seed, eps) for ax in axiom_bundle(base, polarity, variant)]
    return SuiteResult(G.name, reports, _roundtrip(G, carrier))


def run_demo_suite(G: AggregatorHandle, trials: int = 1000, seed: int = 0,
                   eps: float = EPS) -> SuiteResult:
    """Every bipolar axiom against an arbitrary aggregator; no carrier round trip."""
    return SuiteResult(G.name, [check_axiom(G, ax, trials, seed, eps) for ax in DEMO_BUNDLE], None)


def self_test_generators(n: int, samples: int = 200, seed: int = 0) -> None:
    """Assert every generator output satisfies its declared predicate."""
    for i in range(samples):
        x, y = gen_comonotone_pair(n, BIPOLAR, _subseed(seed, "como", i))
        assert is_comonotone(x, y), (x, y)
        x, y = gen_bipolar_comonotone_pair(n, _subseed(seed, "bico", i))
        assert is_bipolar_comonotone(x, y), (x, y)
        assert all(-1.0 <= a + b <= 1.0 for a, b in zip(x, y)), (x, y)
        chain = gen_chain(n, _subseed(seed, "chain", i))
        vectors = chain.vectors(n)
        maxima = {tuple(vector_bipolar_max(vectors, v)) for v in ("neutral", "pos", "neg")}
        assert len(maxima) == 1, chain
