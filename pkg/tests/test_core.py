import math
from itertools import product

import pytest
from hypothesis import given, strategies as st

from bifuzzy.core import (
    BIPOLAR, REALS, UNIT, BiCapacity, Capacity, Interval, Measure, ScoreVector,
    SignedCoalition, coalition, covering_moves, indicator, is_bipolar_comonotone,
    is_comonotone, lattice_leq, level_pair, members, pair_inclusion, signed_coalitions,
    validate_bicapacity, validate_capacity,
)
from bifuzzy.errors import (
    BoundaryViolation, DimensionMismatch, DisjointnessViolation, DuplicateEntry,
    MissingEntry, MonotonicityViolation, ScaleViolation, ValidationError,
)

from conftest import pair


def brute_leq(p, q, n):
    """Pointwise on the ternary encoding: A within C and B containing D."""
    for i in range(n):
        a, b = p.pos >> i & 1, p.neg >> i & 1
        c, d = q.pos >> i & 1, q.neg >> i & 1
        if a and not c:
            return False
        if d and not b:
            return False
    return True


class TestInterval:
    def test_membership(self):
        assert 0.0 in UNIT and 1.0 in UNIT and 1.5 not in UNIT
        half_open = Interval(0.0, 1.0, lower_open=True)
        assert 0.0 not in half_open and 1.0 in half_open

    def test_infinite_ends_are_open(self):
        assert math.inf not in REALS
        assert not REALS.is_closed


class TestScoreVector:
    def test_scale_enforced(self):
        with pytest.raises(ScaleViolation):
            ScoreVector((0.5, 1.2), UNIT)

    def test_negation_flips_scale(self):
        v = -ScoreVector((0.25, 1.0), UNIT)
        assert tuple(v) == (-0.25, -1.0)
        assert v.scale.lower == -1.0 and v.scale.upper == 0.0

    def test_empty_rejected(self):
        with pytest.raises(DimensionMismatch):
            ScoreVector(())


class TestCoalitions:
    def test_bitmask_roundtrip(self):
        assert coalition([1, 3]) == 0b101
        assert members(0b101) == [1, 3]

    def test_disjointness(self):
        with pytest.raises(DisjointnessViolation):
            pair((1, 2), (2,))

    def test_count(self):
        for n in range(1, 6):
            assert len(set(signed_coalitions(n))) == 3 ** n

    def test_str(self):
        assert str(pair((1,), (2,))) == "({1},{2})"
        assert str(pair()) == "({},{})"

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_leq_matches_brute_force(self, n):
        pairs = list(signed_coalitions(n))
        for p, q in product(pairs, pairs):
            assert lattice_leq(p, q) == brute_leq(p, q, n)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_lattice_laws(self, n):
        pairs = list(signed_coalitions(n))
        bottom, top = pair((), range(1, n + 1)), pair(range(1, n + 1), ())
        for p in pairs:
            assert lattice_leq(bottom, p) and lattice_leq(p, top)
        for p, q in product(pairs, pairs):
            s, m = p.sup(q), p.inf(q)
            assert lattice_leq(p, s) and lattice_leq(q, s)
            assert lattice_leq(m, p) and lattice_leq(m, q)
            uppers = [r for r in pairs if lattice_leq(p, r) and lattice_leq(q, r)]
            assert all(lattice_leq(s, r) for r in uppers)

    def test_covering_moves_n2(self):
        moves = [(p, q) for p in signed_coalitions(2) for q in covering_moves(2, p)]
        assert len(moves) == 12
        for p, q in moves:
            assert lattice_leq(p, q) and p != q

    def test_pair_inclusion_differs_from_leq(self):
        p, q = pair((), (1,)), pair()
        assert pair_inclusion(q, p) and not pair_inclusion(p, q)
        assert lattice_leq(p, q) and not lattice_leq(q, p)

    def test_indicator(self):
        assert tuple(indicator(pair((1,), (3,)), 3)) == (1.0, 0.0, -1.0)
        assert tuple(indicator(0b10, 2)) == (0.0, 1.0)
        with pytest.raises(DimensionMismatch):
            indicator(pair((4,)), 3)


class TestLevelPair:
    def test_zero_level_splits_by_sign(self):
        assert level_pair((0.0, -0.2, 0.3), 0) == pair((1, 3), (2,))

    def test_positive_level(self):
        assert level_pair((0.5, -0.5, 0.2, -0.1), 0.5) == pair((1,), (2,))

    def test_negative_level_rejected(self):
        with pytest.raises(ValueError):
            level_pair((0.1,), -0.1)


class TestComonotone:
    def test_examples(self):
        assert is_comonotone((1, 2, 3), (0, 0, 5))
        assert not is_comonotone((1, 2), (2, 1))
        assert is_bipolar_comonotone((0.5, -0.2), (0.1, -0.1))
        assert not is_bipolar_comonotone((0.5, -0.2), (0.1, 0.1))
        assert not is_bipolar_comonotone((0.5, -0.2), (0.1, -0.3))

    def test_length(self):
        with pytest.raises(DimensionMismatch):
            is_comonotone((1,), (1, 2))


class TestCapacity:
    def test_valid(self, mu3):
        assert mu3[coalition([1, 3])] == 0.7

    def test_boundaries(self):
        with pytest.raises(BoundaryViolation):
            Capacity(1, (0.1, 1.0))
        with pytest.raises(BoundaryViolation):
            Capacity(1, (0.0, 0.9))

    def test_monotonicity_reports_pair(self):
        with pytest.raises(MonotonicityViolation) as info:
            Capacity(3, (0.0, 0.6, 0.3, 0.5, 0.2, 0.7, 0.8, 1.0))
        assert info.value.lower == 0b001 and info.value.upper == 0b011

    def test_validate_entries(self):
        mu = validate_capacity(2, [(0, 0.0), (1, 0.3), (2, 0.4), (3, 1.0)])
        assert mu.table == (0.0, 0.3, 0.4, 1.0)
        with pytest.raises(MissingEntry):
            validate_capacity(2, [(0, 0.0), (3, 1.0)])
        with pytest.raises(DuplicateEntry):
            validate_capacity(1, [(0, 0.0), (1, 1.0), (1, 1.0)])
        with pytest.raises(ValidationError):
            validate_capacity(1, [(0, 0.0), (1, 1.0), (2, 1.0)])

    def test_nonfinite(self):
        with pytest.raises(ValidationError):
            Capacity(1, (0.0, math.nan))

    def test_additive(self):
        mu = Capacity.additive([0.25, 0.75])
        assert mu.table == (0.0, 0.25, 0.75, 1.0)


class TestMeasure:
    def test_general_scale(self):
        nu = Measure(1, Interval.closed(2.0, 5.0), (2.0, 5.0))
        assert nu[1] == 5.0

    def test_open_scale_rejected(self):
        with pytest.raises(BoundaryViolation):
            Measure(1, Interval(0.0, 1.0, upper_open=True), (0.0, 1.0))

    def test_ends_attained(self):
        with pytest.raises(BoundaryViolation):
            Measure(1, Interval.closed(0.0, 2.0), (0.0, 1.0))


class TestBiCapacity:
    def test_valid_and_parts(self, mb2):
        assert mb2[pair((1,), (2,))] == 0.2
        assert mb2.positive_part().table == (0.0, 0.5, 0.4, 1.0)
        assert mb2.negative_part().table == (0.0, 0.6, 0.3, 1.0)

    def test_missing(self):
        with pytest.raises(MissingEntry):
            BiCapacity(1, {(0, 0): 0.0, (1, 0): 1.0})

    def test_boundary(self):
        with pytest.raises(BoundaryViolation):
            BiCapacity(1, {(0, 0): 0.1, (1, 0): 1.0, (0, 1): -1.0})

    def test_monotonicity(self, mb2):
        table = dict(mb2.table)
        table[pair((1,), (2,))] = 0.9  # above ({1},{}) = 0.5
        with pytest.raises(MonotonicityViolation) as info:
            BiCapacity(2, table)
        assert info.value.upper == pair((1,), ())

    def test_disjointness_in_entries(self):
        with pytest.raises(DisjointnessViolation):
            validate_bicapacity(1, [((0, 0), 0.0), ((1, 0), 1.0), ((0, 1), -1.0), ((1, 1), 0.0)])

    def test_equality_and_hash(self, mb2):
        twin = BiCapacity(2, dict(mb2.table))
        assert twin == mb2 and hash(twin) == hash(mb2)


@st.composite
def capacity_tables(draw, n):
    table = [0.0] * (1 << n)
    for mask in sorted(range(1, (1 << n) - 1), key=lambda m: bin(m).count("1")):
        floor = max(table[mask & ~(1 << i)] for i in range(n) if mask >> i & 1)
        table[mask] = draw(st.floats(floor, 1.0))
    table[-1] = 1.0
    return table


@given(capacity_tables(3))
def test_generated_tables_validate(table):
    mu = Capacity(3, tuple(table))
    for a in range(8):
        for b in range(8):
            if a & ~b == 0:
                assert mu[a] <= mu[b]
