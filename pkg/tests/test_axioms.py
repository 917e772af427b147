import random

import pytest

from bifuzzy.axioms import (
    AggregatorHandle, AxiomReport, ChainSpec, MAX_WITNESSES, axiom_bundle, bind,
    bipolar_comonotone_from_chain, check_axiom, demo_handle, elicit_bicapacity,
    elicit_capacity, elicit_measure, gen_bipolar_comonotone_pair, gen_chain,
    gen_comonotone_pair, random_bicapacity, random_capacity, random_measure,
    run_characterization_suite, run_demo_suite, self_test_generators,
)
from bifuzzy.bipolar import bipolar_choquet
from bifuzzy.bipolar_ops import bipolar_max, vector_bipolar_max
from bifuzzy.core import (
    BIPOLAR, UNIT, BiCapacity, Interval, is_bipolar_comonotone, is_comonotone,
    signed_coalitions,
)
from bifuzzy.errors import UnsupportedAxiomForScale

from conftest import pair

CHAIN = (pair((1, 3), (2, 4)), pair((1, 3), (2, 4)), pair((1, 3), (2,)), pair((1,), (2,)))


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_generators_self_test(n):
    self_test_generators(n, samples=100, seed=n)


def test_generators_are_deterministic():
    assert gen_bipolar_comonotone_pair(4, 7) == gen_bipolar_comonotone_pair(4, 7)
    assert gen_chain(4, 7) == gen_chain(4, 7)
    assert gen_comonotone_pair(3, UNIT, 1) == gen_comonotone_pair(3, UNIT, 1)


def test_comonotone_pairs_on_unbounded_scale():
    scale = Interval(0.0, float("inf"))
    for seed in range(50):
        x, y = gen_comonotone_pair(3, scale, seed)
        assert is_comonotone(x, y)
        assert all(a + b in scale for a, b in zip(x, y))


def test_four_level_chain_example():
    spec = ChainSpec((0.2, 0.3, 0.5, 0.7), CHAIN)
    z, w, y, x = (tuple(v) for v in spec.vectors(4))
    assert x == (0.7, -0.7, 0.0, 0.0)
    assert y == (0.5, -0.5, 0.5, 0.0)
    assert w == (0.3, -0.3, 0.3, -0.3) and z == (0.2, -0.2, 0.2, -0.2)
    for variant in ("neutral", "pos", "neg"):
        assert tuple(vector_bipolar_max(spec.vectors(4), variant)) == (0.7, -0.7, 0.5, -0.3)


def test_chain_sum_is_bipolar_comonotone():
    x, y = bipolar_comonotone_from_chain(4, CHAIN, [0.2, 0.1, 0.2, 0.2],
                                         [0.0, 0.3, 0.0, 0.1])
    assert tuple(x) == pytest.approx((0.7, -0.7, 0.5, -0.3))
    assert is_bipolar_comonotone(x, y)


def test_chain_rejects_increasing_pairs():
    with pytest.raises(ValueError):
        ChainSpec((0.2, 0.4), (pair((1,)), pair((1, 2))))
    with pytest.raises(ValueError):
        ChainSpec((0.4, 0.2), (pair((1,)), pair((1,))))


def test_random_carriers_are_valid_and_seeded():
    for n in range(1, 5):
        assert random_capacity(n, 3) == random_capacity(n, 3)
        assert random_bicapacity(n, 3) == random_bicapacity(n, 3)
    assert random_measure(2, Interval.closed(-2.0, 3.0), 0).table[0] == -2.0


def test_elicitation_roundtrips():
    mu = random_capacity(3, 1)
    assert elicit_capacity(bind("choquet", "classic", mu)) == mu
    assert elicit_capacity(bind("sugeno", "negative", mu)) == mu
    nu = random_measure(2, Interval.closed(1.0, 4.0), 2)
    assert elicit_measure(bind("sugeno", "classic", nu)) == nu
    mb = random_bicapacity(3, 1)
    assert elicit_bicapacity(bind("shilkret", "bipolar", mb, "left")) == mb


def test_max_is_a_bipolar_choquet_integral():
    G = demo_handle("max", 3)
    mb = elicit_bicapacity(G)
    rng = random.Random(0)
    for _ in range(2000):
        x = [rng.uniform(-1, 1) for _ in range(3)]
        assert bipolar_choquet(x, mb) == pytest.approx(G(x), abs=1e-12)


def test_mean_falsified_with_witness():
    report = check_axiom(demo_handle("mean", 2), "bipolar-min-stability", trials=100)
    assert not report.passed
    v = report.violations[0]
    assert v.gap > 1e-9 and "pair" in v.witness


def test_report_is_reproducible():
    G = demo_handle("mean", 3)
    a = check_axiom(G, "bipolar-comonotone-maxitivity", trials=200, seed=4)
    b = check_axiom(G, "bipolar-comonotone-maxitivity", trials=200, seed=4)
    assert a.to_dict() == b.to_dict()
    assert len(a.violations) <= MAX_WITNESSES <= a.violation_count


def test_zero_trials():
    report = check_axiom(demo_handle("mean", 2), "homogeneity", trials=0)
    assert report.passed and report.checked == 0


def test_scale_restrictions():
    with pytest.raises(UnsupportedAxiomForScale):
        check_axiom(demo_handle("max", 2), "maxitivity")
    G = bind("choquet", "classic", random_capacity(2, 0), scale=UNIT)
    with pytest.raises(UnsupportedAxiomForScale):
        check_axiom(G, "bipolar-sign-stability")


def test_unknown_axiom():
    with pytest.raises(ValueError):
        check_axiom(demo_handle("max", 2), "commutativity")


def test_report_compare():
    r = AxiomReport("idempotency", 1)
    r.compare(0, {}, 1.0, 1.0 + 1e-12, 1e-9)
    r.compare(1, {"x": [1]}, 1.0, 2.0, 1e-9)
    assert r.checked == 2 and r.violation_count == 1 and r.violations[0].gap == 1.0


def test_bundles():
    assert "homogeneity" in axiom_bundle("shilkret", "bipolar", "right")
    assert "bipolar-comonotone-maxitivity(right)" in axiom_bundle("shilkret", "bipolar", "right")
    assert axiom_bundle("sugeno", "symmetric") == ("idempotency", "odd-symmetry")


@pytest.mark.parametrize("family", ["choquet", "shilkret", "sugeno"])
@pytest.mark.parametrize("polarity", ["classic", "negative", "symmetric"])
def test_unipolar_suites_pass(family, polarity):
    result = run_characterization_suite(family, random_capacity(3, 9), trials=150,
                                        polarity=polarity)
    assert result.passed, result.to_dict()
    assert result.roundtrip is True


@pytest.mark.parametrize("family, variant", [
    ("choquet", "neutral"),
    *((f, v) for f in ("shilkret", "sugeno") for v in ("neutral", "right", "left")),
])
def test_bipolar_suites_pass(family, variant):
    result = run_characterization_suite("bipolar-" + family, random_bicapacity(3, 9),
                                        trials=150, variant=variant)
    assert result.passed, result.to_dict()


def test_right_variant_fails_neutral_maxitivity_somewhere():
    # the trichotomy carrier separates the variants
    table = {pair(*k): v for k, v in {
        ((), ()): 0.0, ((1,), ()): 0.5, ((2,), ()): 0.3, ((1, 2), ()): 1.0,
        ((), (1,)): -0.5, ((), (2,)): -1.0, ((), (1, 2)): -1.0,
        ((1,), (2,)): -1.0, ((2,), (1,)): -0.2}.items()}
    mb = BiCapacity(2, table)
    spec = ChainSpec((0.4, 0.8), (pair((1,), (2,)), pair((1,), ())))
    for variant, expected in (("neutral", 0.0), ("right", 0.4), ("left", -0.4)):
        G = bind("shilkret", "bipolar", mb, variant)
        merged = vector_bipolar_max(spec.vectors(2), "neutral")
        assert tuple(merged) == (0.8, -0.4)
        assert G(merged) == expected
        parts = [G(v) for v in spec.vectors(2)]
        assert sorted(parts) == [-0.4, 0.4]
    # right is maxitive for its own maximum but not for the neutral one
    G = bind("shilkret", "bipolar", mb, "right")
    assert G(merged) != bipolar_max(parts) == 0


def test_from_table_handle():
    G = AggregatorHandle.from_table(2, BIPOLAR, {(1.0, 0.0): 0.5})
    assert G((1, 0)) == 0.5
    with pytest.raises(KeyError):
        G((0, 0))


def test_demo_suite_shapes():
    mean = run_demo_suite(demo_handle("mean", 3), trials=200)
    failed = {r.axiom for r in mean.reports if not r.passed}
    assert failed == {"bipolar-comonotone-maxitivity", "bipolar-min-stability"}
    assert mean.roundtrip is None
