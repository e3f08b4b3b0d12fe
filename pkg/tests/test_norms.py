"""Tests for the exact norm evaluators and the brute-force oracles."""

import itertools
import math
import sys
from pathlib import Path

import numpy as np
import pytest

# Add src to path
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))
sys.path.insert(0, str(src_path.parent))

from norms.evaluator import (
    baernstein_norm,
    decreasing_rearrangement,
    lp_norm,
    schreier_norm,
    sup_norm,
)
from norms.oracle import baernstein_norm_oracle, schreier_norm_oracle
from norms.space_norm import norm_in_space
from seqvec.schreier import SchreierChain, SchreierSet, beta_p, is_schreier_set, mu_p
from seqvec.vectors import FinVec
from spaces.labels import SpaceLabel
from verify.sampling import random_finvec, trial_rng


def random_small_vector(rng, bound):
    size = int(rng.integers(1, bound + 1))
    indices = np.sort(rng.choice(bound, size=size, replace=False) + 1)
    values = rng.normal(size=size)
    return FinVec(entries=tuple((int(i), float(v)) for i, v in zip(indices, values)))


def test_lp_norm_examples():
    assert lp_norm(FinVec.unit(7), 3.0) == 1.0
    assert lp_norm(FinVec.from_mapping({1: 3.0, 2: 4.0}), 2.0) == pytest.approx(5.0)
    assert lp_norm(FinVec.from_mapping({1: 1.0, 2: 1.0}), 1.0) == 2.0


def test_sup_norm_examples():
    assert sup_norm(FinVec.unit(5)) == 1.0
    assert sup_norm(FinVec.from_mapping({1: -2.0, 9: 1.0})) == 2.0
    assert sup_norm(FinVec()) == 0.0


@pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 3.0])
def test_schreier_norm_of_unit_vectors(p):
    for n in range(1, 51):
        result = schreier_norm(FinVec.unit(n), p)
        assert abs(result.value - 1.0) <= 1e-15
        assert result.witness.indices == (n,)
    assert schreier_norm(FinVec.unit(500), p).value == 1.0


def test_schreier_norm_examples():
    pair = schreier_norm(FinVec.from_mapping({2: 1.0, 3: 1.0}), 2.0)
    assert pair.value == pytest.approx(math.sqrt(2), rel=1e-12)
    assert pair.witness.indices == (2, 3)

    # no Schreier set contains both 1 and 2
    assert schreier_norm(FinVec.from_mapping({1: 1.0, 2: 1.0}), 2.0).value == 1.0
    assert schreier_norm(FinVec(), 2.0).value == 0.0
    assert schreier_norm(FinVec(), 2.0).witness is None
    assert schreier_norm(FinVec.from_mapping({3: 2.0}), 1.0).value == 2.0


def test_schreier_witness_attains_value():
    rng = np.random.default_rng(11)
    for _ in range(50):
        x = random_small_vector(rng, 60)
        result = schreier_norm(x, 2.0)
        assert is_schreier_set(result.witness.indices)
        assert mu_p(x, result.witness, 2.0) == result.value


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
def test_baernstein_norm_of_unit_vectors(p):
    for n in range(1, 51):
        result = baernstein_norm(FinVec.unit(n), p)
        assert abs(result.value - 1.0) <= 1e-15
        assert [F.indices for F in result.witness.sets] == [(n,)]


def test_baernstein_norm_examples():
    x = FinVec.from_mapping({1: 1.0, 2: 1.0, 3: 1.0})
    result = baernstein_norm(x, 2.0)
    assert result.value == pytest.approx(math.sqrt(5), rel=1e-12)
    assert [F.indices for F in result.witness.sets] == [(1,), (2, 3)]

    pair = baernstein_norm(FinVec.from_mapping({1: 1.0, 2: 1.0}), 2.0)
    assert pair.value == pytest.approx(math.sqrt(2), rel=1e-12)
    assert [F.indices for F in pair.witness.sets] == [(1,), (2,)]

    assert baernstein_norm(FinVec.unit(2), 2.0).value == 1.0
    assert baernstein_norm(FinVec(), 2.0).value == 0.0


def test_baernstein_norm_on_a_dyadic_block_vector():
    x = FinVec.from_mapping({n: 0.25 for n in range(4, 8)})
    for p in (1.25, 2.0, 10.0):
        result = baernstein_norm(x, p)
        assert result.value == pytest.approx(1.0, abs=1e-12)
        assert len(result.witness.sets) == 1


def test_baernstein_norm_rejects_p_one():
    with pytest.raises(ValueError):
        baernstein_norm(FinVec.unit(1), 1.0)


def test_baernstein_witness_attains_value():
    rng = np.random.default_rng(5)
    for _ in range(50):
        x = random_small_vector(rng, 40)
        result = baernstein_norm(x, 1.5)
        assert isinstance(result.witness, SchreierChain)
        assert beta_p(x, result.witness, 1.5) == result.value


@pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 3.0])
def test_schreier_norm_matches_oracle(p):
    rng = np.random.default_rng([2024, int(10 * p)])
    for _ in range(500):
        x = random_small_vector(rng, 12)
        expected = schreier_norm_oracle(x, p)
        assert abs(schreier_norm(x, p).value - expected) <= 1e-12 * expected


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
def test_baernstein_norm_matches_oracle(p):
    rng = np.random.default_rng([2025, int(10 * p)])
    for _ in range(300):
        x = random_small_vector(rng, 10)
        expected = baernstein_norm_oracle(x, p)
        assert abs(baernstein_norm(x, p).value - expected) <= 1e-12 * expected


def test_norms_match_oracles_on_every_small_support():
    # coefficients from {0, 1/2, 1} on {1..6}: every support, many ties
    for pattern in itertools.product((0.0, 0.5, 1.0), repeat=6):
        x = FinVec.from_mapping({n: value for n, value in enumerate(pattern, start=1)})
        if x.is_empty():
            continue
        for p in (1.0, 1.5, 2.0, 3.0):
            expected = schreier_norm_oracle(x, p)
            assert abs(schreier_norm(x, p).value - expected) <= 1e-12 * expected
        for p in (1.5, 2.0, 3.0):
            expected = baernstein_norm_oracle(x, p)
            assert abs(baernstein_norm(x, p).value - expected) <= 1e-12 * expected


def test_oracles_refuse_large_supports():
    wide = FinVec.from_mapping({n: 1.0 for n in range(1, 22)})
    with pytest.raises(ValueError):
        schreier_norm_oracle(wide, 2.0)
    with pytest.raises(ValueError):
        baernstein_norm_oracle(FinVec.from_mapping({n: 1.0 for n in range(1, 14)}), 2.0)


def test_norm_comparisons():
    rng = np.random.default_rng(99)
    for _ in range(100):
        x = random_small_vector(rng, 30)
        l1 = lp_norm(x, 1.0)
        b2 = baernstein_norm(x, 2.0).value
        b3 = baernstein_norm(x, 3.0).value
        s1 = schreier_norm(x, 1.0).value
        assert s1 <= b3 + 1e-12
        assert b3 <= b2 + 1e-12
        assert b2 <= l1 + 1e-12
        assert sup_norm(x) <= s1 + 1e-12


def test_norms_are_subadditive_and_homogeneous():
    rng = np.random.default_rng(3)
    for _ in range(50):
        x = random_small_vector(rng, 20)
        y = random_small_vector(rng, 20)
        norms = (
            lambda v: schreier_norm(v, 2.0).value,
            lambda v: baernstein_norm(v, 2.0).value,
        )
        for norm in norms:
            assert norm(x + y) <= norm(x) + norm(y) + 1e-12
            assert norm(x.scaled(-3.0)) == pytest.approx(3.0 * norm(x), rel=1e-12)


def test_decreasing_rearrangement():
    y = decreasing_rearrangement(FinVec.from_mapping({3: 2.0, 8: -5.0}))
    assert y.entries == ((1, 5.0), (2, 2.0))
    already = FinVec.from_mapping({1: 4.0, 2: 2.0, 3: 1.0})
    assert decreasing_rearrangement(already) == already
    assert decreasing_rearrangement(FinVec.unit(100)) == FinVec.unit(1)


def test_norm_in_space_dispatch():
    x = FinVec.from_mapping({1: 1.0, 2: 1.0, 3: 1.0})
    assert norm_in_space(SpaceLabel.lp(1.0), x) == 3.0
    assert norm_in_space(SpaceLabel.bp(2.0), x) == pytest.approx(math.sqrt(5))
    assert norm_in_space(SpaceLabel.sp(2.0), x) == pytest.approx(math.sqrt(2))
    assert norm_in_space(SpaceLabel.c0(), x) == 1.0


def test_witness_set_is_schreier_model():
    result = schreier_norm(FinVec.from_mapping({2: 1.0, 3: 1.0, 4: 0.5}), 2.0)
    assert isinstance(result.witness, SchreierSet)


@pytest.mark.parametrize("magnitude", [1e200, 1e-170])
def test_norms_with_extreme_coefficients(magnitude):
    single = FinVec.from_mapping({1: magnitude})
    assert lp_norm(single, 2.0) == magnitude
    assert schreier_norm(single, 2.0).value == magnitude
    assert baernstein_norm(single, 2.0).value == magnitude

    x = FinVec.from_mapping({1: 1.0, 2: -0.5, 3: 0.5, 7: 2.0, 8: 0.25})
    scaled = x.scaled(magnitude)
    for p in (1.0, 1.5, 2.0, 3.0):
        assert lp_norm(scaled, p) == pytest.approx(magnitude * lp_norm(x, p), rel=1e-12, abs=0.0)
        value = schreier_norm(scaled, p).value
        assert value == pytest.approx(magnitude * schreier_norm(x, p).value, rel=1e-12, abs=0.0)
        assert value == pytest.approx(schreier_norm_oracle(scaled, p), rel=1e-12, abs=0.0)
        assert sup_norm(scaled) <= value
    for p in (1.5, 2.0, 3.0):
        value = baernstein_norm(scaled, p).value
        assert value == pytest.approx(magnitude * baernstein_norm(x, p).value, rel=1e-12, abs=0.0)
        assert value == pytest.approx(baernstein_norm_oracle(scaled, p), rel=1e-12, abs=0.0)


def test_baernstein_norm_with_a_large_exponent():
    x = FinVec.from_mapping({n: 1.0 for n in range(10, 50)})
    result = baernstein_norm(x, 500.0)
    assert math.isfinite(result.value)
    assert result.value >= sup_norm(x)


@pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 3.0])
def test_witnesses_reproduce_values(p):
    for trial in range(200):
        x = random_finvec(trial_rng(31, trial))
        result = schreier_norm(x, p)
        assert abs(mu_p(x, result.witness, p) - result.value) <= 1e-12 * result.value
        if p > 1.0:
            chained = baernstein_norm(x, p)
            assert abs(beta_p(x, chained.witness, p) - chained.value) <= 1e-12 * chained.value


def test_mu_p_decreases_in_p():
    rng = np.random.default_rng(17)
    grid = (1.0, 1.5, 2.0, 3.0)
    for _ in range(200):
        x = random_small_vector(rng, 60)
        start = int(rng.integers(1, 30))
        extra = rng.choice(np.arange(start + 1, start + 40), size=start - 1, replace=False)
        F = SchreierSet.of([start] + [int(n) for n in extra[: int(rng.integers(0, start))]])
        for p, q in itertools.combinations(grid, 2):
            assert mu_p(x, F, q) <= mu_p(x, F, p) * (1 + 1e-12)


def test_schreier_norms_decrease_in_p_and_sit_below_lp():
    rng = np.random.default_rng(23)
    grid = (1.0, 1.5, 2.0, 3.0)
    for _ in range(100):
        x = random_small_vector(rng, 40)
        values = {p: schreier_norm(x, p).value for p in grid}
        for p, q in itertools.combinations(grid, 2):
            assert values[q] <= values[p] * (1 + 1e-12)
        for p in grid:
            assert values[p] <= lp_norm(x, p) * (1 + 1e-12)


def test_norms_ignore_signs():
    rng = np.random.default_rng(29)
    for _ in range(100):
        x = random_small_vector(rng, 30)
        support = x.support()
        flipped = x.with_signs_flipped([n for n in support if rng.random() < 0.5])
        for p in (1.0, 2.0, 3.0):
            assert schreier_norm(flipped, p).value == schreier_norm(x, p).value
        for p in (1.5, 3.0):
            assert baernstein_norm(flipped, p).value == baernstein_norm(x, p).value
