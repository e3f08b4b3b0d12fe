"""Randomized checks of the inclusion inequalities and their supporting bounds."""

import csv
import logging
import math
from pathlib import Path
from typing import Iterable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field

from config.constants import (
    CHAIN_ORACLE_MAX_SUPPORT,
    IDENTITY_TOL,
    INCLUSION_ATOL,
    JAMESON_ATOL,
    MAX_DYADIC_DEPTH,
    ORACLE_RTOL,
    REARRANGEMENT_Q_GRID,
    SCHREIER_ORACLE_MAX_SUPPORT,
)
from norms.evaluator import decreasing_rearrangement, lp_norm, schreier_norm
from norms.oracle import baernstein_norm_oracle, schreier_norm_oracle
from norms.space_norm import norm_in_space
from seqvec.schreier import check_exponent, dyadic_block, mu_p
from seqvec.vectors import FinVec
from spaces.inclusion import inclusion_constant, jameson_constant
from spaces.labels import SpaceKind, SpaceLabel
from verify.sampling import (
    default_seed,
    dyadic_depth,
    random_decreasing,
    random_finvec,
    random_supported_in,
    trial_rng,
)

logger = logging.getLogger(__name__)


class TrialReport(BaseModel):
    """Summary of a batch of randomized trials of one inequality."""

    model_config = ConfigDict(frozen=True)

    check: str = Field(description="Which inequality was tested")
    source: Optional[SpaceLabel] = None
    target: Optional[SpaceLabel] = None
    constant: Optional[float] = Field(default=None, description="Asserted bound on the ratio")
    tolerance: float
    trials: int = Field(ge=0)
    violations: int = Field(ge=0)
    max_ratio: float = Field(description="Largest observed ||x||_Z / ||x||_Y")
    worst_input: Optional[FinVec] = None
    seed: int
    ratios: Tuple[float, ...] = Field(default=(), exclude=True)

    @computed_field
    @property
    def passed(self) -> bool:
        return self.violations == 0


class _Tally:
    """Running violation count and maximal ratio of a batch."""

    def __init__(self):
        self.violations = 0
        self.max_ratio = -math.inf
        self.worst: Optional[FinVec] = None
        self.ratios: List[float] = []

    def record(self, x: FinVec, ratio: float, violated: bool) -> None:
        self.ratios.append(ratio)
        if violated:
            self.violations += 1
        if ratio > self.max_ratio:
            self.max_ratio = ratio
            self.worst = x

    def report(self, **fields) -> TrialReport:
        return TrialReport(
            trials=len(self.ratios),
            violations=self.violations,
            max_ratio=self.max_ratio if self.ratios else 0.0,
            worst_input=self.worst,
            ratios=tuple(self.ratios),
            **fields,
        )


def run_inclusion_trials(
    Y: SpaceLabel, Z: SpaceLabel, trials: int, seed: Optional[int] = None
) -> TrialReport:
    """Test ||x||_Z <= C ||x||_Y + tol on random vectors, C from inclusion_constant.

    Raises:
        ValueError: If Y does not precede Z
    """
    answer = inclusion_constant(Y, Z)
    if not answer.comparable:
        raise ValueError(f"{Y} does not precede {Z}; no inclusion to test")
    seed = default_seed("trials", Y, Z) if seed is None else seed
    constant = answer.constant

    tally = _Tally()
    for trial in range(trials):
        x = random_finvec(trial_rng(seed, trial))
        source_norm = norm_in_space(Y, x)
        target_norm = norm_in_space(Z, x)
        tally.record(
            x, target_norm / source_norm, target_norm > constant * source_norm + INCLUSION_ATOL
        )

    report = tally.report(
        check="inclusion", source=Y, target=Z, constant=constant, tolerance=INCLUSION_ATOL,
        seed=seed,
    )
    logger.info("Inclusion %s -> %s: %d trials, %d violations, max ratio %.12g",
                Y, Z, report.trials, report.violations, report.max_ratio)
    return report


def jameson_violations(x: FinVec, p: float, q: float) -> List[str]:
    """Failed bounds of the dyadic-block argument for a decreasing non-negative x.

    x is first normalized to ||x||_{S_p} = 1. With F_n = [2^n, 2^(n+1)) the
    bounds are x(2^(n+1)) <= 2^(-n/p), mu_q(x, F_(n+1))^q <= 2^((p-q) n / p),
    and ||x||_q^q <= (2^(q/p) - 1) / (2^((q-p)/p) - 1); the decomposition
    ||x||_q^q = x(1)^q + sum_n mu_q(x, F_(n+1))^q is checked as well.
    """
    failures: List[str] = []
    norm = schreier_norm(x, p).value
    if norm == 0.0:
        return failures
    x = x.scaled(1.0 / norm)
    depth = dyadic_depth(x)

    blocks_q = []
    for n in range(depth):
        if x.coefficient(2 ** (n + 1)) > 2.0 ** (-n / p) + JAMESON_ATOL:
            failures.append(f"coordinate decay at n={n}")
        block_q = _block_power(x, n + 1, q)
        blocks_q.append(block_q)
        if block_q > (2.0 ** ((p - q) / p)) ** n + JAMESON_ATOL:
            failures.append(f"block bound at n={n}")

    lq_power = lp_norm(x, q) ** q
    bound = (2.0 ** (q / p) - 1.0) / (2.0 ** ((q - p) / p) - 1.0)
    if lq_power > bound + JAMESON_ATOL:
        failures.append("l_q bound")
    decomposed = abs(x.coefficient(1)) ** q + math.fsum(blocks_q)
    if abs(lq_power - decomposed) > IDENTITY_TOL * max(1.0, lq_power):
        failures.append("dyadic decomposition")
    return failures


def _block_power(x: FinVec, level: int, q: float) -> float:
    """mu_q(x, F_level)^q."""
    return mu_p(x, dyadic_block(level), q) ** q


def check_jameson(p: float, q: float, trials: int, seed: Optional[int] = None) -> TrialReport:
    """Dyadic-block bounds on random decreasing vectors supported on {1, ..., 2^K}, K <= 6.

    Raises:
        ValueError: Unless 1 <= p < q
    """
    constant = jameson_constant(p, q)
    seed = default_seed("jameson", p, q) if seed is None else seed

    tally = _Tally()
    for trial in range(trials):
        rng = trial_rng(seed, trial)
        depth = int(rng.integers(0, MAX_DYADIC_DEPTH + 1))
        x = random_decreasing(rng, depth)
        failures = jameson_violations(x, p, q)
        if failures:
            logger.debug("Trial %d failed: %s", trial, failures)
        ratio = lp_norm(x, q) / schreier_norm(x, p).value
        tally.record(x, ratio, bool(failures))

    return tally.report(
        check="jameson",
        source=SpaceLabel.sp(p),
        target=SpaceLabel.lp(q),
        constant=constant,
        tolerance=JAMESON_ATOL,
        seed=seed,
    )


def check_rearrangement(p: float, trials: int, seed: Optional[int] = None) -> TrialReport:
    """||x*||_{S_p} <= ||x||_{S_p} and ||x*||_q = ||x||_q for the decreasing rearrangement x*."""
    check_exponent(p)
    seed = default_seed("rearrangement", p) if seed is None else seed
    exponents = sorted(set(REARRANGEMENT_Q_GRID) | {p})

    tally = _Tally()
    for trial in range(trials):
        x = random_finvec(trial_rng(seed, trial))
        y = decreasing_rearrangement(x)
        original = schreier_norm(x, p).value
        rearranged = schreier_norm(y, p).value
        violated = rearranged > original + IDENTITY_TOL * max(1.0, original)
        for q in exponents:
            before, after = lp_norm(x, q), lp_norm(y, q)
            if abs(before - after) > IDENTITY_TOL * max(1.0, before):
                violated = True
        tally.record(x, rearranged / original, violated)

    return tally.report(
        check="rearrangement",
        source=SpaceLabel.sp(p),
        target=SpaceLabel.sp(p),
        constant=1.0,
        tolerance=IDENTITY_TOL,
        seed=seed,
    )


def run_oracle_check(
    label: SpaceLabel, max_support: int, trials: int, seed: Optional[int] = None
) -> TrialReport:
    """Fast norm against the brute-force oracle on vectors supported in {1, ..., max_support}.

    Raises:
        ValueError: For labels without an oracle or supports beyond the oracle limit
    """
    if label.kind is SpaceKind.SP:
        oracle, limit = schreier_norm_oracle, SCHREIER_ORACLE_MAX_SUPPORT
    elif label.kind is SpaceKind.BP:
        oracle, limit = baernstein_norm_oracle, CHAIN_ORACLE_MAX_SUPPORT
    else:
        raise ValueError(f"no brute-force oracle for {label}")
    if not 1 <= max_support <= limit:
        raise ValueError(f"max support must lie in 1..{limit} for {label}, got {max_support}")
    seed = default_seed("oracle", label, max_support) if seed is None else seed

    tally = _Tally()
    for trial in range(trials):
        x = random_supported_in(trial_rng(seed, trial), max_support)
        value = norm_in_space(label, x)
        expected = oracle(x, label.parameter)
        mismatch = abs(value - expected) > ORACLE_RTOL * max(abs(expected), 1e-300)
        tally.record(x, value / expected, mismatch)

    return tally.report(
        check="oracle", source=label, target=label, constant=1.0, tolerance=ORACLE_RTOL, seed=seed
    )


def merge_reports(reports: Iterable[TrialReport]) -> TrialReport:
    """Combine batches of the same check: violations add, max_ratio is the maximum."""
    batch = list(reports)
    if not batch:
        raise ValueError("nothing to merge")
    worst = max(batch, key=lambda report: report.max_ratio)
    return batch[0].model_copy(
        update={
            "trials": sum(report.trials for report in batch),
            "violations": sum(report.violations for report in batch),
            "max_ratio": worst.max_ratio,
            "worst_input": worst.worst_input,
            "ratios": tuple(ratio for report in batch for ratio in report.ratios),
        }
    )


def write_ratios_csv(report: TrialReport, path: Path) -> None:
    """Write (trial, ratio) rows for external plotting."""
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(["trial", "ratio"])
        for trial, ratio in enumerate(report.ratios):
            writer.writerow([trial, repr(ratio)])
