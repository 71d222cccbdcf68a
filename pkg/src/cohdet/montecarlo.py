"""Seeded per-photon simulation used to validate the analytic error rates.

Each registered photon is one independent trial: draw the true hypothesis
from the prior, draw the click pattern from its event table, apply the
decision rule.  Streams come from a counter-based generator so a run is
bit-reproducible from its seed, sharded deterministically so large photon
budgets can be split without changing the result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .spade import GAUSSIAN_CLICK, NONGAUSSIAN_CLICK, DetectorEvent, Hypothesis, decide, event_probs, spade_error
from .states import ScenarioParams

#: Trials per RNG shard; each shard owns an independent substream.
SHARD_SIZE = 1 << 20


@dataclass(frozen=True)
class TrialConfig:
    """One simulation request.

    epsilon, when set, is the mean photon number per emission attempt: most
    attempts then yield vacuum and are discarded before n_photons one-photon
    trials are registered.  It is off by default because the analytic rates
    condition on registered photons anyway.
    """

    params: ScenarioParams
    n_photons: int
    seed: int
    epsilon: float | None = None

    def __post_init__(self) -> None:
        if int(self.n_photons) != self.n_photons or self.n_photons < 1:
            raise DomainError(f"n_photons must be a positive integer, got {self.n_photons!r}")
        if int(self.seed) != self.seed or self.seed < 0:
            raise DomainError(f"seed must be a nonnegative integer, got {self.seed!r}")
        if self.epsilon is not None:
            if not math.isfinite(self.epsilon) or not 0.0 < self.epsilon <= 0.1:
                raise DomainError(
                    f"epsilon must lie in (0, 0.1] (weak-source regime), got {self.epsilon!r}"
                )


@dataclass(frozen=True)
class EmpiricalResult:
    """Aggregated outcome of a simulation run.

    z_score compares the empirical error rate against the analytic one
    using the analytic binomial standard error, so it tests a known null.
    n_attempts is the simulated number of emission attempts and is only
    set when vacuum modelling is enabled.
    """

    n_trials: int
    n_errors: int
    error_rate: float
    std_err: float
    analytic_p_err: float
    z_score: float
    n_attempts: int | None = None


def _stream(seed: int, *key: int) -> np.random.Generator:
    """Independent substream (seed, key) of the counter-based generator."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy=seed, spawn_key=key)))


def sample_trial(
    params: ScenarioParams, rng: np.random.Generator
) -> tuple[Hypothesis, DetectorEvent, Hypothesis]:
    """Draw one registered photon: (true hypothesis, event, decision)."""
    q2 = event_probs(Hypothesis.H2, params.delta, params.c).p_on_off
    truth = Hypothesis.H2 if rng.random() < params.p else Hypothesis.H1
    gaussian_prob = q2 if truth is Hypothesis.H2 else 1.0
    event = GAUSSIAN_CLICK if rng.random() < gaussian_prob else NONGAUSSIAN_CLICK
    return truth, event, decide(event)


def run_simulation(config: TrialConfig) -> EmpiricalResult:
    """Run config.n_photons independent trials and compare against the
    analytic error rate.

    Identical configs give bit-identical results.  Trials are drawn in
    SHARD_SIZE blocks, one substream per block; the vacuum attempt count
    uses its own substream, so enabling epsilon leaves every registered
    trial outcome unchanged.
    """
    params = config.params
    q2 = event_probs(Hypothesis.H2, params.delta, params.c).p_on_off

    n_errors = 0
    remaining = config.n_photons
    shard = 0
    while remaining > 0:
        block = min(remaining, SHARD_SIZE)
        rng = _stream(config.seed, 0, shard)
        u_truth = rng.random(block)
        u_event = rng.random(block)
        # The rule only errs when the second source exists and the photon
        # still lands in the Gaussian mode.
        n_errors += int(np.count_nonzero((u_truth < params.p) & (u_event < q2)))
        remaining -= block
        shard += 1

    rate = spade_error(params.delta, params.c, params.p)
    error_rate = n_errors / config.n_photons
    std_err = math.sqrt(rate * (1.0 - rate) / config.n_photons)
    if std_err > 0.0:
        z_score = (error_rate - rate) / std_err
    else:
        z_score = 0.0 if error_rate == rate else math.copysign(math.inf, error_rate - rate)

    n_attempts = None
    if config.epsilon is not None:
        vacuum_rng = _stream(config.seed, 1)
        failures = int(vacuum_rng.negative_binomial(config.n_photons, config.epsilon))
        n_attempts = config.n_photons + failures

    return EmpiricalResult(
        n_trials=config.n_photons,
        n_errors=n_errors,
        error_rate=error_rate,
        std_err=std_err,
        analytic_p_err=rate,
        z_score=z_score,
        n_attempts=n_attempts,
    )
