"""
Adaptive independent sampling for programs with Markovian evaluation structure.

Every sample starts from the empty assignment. The evidence is evaluated with
the last-reward adapted distribution as proposal and its trace is rewarded
with 1 or 0. When the evidence holds, the query is evaluated on the evidence
assignment, drawing any new switch instance from its original distribution.

The estimate is (#samples where e and q hold) / (#samples where e holds). No
importance weights are applied.
"""
import logging
from dataclasses import dataclass, field

import numpy as np

from classes.assignment import Assignment
from classes.errors import NoConsistentSamples, UsageError
from classes.q_store import QMode, QStore
from classes.term import format_term
from resolution.sampling_evaluator import sample_eval
from sampling.adaptation import adapt, reward_monotonicity_violations
from sampling.distributions import AdaptedDistribution, OriginalDistribution
from sampling.rng_streams import chain_streams

logger = logging.getLogger(__name__)


@dataclass
class IndependentResult:
    estimate: float
    samples: int
    consistent: int
    both: int
    monotonicity_violations: dict = field(default_factory=dict)
    store: object = field(default=None, repr=False)

    def to_dict(self):
        return {
            'estimate': self.estimate,
            'samples': self.samples,
            'consistent': self.consistent,
            'both': self.both,
            'monotonicity_violations': sum(self.monotonicity_violations.values())
        }


def independent_sampler(prog, query, evidence, samples, cfg) -> IndependentResult:
    if samples <= 0:
        raise UsageError(f"number of samples must be positive, got {samples}")
    streams = chain_streams(cfg.seed)
    store = QStore(QMode.LAST_REWARD, keep_log=True, frozen=cfg.freeze_q)
    proposal = AdaptedDistribution(prog, store, cfg.q_floor)
    original = OriginalDistribution(prog)
    rng: np.random.Generator = streams.evaluator

    consistent = 0
    both = 0
    for _ in range(samples):
        e_result = sample_eval(prog, evidence, Assignment(), proposal, rng, cfg.step_limit)
        trace = e_result.trace.deduplicated() if cfg.trace_dedup else e_result.trace
        adapt(trace, 1 if e_result.answer else 0, store, prog)
        if not e_result.answer:
            continue
        consistent += 1
        q_result = sample_eval(prog, query, e_result.assignment, original, rng, cfg.step_limit)
        if q_result.answer:
            both += 1

    if consistent == 0:
        raise NoConsistentSamples(
            f"no consistent samples for evidence {format_term(evidence)}; cannot estimate")
    violations = reward_monotonicity_violations(store)
    estimate = both / consistent
    logger.info("independent sampler: %d of %d samples consistent, estimate %.6f", consistent, samples, estimate)
    return IndependentResult(estimate, samples, consistent, both, violations, store)
