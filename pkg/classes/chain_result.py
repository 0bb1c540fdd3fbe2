"""
Results of one Markov chain.

ChainRow is one post-burn-in iteration: the running estimate after it, whether
the proposal was accepted, whether the proposal's evidence evaluation
succeeded, the post-burn-in evidence rejections so far and the elapsed
microseconds since the chain started.
"""
from dataclasses import dataclass, field
from typing import NamedTuple


class ChainRow(NamedTuple):
    iteration: int
    estimate: float
    accepted: bool
    evidence_ok: bool
    evidence_rejections: int
    elapsed_us: int

    def to_csv(self):
        return [self.iteration, f"{self.estimate:.10g}", int(self.accepted), int(self.evidence_ok),
                self.evidence_rejections, self.elapsed_us]


@dataclass
class ChainResult:
    estimate: float
    rows: list
    evidence_rejections: int
    accepted: int = 0
    steps: int = 0
    seed: int = 0
    query_indicators: list = field(default_factory=list, repr=False)
    store: object = field(default=None, repr=False)

    @property
    def acceptance_rate(self):
        return self.accepted / self.steps if self.steps else 0.0

    @property
    def rejection_rate(self):
        return self.evidence_rejections / self.steps if self.steps else 0.0

    def to_dict(self):
        return {
            'estimate': self.estimate,
            'steps': self.steps,
            'accepted': self.accepted,
            'evidence_rejections': self.evidence_rejections,
            'acceptance_rate': self.acceptance_rate,
            'seed': self.seed
        }


@dataclass
class MultiChainResult:
    chains: list
    estimate: float
    spread: float
    r_hat: float

    def to_dict(self):
        return {
            'estimate': self.estimate,
            'spread': self.spread,
            'r_hat': self.r_hat,
            'chains': [chain.to_dict() for chain in self.chains]
        }
