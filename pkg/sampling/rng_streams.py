"""
Seeded random streams for one chain.

A chain seed is split with numpy's SeedSequence into five independent child
streams, always spawned in this order:

0. init        the randomized search for the initial state
1. proposal    which switch instances resample() forgets
2. evaluator   fresh outcome draws inside sample_eval
3. acceptance  the uniform compared against the acceptance probability
4. debug       re-evaluation of the evidence when debug checks are on

Turning adaptation on or off changes only what the evaluator stream draws,
never how many numbers the proposal and acceptance streams consume.
"""
from typing import NamedTuple

import numpy as np


class ChainStreams(NamedTuple):
    init: np.random.Generator
    proposal: np.random.Generator
    evaluator: np.random.Generator
    acceptance: np.random.Generator
    debug: np.random.Generator


def chain_streams(seed: int) -> ChainStreams:
    children = np.random.SeedSequence(seed).spawn(len(ChainStreams._fields))
    return ChainStreams(*(np.random.default_rng(child) for child in children))
