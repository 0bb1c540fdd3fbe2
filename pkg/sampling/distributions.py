"""
Distribution sources for pick_value.

A distribution source answers one question: for switch instance (s, i), what
are the outcomes and their sampling probabilities? Two sources exist:

- OriginalDistribution: the set_sw vector of the switch
- AdaptedDistribution: the set_sw vector reweighted by the Q-values of a
  QStore (see sampling/adaptation.py)

draw_categorical() turns a probability vector into one outcome index using a
single uniform draw from a numpy Generator.
"""
import numpy as np

from classes.errors import SamplerError
from sampling.adaptation import adapted_dist


class OriginalDistribution:

    def __init__(self, prog):
        self.prog = prog

    def vector(self, key):
        decl = self.prog.switch_decl(key.switch)
        return decl.outcomes, decl.probabilities


class AdaptedDistribution:

    def __init__(self, prog, store, floor=None):
        self.prog = prog
        self.store = store
        self.floor = floor

    def vector(self, key):
        decl = self.prog.switch_decl(key.switch)
        return decl.outcomes, adapted_dist(self.prog, self.store, key.switch, key.instance, self.floor)


class FixedDistribution:
    """Refuses to draw; used when every needed switch instance is already assigned."""

    def __init__(self, prog):
        self.prog = prog

    def vector(self, key):
        raise SamplerError(f"no outcome assigned for {key}")


def draw_categorical(probabilities, rng: np.random.Generator) -> int:
    u = rng.random()
    cumulative = 0.0
    last_nonzero = 0
    for index, p in enumerate(probabilities):
        if p <= 0.0:
            continue
        cumulative += p
        last_nonzero = index
        if u < cumulative:
            return index
    # round-off left u above the final cumulative sum
    return last_nonzero
