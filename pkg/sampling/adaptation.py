"""
Reward propagation and adapted distributions.

adapt(trace, reward, store, prog) walks the trace from its last triple to its
first. The last triple gets the raw 0/1 reward. After each triple is updated,
the reward handed to the triple before it is the expectation of the updated
switch instance's Q-values under its original distribution, with unseen
outcomes counting Q = 1.

adapted_dist() reweights a switch instance's original distribution by its
Q-values, floored at Q_FLOOR so no outcome with positive prior probability
becomes impossible.
"""
import logging
import math

from classes.assignment import SwitchInstance
from utilities.settings import Q_FLOOR

logger = logging.getLogger(__name__)

MONOTONICITY_TOLERANCE = 1e-12


def adapt(trace, reward, store, prog):
    """Applies one evaluation's reward to every triple of its trace; returns the store."""
    r = float(reward)
    for entry in reversed(trace.entries):
        key = entry.key
        store.update(key, entry.outcome, r)
        decl = prog.switch_decl(key.switch)
        r = store.expectation(key, decl.outcomes, decl.probabilities)
    return store


def adapted_dist(prog, store, switch, instance, floor=None):
    """
    Probability vector of (switch, instance) proportional to P(v) * max(Q(v), floor).
    Returns the original vector object itself when the store has nothing for
    this switch instance.
    """
    decl = prog.switch_decl(switch)
    key = SwitchInstance(switch, instance)
    if not store.has_entries(key):
        return decl.probabilities
    floor = Q_FLOOR if floor is None else floor
    cached = store.cached_vector(key)
    if cached is not None and cached[0] == floor:
        return cached[1]
    weights = [p * max(store.q(key, outcome), floor) for outcome, p in zip(decl.outcomes, decl.probabilities)]
    total = math.fsum(weights)
    vector = tuple(weight / total for weight in weights)
    store.cache_vector(key, (floor, vector))
    return vector


def adaptation_increment_bound(before, after, key, outcome):
    """
    Checks the diminishing-adaptation bound for one update of (key, outcome):
    |Q_after - Q_before| <= 1 / (c_before + 1). Returns (holds, delta, bound).
    """
    entry = before.entry(key, outcome)
    delta = after.q(key, outcome) - entry.q
    bound = 1.0 / (entry.c + 1)
    return abs(delta) <= bound + 1e-15, delta, bound


def reward_monotonicity_violations(store, tolerance=MONOTONICITY_TOLERANCE):
    """
    Counts places where a key's logged rewards increase. On a Markovian program
    in last-reward mode they should never do so. Returns {(key, outcome): count}.
    """
    violations = {}
    for key, rewards in store.reward_log.items():
        count = sum(1 for earlier, later in zip(rewards, rewards[1:]) if later > earlier + tolerance)
        if count:
            violations[key] = count
    if violations:
        logger.info("reward monotonicity violated for %d switch outcomes", len(violations))
    return violations
