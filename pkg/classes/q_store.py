"""
Q-values for adaptive proposals.

A QStore keeps, for every (switch, instance, outcome) it has seen, a Q-value
in [0, 1], the total reward t delivered to it and the number of deliveries c.
Unseen outcomes have Q = 1, t = 0, c = 0.

Two update rules:

- AVERAGING: Q = t / c, the mean of every reward delivered
- LAST_REWARD: Q = the most recent reward (c and t are still kept for reporting)

A store can optionally keep a per-key reward log, used by the reward
monotonicity monitor and by tests that recompute averages from scratch.
"""
from enum import Enum

from classes.assignment import SwitchInstance
from classes.term import format_term


class QMode(Enum):
    AVERAGING = "averaging"
    LAST_REWARD = "last-reward"


class QEntry:
    __slots__ = ("q", "t", "c")

    def __init__(self, q=1.0, t=0.0, c=0):
        self.q = q
        self.t = t
        self.c = c

    def copy(self):
        return QEntry(self.q, self.t, self.c)

    def __repr__(self):
        return f"QEntry(q={self.q}, t={self.t}, c={self.c})"


class QStore:

    def __init__(self, mode=QMode.AVERAGING, keep_log=False, frozen=False):
        self.mode = mode
        self.keep_log = keep_log
        self.frozen = frozen
        self.entries = {}
        self.reward_log = {}
        self.updates = 0
        self._vector_cache = {}

    def __len__(self):
        return sum(len(outcomes) for outcomes in self.entries.values())

    def has_entries(self, key: SwitchInstance) -> bool:
        return key in self.entries

    def entry(self, key: SwitchInstance, outcome):
        found = self.entries.get(key, {}).get(outcome)
        return found if found is not None else QEntry()

    def q(self, key: SwitchInstance, outcome) -> float:
        found = self.entries.get(key, {}).get(outcome)
        return found.q if found is not None else 1.0

    def update(self, key: SwitchInstance, outcome, reward: float):
        """Delivers one reward to (key, outcome) and returns the new Q."""
        if self.frozen:
            return self.q(key, outcome)
        outcomes = self.entries.setdefault(key, {})
        entry = outcomes.get(outcome)
        if entry is None:
            entry = outcomes[outcome] = QEntry()
        entry.t += reward
        entry.c += 1
        if self.mode is QMode.AVERAGING:
            entry.q = entry.t / entry.c
        else:
            entry.q = reward
        self.updates += 1
        self._vector_cache.pop(key, None)
        if self.keep_log:
            self.reward_log.setdefault((key, outcome), []).append(reward)
        return entry.q

    def expectation(self, key: SwitchInstance, outcomes, probabilities) -> float:
        """Sum over outcomes of P(v) * Q(key, v)."""
        return sum(p * self.q(key, outcome) for outcome, p in zip(outcomes, probabilities))

    def cached_vector(self, key):
        return self._vector_cache.get(key)

    def cache_vector(self, key, vector):
        self._vector_cache[key] = vector

    def copy(self):
        clone = QStore(self.mode, self.keep_log, self.frozen)
        clone.entries = {key: {outcome: entry.copy() for outcome, entry in outcomes.items()}
                         for key, outcomes in self.entries.items()}
        clone.reward_log = {key: list(rewards) for key, rewards in self.reward_log.items()}
        clone.updates = self.updates
        return clone

    def rows(self):
        """(switch, instance, outcome, q, c, t) tuples in first-seen order."""
        for key, outcomes in self.entries.items():
            for outcome, entry in outcomes.items():
                yield (format_term(key.switch), format_term(key.instance), format_term(outcome),
                       entry.q, entry.c, entry.t)

    def __str__(self):
        return (f"QStore(\n"
                f"  mode={self.mode.value},\n"
                f"  switch_instances={len(self.entries)},\n"
                f"  outcomes={len(self)},\n"
                f"  updates={self.updates},\n"
                f"  frozen={self.frozen}\n"
                f")")
