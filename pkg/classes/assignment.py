"""
Assignments and traces.

An Assignment is a partial map from switch instances to outcomes. It stands
for the set of possible worlds that agree with it, and it is the state of a
Markov chain. Assignments are treated as values: every operation here returns
a new Assignment and never mutates its argument.

A Trace is the ordered list of (switch, instance, outcome) triples one
evaluation recorded. Replaying it from the empty assignment rebuilds the
assignment the evaluation returned.

Text format, one entry per line:

    r(a, b)/0=t
"""
from __future__ import annotations

import math
from typing import NamedTuple

from classes.errors import UsageError
from classes.term import Term, format_term, is_ground


class SwitchInstance(NamedTuple):
    switch: Term
    instance: Term

    def __str__(self):
        return f"{format_term(self.switch)}/{format_term(self.instance)}"


class TraceEntry(NamedTuple):
    switch: Term
    instance: Term
    outcome: Term

    @property
    def key(self):
        return SwitchInstance(self.switch, self.instance)

    def __str__(self):
        return f"{format_term(self.switch)}/{format_term(self.instance)}={format_term(self.outcome)}"


class Assignment:
    __slots__ = ("_entries",)

    def __init__(self, entries=None):
        self._entries = dict(entries) if entries else {}

    @classmethod
    def wrap(cls, entries: dict):
        """Takes ownership of `entries` without copying."""
        assignment = cls.__new__(cls)
        assignment._entries = entries
        return assignment

    def get(self, key, default=None):
        return self._entries.get(key, default)

    def __getitem__(self, key):
        return self._entries[key]

    def __contains__(self, key):
        return key in self._entries

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def keys(self):
        return self._entries.keys()

    def items(self):
        return self._entries.items()

    def as_dict(self):
        return dict(self._entries)

    def __eq__(self, other):
        if not isinstance(other, Assignment):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __repr__(self):
        inner = ", ".join(f"{key}={format_term(value)}" for key, value in self._entries.items())
        return f"Assignment({{{inner}}})"

    def extended(self, key, outcome):
        entries = dict(self._entries)
        entries[key] = outcome
        return Assignment.wrap(entries)

    def union(self, other):
        """Joins two compatible assignments; entries of self come first."""
        entries = dict(self._entries)
        for key, outcome in other.items():
            current = entries.get(key)
            if current is not None and current != outcome:
                raise ValueError(f"assignments disagree on {key}")
            entries[key] = outcome
        return Assignment.wrap(entries)

    def to_text(self):
        return "".join(f"{TraceEntry(key.switch, key.instance, outcome)}\n" for key, outcome in self._entries.items())

    def __str__(self):
        return self.to_text()


EMPTY = Assignment()


class Trace:
    __slots__ = ("entries",)

    def __init__(self, entries=()):
        self.entries = tuple(entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __eq__(self, other):
        if not isinstance(other, Trace):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Trace({[str(entry) for entry in self.entries]})"

    def replay(self):
        entries = {}
        for entry in self.entries:
            current = entries.get(entry.key)
            if current is not None and current != entry.outcome:
                raise ValueError(f"trace sets {entry.key} to both {current} and {entry.outcome}")
            entries[entry.key] = entry.outcome
        return Assignment.wrap(entries)

    def deduplicated(self):
        """Keeps the first occurrence of every switch instance."""
        seen = set()
        kept = []
        for entry in self.entries:
            if entry.key not in seen:
                seen.add(entry.key)
                kept.append(entry)
        return Trace(kept)

    def to_text(self):
        return "".join(f"{entry}\n" for entry in self.entries)


# region Relations between assignments
def extends(sigma_prime: Assignment, sigma: Assignment) -> bool:
    """True if sigma_prime agrees with sigma wherever sigma is defined."""
    for key, outcome in sigma.items():
        if sigma_prime.get(key) != outcome:
            return False
    return True


def mutually_exclusive(sigma_a: Assignment, sigma_b: Assignment) -> bool:
    small, large = (sigma_a, sigma_b) if len(sigma_a) <= len(sigma_b) else (sigma_b, sigma_a)
    for key, outcome in small.items():
        other = large.get(key)
        if other is not None and other != outcome:
            return True
    return False


def compatible(sigma_a: Assignment, sigma_b: Assignment) -> bool:
    return not mutually_exclusive(sigma_a, sigma_b)


def prob(sigma: Assignment, prog) -> float:
    """Product of the original probabilities of every entry; 1 for the empty assignment."""
    factors = []
    for key, outcome in sigma.items():
        decl = prog.switch_decl(key.switch)
        factors.append(decl.probability_of(outcome))
    return math.prod(factors)


def forget(sigma: Assignment, keys) -> Assignment:
    keys = set(keys)
    if not keys:
        return sigma
    return Assignment.wrap({key: outcome for key, outcome in sigma.items() if key not in keys})


def partition(sigma: Assignment, sigma_prime: Assignment):
    """
    Splits sigma into three disjoint parts relative to sigma_prime:
    sigma1 where sigma_prime is undefined, sigma2 where both are defined but
    differ, sigma3 where they agree.
    """
    sigma1, sigma2, sigma3 = {}, {}, {}
    for key, outcome in sigma.items():
        other = sigma_prime.get(key)
        if other is None:
            sigma1[key] = outcome
        elif other != outcome:
            sigma2[key] = outcome
        else:
            sigma3[key] = outcome
    return Assignment.wrap(sigma1), Assignment.wrap(sigma2), Assignment.wrap(sigma3)
# endregion


def assignment_from_text(text: str) -> Assignment:
    """Inverse of Assignment.to_text(); blank lines and `%` comments are skipped."""
    from program_parsing.parser import parse_goal

    entries = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        left, eq, outcome_text = line.rpartition("=")
        switch_text, slash, instance_text = left.rpartition("/")
        if not eq or not slash:
            raise UsageError(f"line {number}: expected switch/instance=outcome, got {raw!r}")
        parts = [parse_goal(piece) for piece in (switch_text, instance_text, outcome_text)]
        if not all(is_ground(part) for part in parts):
            raise UsageError(f"line {number}: assignment entries must be ground")
        entries[SwitchInstance(parts[0], parts[1])] = parts[2]
    return Assignment.wrap(entries)
