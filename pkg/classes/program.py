"""
Program representation: clauses, `values` declarations and `set_sw`
distributions, with the load-time invariants enforced in one place.

Program.create() is the only constructor the parser and the benchmark
generators use. It checks:

- clause heads are not `msw` literals
- values patterns are pairwise non-overlapping and list distinct ground outcomes
- every set_sw names a ground switch matched by exactly one values pattern
- the probability vector has the declared length, is non-negative and sums to
  1 within PROBABILITY_TOLERANCE
- no switch gets two set_sw directives
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from classes.errors import MissingDistributionError, ProgramError, UnknownSwitchError
from classes.term import Compound, Term, format_term, indicator, is_ground, offset_vars
from resolution.unification import unify

PROBABILITY_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Clause:
    head: Term
    body: tuple = ()
    var_count: int = 0

    @property
    def is_fact(self):
        return not self.body


@dataclass(frozen=True)
class ValuesDecl:
    pattern: Term
    outcomes: tuple
    var_count: int = 0


@dataclass(frozen=True)
class SwitchDecl:
    pattern: Term
    name: Term
    outcomes: tuple
    probabilities: tuple

    def probability_of(self, outcome):
        return self.probabilities[self.outcomes.index(outcome)]


@dataclass(frozen=True)
class Program:
    clauses: tuple = ()
    values: tuple = ()
    distributions: dict = field(default_factory=dict)
    index: dict = field(default_factory=dict, compare=False, repr=False)
    switches: dict = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def create(cls, clauses=(), values=(), settings=()):
        """
        clauses: Clause objects in textual order
        values: ValuesDecl objects
        settings: (ground switch term, probability sequence) pairs in textual order
        """
        clauses = tuple(clauses)
        values = tuple(values)
        for clause in clauses:
            if indicator(clause.head) in (("msw", 2), ("msw", 3)):
                raise ProgramError(f"clause head may not be an msw literal: {format_term(clause.head)}")
        _check_values(values)

        distributions = {}
        switches = {}
        for name, probabilities in settings:
            if not is_ground(name):
                raise ProgramError(f"set_sw needs a ground switch name, got {format_term(name)}")
            if name in distributions:
                raise ProgramError(f"duplicate set_sw for switch {format_term(name)}")
            decl = _matching_values(values, name)
            if decl is None:
                raise ProgramError(f"set_sw for {format_term(name)} has no matching values declaration")
            probabilities = tuple(float(p) for p in probabilities)
            _check_probabilities(name, decl.outcomes, probabilities)
            distributions[name] = probabilities
            switches[name] = SwitchDecl(decl.pattern, name, decl.outcomes, probabilities)

        index = {}
        for clause in clauses:
            index.setdefault(indicator(clause.head), []).append(clause)
        index = {key: tuple(found) for key, found in index.items()}
        return cls(clauses, values, distributions, index, switches)

    def clauses_for(self, key):
        return self.index.get(key, ())

    def switch_decl(self, switch: Term) -> SwitchDecl:
        decl = self.switches.get(switch)
        if decl is not None:
            return decl
        if _matching_values(self.values, switch) is not None:
            raise MissingDistributionError(f"switch {format_term(switch)} has no set_sw distribution")
        raise UnknownSwitchError(f"unknown switch {format_term(switch)}")

    def fact_count(self):
        return sum(1 for clause in self.clauses if clause.is_fact)

    def rule_count(self):
        return sum(1 for clause in self.clauses if not clause.is_fact)


def switch_outcomes(prog: Program, switch: Term):
    """(outcomes, probabilities) of a ground switch."""
    decl = prog.switch_decl(switch)
    return decl.outcomes, decl.probabilities


def _matching_values(values, name):
    for decl in values:
        if unify(decl.pattern, name) is not None:
            return decl
    return None


def _check_values(values):
    for decl in values:
        if not decl.outcomes:
            raise ProgramError(f"values for {format_term(decl.pattern)} declares no outcomes")
        for outcome in decl.outcomes:
            if not is_ground(outcome):
                raise ProgramError(f"outcome {format_term(outcome)} of {format_term(decl.pattern)} is not ground")
        if len(set(decl.outcomes)) != len(decl.outcomes):
            raise ProgramError(f"values for {format_term(decl.pattern)} repeats an outcome")
        if indicator(decl.pattern) is None:
            raise ProgramError(f"values pattern {format_term(decl.pattern)} is not an atom or compound")
    for i, first in enumerate(values):
        for second in values[i + 1:]:
            renamed = offset_vars(second.pattern, first.var_count)
            if unify(first.pattern, renamed) is not None:
                raise ProgramError(
                    f"values patterns {format_term(first.pattern)} and {format_term(second.pattern)} overlap")


def _check_probabilities(name, outcomes, probabilities):
    label = format_term(name)
    if len(probabilities) != len(outcomes):
        raise ProgramError(
            f"set_sw for {label} gives {len(probabilities)} probabilities for {len(outcomes)} outcomes")
    if any(p < 0 or math.isnan(p) for p in probabilities):
        raise ProgramError(f"set_sw for {label} has a negative probability")
    total = math.fsum(probabilities)
    if abs(total - 1.0) > PROBABILITY_TOLERANCE:
        raise ProgramError(f"probabilities for {label} sum to {total:.12g}, not 1")


def is_msw(term: Term) -> bool:
    return isinstance(term, Compound) and term.functor == "msw" and len(term.args) == 3
