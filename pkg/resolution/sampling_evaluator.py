"""
The sampling evaluator: resolution to the first derivation that samples
switch outcomes lazily as msw literals are reached.

sample_eval(prog, goal, sigma, dist, rng) returns an EvalResult with

- answer: True on success, False on failure
- assignment: the entries touched during evaluation, each either copied
  from sigma or freshly drawn from dist
- trace: one (switch, instance, outcome) triple per msw access, lookups included

A drawn outcome is frozen for the rest of the call: backtracking over clauses
never re-samples it.
"""
from dataclasses import dataclass

import numpy as np

from classes.assignment import Assignment, Trace, TraceEntry
from classes.errors import EvaluationError
from classes.term import format_term, is_ground
from resolution.sld_engine import Resolver
from sampling.distributions import draw_categorical
from utilities.settings import STEP_LIMIT


@dataclass(frozen=True)
class EvalResult:
    answer: bool
    assignment: Assignment
    trace: Trace


def pick_value(sigma: Assignment, key, prog, dist, rng: np.random.Generator):
    """
    Returns (outcome, sigma') where sigma' extends sigma. An outcome already in
    sigma is returned without touching rng.
    """
    outcome = sigma.get(key)
    if outcome is not None:
        return outcome, sigma
    prog.switch_decl(key.switch)
    outcomes, probabilities = dist.vector(key)
    outcome = outcomes[draw_categorical(probabilities, rng)]
    return outcome, sigma.extended(key, outcome)


class _SamplingResolver(Resolver):

    def __init__(self, prog, sigma, dist, rng, step_limit):
        super().__init__(prog, step_limit)
        self.sigma = sigma
        self.dist = dist
        self.rng = rng
        self.sigma_prime = {}
        self.trace = []

    def _msw_outcomes(self, key):
        outcome = self.sigma_prime.get(key)
        if outcome is None:
            outcome = self.sigma.get(key)
            if outcome is None:
                self.prog.switch_decl(key.switch)
                outcomes, probabilities = self.dist.vector(key)
                outcome = outcomes[draw_categorical(probabilities, self.rng)]
            else:
                self.prog.switch_decl(key.switch)
            self.sigma_prime[key] = outcome
        self.trace.append(TraceEntry(key.switch, key.instance, outcome))
        return [outcome]


def sample_eval(prog, goal, sigma: Assignment, dist, rng: np.random.Generator, step_limit=None) -> EvalResult:
    if not is_ground(goal):
        raise EvaluationError(f"goal must be ground: {format_term(goal)}")
    resolver = _SamplingResolver(prog, sigma, dist, rng, step_limit or STEP_LIMIT)
    answer = resolver.solve(goal)
    return EvalResult(answer, Assignment.wrap(resolver.sigma_prime), Trace(resolver.trace))
