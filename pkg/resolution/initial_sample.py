"""
initial_sample(): a randomized backtracking search for one derivation of the
evidence, used to start a chain in a state where the evidence holds.

Unlike the sampling evaluator this is a search over worlds: the order of
matching clauses and of switch outcomes is shuffled at every choice point,
and outcomes chosen on a failed branch are undone when the search backtracks.
Outcomes with probability zero are never chosen.
"""
import logging

import numpy as np

from classes.assignment import Assignment
from classes.errors import EvaluationError, EvidenceUnsatisfiable
from classes.term import format_term, is_ground
from resolution.sld_engine import Resolver
from utilities.settings import STEP_LIMIT

logger = logging.getLogger(__name__)


class RandomizedSearch(Resolver):

    def __init__(self, prog, rng, step_limit):
        super().__init__(prog, step_limit)
        self.rng = rng

    def _msw_outcomes(self, key):
        outcome = self.world.get(key)
        if outcome is not None:
            return [outcome]
        decl = self.prog.switch_decl(key.switch)
        possible = [value for value, p in zip(decl.outcomes, decl.probabilities) if p > 0.0]
        return [possible[index] for index in self.rng.permutation(len(possible))]

    def _record_outcome(self, key, outcome):
        if key not in self.world:
            self.world[key] = outcome
            self.world_trail.append(key)

    def _shuffle_clauses(self, clauses):
        if len(clauses) < 2:
            return clauses
        return [clauses[index] for index in self.rng.permutation(len(clauses))]


def initial_sample(prog, evidence, rng: np.random.Generator, step_limit=None) -> Assignment:
    if not is_ground(evidence):
        raise EvaluationError(f"evidence must be ground: {format_term(evidence)}")
    search = RandomizedSearch(prog, rng, step_limit or STEP_LIMIT)
    if not search.solve(evidence):
        raise EvidenceUnsatisfiable(f"evidence {format_term(evidence)} has no derivation in any world")
    logger.debug("initial sample found after %d steps with %d switch instances", search.steps, len(search.world))
    return Assignment(search.world)
