"""
Exact probabilities by enumerating complete worlds.

A world fixes an outcome for every switch instance the program can consult.
The instances are collected from the msw literals of the program and of the
goals: a literal with a ground switch contributes that switch, a literal with
a non-ground switch contributes every switch with a distribution that unifies
with it. Instance arguments must be ground.

Each world is evaluated without randomness and its probability is the
product of its outcomes' probabilities. This oracle shares no exploration
logic with the evaluation-tree oracle and is used to cross-check it.
"""
import itertools
import logging
import math

import numpy as np

from classes.assignment import Assignment, SwitchInstance
from classes.errors import EvaluationError, EvidenceUnsatisfiable, WorldLimitExceeded
from classes.exact_result import ExactResult
from classes.program import is_msw
from classes.term import Compound, format_term, is_ground
from resolution.sampling_evaluator import sample_eval
from resolution.unification import unify
from sampling.distributions import FixedDistribution
from utilities.settings import WORLD_LIMIT

logger = logging.getLogger(__name__)


def _msw_literals(term):
    if is_msw(term):
        yield term
    elif isinstance(term, Compound) and term.functor in (",", ";") and len(term.args) == 2:
        for arg in term.args:
            yield from _msw_literals(arg)


def world_switch_instances(prog, goals=()):
    """Switch instances a world must fix, in first-seen order."""
    literals = []
    for clause in prog.clauses:
        for goal in clause.body:
            literals.extend(_msw_literals(goal))
    for goal in goals:
        literals.extend(_msw_literals(goal))

    keys = {}
    for literal in literals:
        switch, instance = literal.args[0], literal.args[1]
        if not is_ground(instance):
            raise EvaluationError(
                f"world enumeration needs ground msw instances, got {format_term(instance)}")
        if is_ground(switch):
            if switch in prog.distributions:
                keys.setdefault(SwitchInstance(switch, instance), None)
            continue
        for name in prog.distributions:
            if unify(switch, name) is not None:
                keys.setdefault(SwitchInstance(name, instance), None)
    return list(keys)


def enumerate_worlds(prog, keys, world_limit=None):
    """Yields (world, probability) for every world with positive probability."""
    world_limit = world_limit or WORLD_LIMIT
    choices = []
    count = 1
    for key in keys:
        decl = prog.switch_decl(key.switch)
        options = [(outcome, p) for outcome, p in zip(decl.outcomes, decl.probabilities) if p > 0.0]
        choices.append(options)
        count *= len(options)
    if count > world_limit:
        raise WorldLimitExceeded(f"{count} worlds exceed the limit of {world_limit}")
    for combination in itertools.product(*choices):
        world = Assignment.wrap({key: outcome for key, (outcome, _) in zip(keys, combination)})
        yield world, math.prod(p for _, p in combination)


def world_prob(prog, goal, world_limit=None, step_limit=None) -> float:
    keys = world_switch_instances(prog, [goal])
    dist = FixedDistribution(prog)
    rng = np.random.default_rng(0)
    terms = []
    for world, p in enumerate_worlds(prog, keys, world_limit):
        if sample_eval(prog, goal, world, dist, rng, step_limit).answer:
            terms.append(p)
    return math.fsum(terms)


def world_conditional(prog, query, evidence, world_limit=None, step_limit=None) -> ExactResult:
    keys = world_switch_instances(prog, [query, evidence])
    dist = FixedDistribution(prog)
    rng = np.random.default_rng(0)
    query_terms, evidence_terms, joint_terms = [], [], []
    worlds = 0
    for world, p in enumerate_worlds(prog, keys, world_limit):
        worlds += 1
        q_holds = sample_eval(prog, query, world, dist, rng, step_limit).answer
        e_holds = sample_eval(prog, evidence, world, dist, rng, step_limit).answer
        if q_holds:
            query_terms.append(p)
        if e_holds:
            evidence_terms.append(p)
            if q_holds:
                joint_terms.append(p)
    p_evidence = math.fsum(evidence_terms)
    if p_evidence <= 0.0:
        raise EvidenceUnsatisfiable(f"evidence {format_term(evidence)} has probability 0")
    p_joint = math.fsum(joint_terms)
    logger.debug("enumerated %d worlds over %d switch instances", worlds, len(keys))
    return ExactResult(math.fsum(query_terms), p_evidence, p_joint, min(1.0, p_joint / p_evidence), worlds)
