"""
Exact probabilities by exhaustive exploration of the evaluation tree.

The sampling evaluator is rerun with a distribution source that, instead of
drawing, stops the evaluation and reports which switch instance it needs.
The explorer then branches on every outcome of that instance with positive
probability and reruns each branch with the extended assignment. A run that
finishes without needing a new draw is a leaf.

Leaves are pairwise mutually exclusive and together cover every world, so
summing the probabilities of the success leaves gives the exact probability.
Sums use math.fsum.
"""
import logging
import math

import numpy as np

from classes.assignment import Assignment, prob
from classes.errors import BranchLimitExceeded, EvidenceUnsatisfiable
from classes.exact_result import ExactResult
from classes.term import format_term
from resolution.sampling_evaluator import sample_eval
from utilities.settings import BRANCH_LIMIT

logger = logging.getLogger(__name__)


class _NeedsOutcome(Exception):
    def __init__(self, key):
        super().__init__(str(key))
        self.key = key


class _BranchingDistribution:
    def vector(self, key):
        raise _NeedsOutcome(key)


def evaluation_leaves(prog, goal, base=None, branch_limit=None, step_limit=None):
    """
    Every leaf of goal's evaluation tree below `base`, as (answer, path) pairs in
    depth-first order. `path` is base extended with the outcomes chosen on the
    way to the leaf.
    """
    branch_limit = branch_limit or BRANCH_LIMIT
    dist = _BranchingDistribution()
    # the evaluator never draws from this generator
    rng = np.random.default_rng(0)
    leaves = []
    stack = [base if base is not None else Assignment()]
    visited = 0
    while stack:
        path = stack.pop()
        visited += 1
        if visited > branch_limit:
            raise BranchLimitExceeded(
                f"evaluation tree of {format_term(goal)} has more than {branch_limit} nodes")
        try:
            result = sample_eval(prog, goal, path, dist, rng, step_limit)
        except _NeedsOutcome as needed:
            decl = prog.switch_decl(needed.key.switch)
            branches = [path.extended(needed.key, outcome)
                        for outcome, p in zip(decl.outcomes, decl.probabilities) if p > 0.0]
            stack.extend(reversed(branches))
            continue
        leaves.append((result.answer, path))
    logger.debug("evaluation tree of %s: %d leaves, %d nodes", format_term(goal), len(leaves), visited)
    return leaves


def exact_prob(prog, goal, branch_limit=None, step_limit=None) -> float:
    leaves = evaluation_leaves(prog, goal, None, branch_limit, step_limit)
    return math.fsum(prob(path, prog) for answer, path in leaves if answer)


def exact_prob_failure(prog, goal, branch_limit=None, step_limit=None) -> float:
    leaves = evaluation_leaves(prog, goal, None, branch_limit, step_limit)
    return math.fsum(prob(path, prog) for answer, path in leaves if not answer)


def exact_conditional(prog, query, evidence, branch_limit=None, step_limit=None) -> ExactResult:
    query_leaves = evaluation_leaves(prog, query, None, branch_limit, step_limit)
    p_query = math.fsum(prob(path, prog) for answer, path in query_leaves if answer)

    evidence_leaves = evaluation_leaves(prog, evidence, None, branch_limit, step_limit)
    leaf_count = len(query_leaves) + len(evidence_leaves)
    evidence_terms = []
    joint_terms = []
    for answer, sigma_e in evidence_leaves:
        if not answer:
            continue
        evidence_terms.append(prob(sigma_e, prog))
        joint_leaves = evaluation_leaves(prog, query, sigma_e, branch_limit, step_limit)
        leaf_count += len(joint_leaves)
        joint_terms.extend(prob(path, prog) for q_answer, path in joint_leaves if q_answer)

    p_evidence = math.fsum(evidence_terms)
    if p_evidence <= 0.0:
        raise EvidenceUnsatisfiable(f"evidence {format_term(evidence)} has probability 0")
    p_joint = math.fsum(joint_terms)
    return ExactResult(p_query, p_evidence, p_joint, min(1.0, p_joint / p_evidence), leaf_count)
