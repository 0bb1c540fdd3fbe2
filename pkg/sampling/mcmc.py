"""
Metropolis-Hastings over assignments, estimating P(q | e).

Each iteration:

1. forget part of the current state (resample)
2. evaluate e on what is left; a failed evidence evaluation is rejected outright
3. evaluate q on what is left plus the evidence assignment, giving the candidate
4. accept the candidate with accept_prob()
5. count the current state's query answer
6. in adaptive mode, reward the evidence trace with 1 or 0

The chain state is the union of the assignment touched by the last evidence
evaluation and the one touched by the query evaluation run after it, so the
evidence holds in every retained state and no entry outlives the evaluations
that produced it.

Adapted distributions only drive the evidence evaluation. Q-values are learnt
from evidence rewards, so an outcome the evidence never uses can sit at the
floor while still carrying posterior mass as a query-only switch instance.
Query-only instances are therefore drawn from the original distribution and
contribute no P'/P factor to the acceptance ratio.
"""
import logging
import time

import numpy as np

from classes.assignment import Assignment, forget, partition
from classes.chain_config import MultiSwitch, SingleSwitch
from classes.chain_result import ChainResult, ChainRow
from classes.errors import SamplerError
from classes.q_store import QMode, QStore
from classes.term import format_term
from resolution.initial_sample import initial_sample
from resolution.sampling_evaluator import sample_eval
from sampling.adaptation import adapt, adapted_dist
from sampling.distributions import AdaptedDistribution, OriginalDistribution
from sampling.rng_streams import chain_streams

logger = logging.getLogger(__name__)


def resample(sigma: Assignment, strategy, rng: np.random.Generator) -> Assignment:
    if isinstance(strategy, SingleSwitch):
        if not sigma:
            raise SamplerError("single-switch resampling needs a non-empty assignment")
        keys = list(sigma.keys())
        return forget(sigma, [keys[int(rng.integers(len(keys)))]])
    if isinstance(strategy, MultiSwitch):
        keys = list(sigma.keys())
        draws = rng.random(len(keys))
        return forget(sigma, [key for key, u in zip(keys, draws) if u < strategy.p])
    raise SamplerError(f"unknown resampling strategy {strategy}")


def _proposal_factor(sigma, prog, store, floor, adapted_keys=None):
    # product of P'(v) / P(v) over the entries drawn from the adapted distribution
    factor = 1.0
    for key, outcome in sigma.items():
        if adapted_keys is not None and key not in adapted_keys:
            continue
        decl = prog.switch_decl(key.switch)
        index = decl.outcomes.index(outcome)
        original = decl.probabilities[index]
        adapted = adapted_dist(prog, store, key.switch, key.instance, floor)[index]
        if original == 0.0:
            raise SamplerError(f"zero original probability for realized outcome {key}={format_term(outcome)}")
        factor *= adapted / original
    return factor


def accept_ratio(sigma, sigma_prime, strategy, prog, store=None, floor=None,
                 evidence_part=None, evidence_part_prime=None) -> float:
    """
    Uncapped acceptance ratio for moving from sigma to sigma_prime. With a
    store, the adapted distribution it defines is the proposal distribution
    for the entries of evidence_part (sigma's) and evidence_part_prime
    (sigma_prime's); when these are None every entry counts as adapted.
    """
    if isinstance(strategy, SingleSwitch):
        if not sigma_prime:
            if not sigma:
                return 1.0
            raise SamplerError("acceptance ratio has an empty proposed state")
        size_ratio = len(sigma) / len(sigma_prime)
    else:
        size_ratio = None
    if store is None:
        return size_ratio if size_ratio is not None else 1.0

    sigma1, sigma2, _ = partition(sigma, sigma_prime)
    prime1, prime2, _ = partition(sigma_prime, sigma)
    numerator = (_proposal_factor(sigma1, prog, store, floor, evidence_part)
                 * _proposal_factor(sigma2, prog, store, floor, evidence_part))
    denominator = (_proposal_factor(prime1, prog, store, floor, evidence_part_prime)
                   * _proposal_factor(prime2, prog, store, floor, evidence_part_prime))
    if denominator == 0.0:
        raise SamplerError("acceptance ratio has a zero denominator")
    ratio = numerator / denominator
    return ratio * size_ratio if size_ratio is not None else ratio


def accept_prob(sigma, sigma_prime, strategy, prog, store=None, floor=None,
                evidence_part=None, evidence_part_prime=None) -> float:
    if store is None and isinstance(strategy, MultiSwitch):
        return 1.0
    return min(1.0, accept_ratio(sigma, sigma_prime, strategy, prog, store, floor,
                                 evidence_part, evidence_part_prime))


def _check_evidence(prog, evidence, state, rng, step_limit):
    result = sample_eval(prog, evidence, state, OriginalDistribution(prog), rng, step_limit)
    if not result.answer:
        raise SamplerError(f"evidence {format_term(evidence)} fails in a retained chain state")


def run_chain(prog, query, evidence, cfg, store=None, on_proposal=None) -> ChainResult:
    """
    Runs one chain. An adaptive chain uses store when one is given, else a
    fresh AVERAGING store. on_proposal, when set, is called with
    (state, candidate, acceptance probability) for every evidence-consistent
    proposal.
    """
    streams = chain_streams(cfg.seed)
    original = OriginalDistribution(prog)
    dist = original
    if cfg.adaptive:
        if store is None:
            store = QStore(QMode.AVERAGING, frozen=cfg.freeze_q)
        dist = AdaptedDistribution(prog, store, cfg.q_floor)
    else:
        store = None

    sigma0 = initial_sample(prog, evidence, streams.init, cfg.step_limit)
    e_result = sample_eval(prog, evidence, sigma0, dist, streams.evaluator, cfg.step_limit)
    if not e_result.answer:
        raise SamplerError(f"evidence {format_term(evidence)} fails on its initial sample")
    q_result = sample_eval(prog, query, sigma0.union(e_result.assignment), original, streams.evaluator,
                           cfg.step_limit)
    state_e = e_result.assignment
    state = state_e.union(q_result.assignment)
    r_q = q_result.answer
    logger.debug("initial state has %d switch instances, query %s", len(state), r_q)

    n_q = 0
    accepted = 0
    evidence_rejections = 0
    rows = []
    indicators = []
    total = cfg.burn_in + cfg.steps
    report_every = max(1, total // 10)
    start = time.perf_counter_ns()

    for iteration in range(1, total + 1):
        counted = iteration > cfg.burn_in
        base = resample(state, cfg.strategy, streams.proposal) if state else state
        e_result = sample_eval(prog, evidence, base, dist, streams.evaluator, cfg.step_limit)
        u = streams.acceptance.random()
        took = False
        if e_result.answer:
            q_result = sample_eval(prog, query, base.union(e_result.assignment), original, streams.evaluator,
                                   cfg.step_limit)
            candidate = e_result.assignment.union(q_result.assignment)
            alpha = accept_prob(state, candidate, cfg.strategy, prog, store, cfg.q_floor,
                                state_e, e_result.assignment)
            if on_proposal is not None:
                on_proposal(state, candidate, alpha)
            if u < alpha:
                state = candidate
                state_e = e_result.assignment
                r_q = q_result.answer
                took = True
        elif counted:
            evidence_rejections += 1

        if store is not None:
            trace = e_result.trace.deduplicated() if cfg.trace_dedup else e_result.trace
            adapt(trace, 1 if e_result.answer else 0, store, prog)
        if cfg.debug_checks:
            _check_evidence(prog, evidence, state, streams.debug, cfg.step_limit)

        if counted:
            if took:
                accepted += 1
            if r_q:
                n_q += 1
            elapsed_us = (time.perf_counter_ns() - start) // 1000
            rows.append(ChainRow(iteration, n_q / (iteration - cfg.burn_in), took, e_result.answer,
                                 evidence_rejections, elapsed_us))
            indicators.append(1 if r_q else 0)
        if iteration % report_every == 0:
            logger.debug("iteration %d of %d, %d accepted, %d evidence rejections",
                         iteration, total, accepted, evidence_rejections)

    estimate = n_q / cfg.steps
    logger.info("chain seed %d: estimate %.6f, acceptance %.3f, evidence rejections %d",
                cfg.seed, estimate, accepted / cfg.steps, evidence_rejections)
    return ChainResult(estimate, rows, evidence_rejections, accepted, cfg.steps, cfg.seed, indicators, store)
