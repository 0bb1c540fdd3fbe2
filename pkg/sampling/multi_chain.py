"""
Several independent chains for one query, with between-chain diagnostics.

Chain c runs with seed cfg.seed + c and a private QStore. With more than one
chain the runs go through a multiprocessing Pool. Results are merged after all
chains finish:

- estimate: mean of the chain estimates
- spread: standard deviation of the chain estimates (ddof=1)
- r_hat: Gelman-Rubin potential scale reduction on the per-iteration query indicators
"""
import logging
from multiprocessing import Pool

import numpy as np

from classes.chain_result import MultiChainResult
from classes.errors import UsageError
from sampling.mcmc import run_chain

logger = logging.getLogger(__name__)


def _run_one(args):
    prog, query, evidence, cfg = args
    return run_chain(prog, query, evidence, cfg)


def gelman_rubin(draws) -> float:
    """
    R-hat for an (m chains, n draws) array. Returns 1.0 when every chain is
    constant and the chains agree, inf when they are constant but disagree.
    """
    draws = np.asarray(draws, dtype=float)
    m, n = draws.shape
    if m < 2 or n < 2:
        return float("nan")
    chain_means = draws.mean(axis=1)
    within = draws.var(axis=1, ddof=1).mean()
    between = n * chain_means.var(ddof=1)
    if within == 0.0:
        return 1.0 if between == 0.0 else float("inf")
    pooled = (n - 1) / n * within + between / n
    return float(np.sqrt(pooled / within))


def run_chains(prog, query, evidence, cfg, chains=1, processes=None) -> MultiChainResult:
    if chains < 1:
        raise UsageError(f"number of chains must be at least 1, got {chains}")
    jobs = [(prog, query, evidence, cfg.with_seed(cfg.seed + c)) for c in range(chains)]
    if chains == 1:
        results = [_run_one(jobs[0])]
    else:
        with Pool(processes=processes or min(chains, 8)) as pool:
            results = pool.map(_run_one, jobs)

    estimates = np.array([result.estimate for result in results])
    spread = float(estimates.std(ddof=1)) if chains > 1 else 0.0
    r_hat = gelman_rubin([result.query_indicators for result in results]) if chains > 1 else float("nan")
    logger.info("%d chains: mean %.6f, spread %.6f, r_hat %.4f", chains, estimates.mean(), spread, r_hat)
    return MultiChainResult(results, float(estimates.mean()), spread, r_hat)
