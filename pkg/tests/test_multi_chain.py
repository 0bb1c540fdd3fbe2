import math

import numpy as np
import pytest

from classes.chain_config import ChainConfig
from program_parsing.parser import parse_goal
from sampling.mcmc import run_chain
from sampling.multi_chain import gelman_rubin, run_chains


def test_gelman_rubin_identical_chains():
    draws = np.tile(np.array([0, 1, 1, 0, 1, 0, 0, 1], dtype=float), (3, 1))
    assert gelman_rubin(draws) == pytest.approx(1.0, abs=0.1)


def test_gelman_rubin_constant_chains():
    assert gelman_rubin([[1, 1, 1], [1, 1, 1]]) == 1.0
    assert gelman_rubin([[1, 1, 1], [0, 0, 0]]) == math.inf


def test_gelman_rubin_separated_chains():
    rng = np.random.default_rng(0)
    low = rng.random((1, 500)) * 0.2
    high = 0.8 + rng.random((1, 500)) * 0.2
    assert gelman_rubin(np.vstack([low, high])) > 2.0


def test_gelman_rubin_needs_two_chains():
    assert math.isnan(gelman_rubin([[0, 1, 0]]))


def test_single_chain_matches_run_chain(six_edge_program):
    query, evidence = parse_goal("reach(a,d)"), parse_goal("reach(a,e)")
    cfg = ChainConfig(500, seed=4)
    merged = run_chains(six_edge_program, query, evidence, cfg, chains=1)
    alone = run_chain(six_edge_program, query, evidence, cfg)
    assert merged.estimate == alone.estimate
    assert merged.spread == 0.0


def test_two_chains_use_consecutive_seeds(six_edge_program):
    query, evidence = parse_goal("reach(a,d)"), parse_goal("reach(a,e)")
    cfg = ChainConfig(400, adaptive=True, seed=10)
    merged = run_chains(six_edge_program, query, evidence, cfg, chains=2, processes=2)
    assert [chain.seed for chain in merged.chains] == [10, 11]
    assert merged.estimate == pytest.approx(np.mean([chain.estimate for chain in merged.chains]))
    second = run_chain(six_edge_program, query, evidence, cfg.with_seed(11))
    assert merged.chains[1].estimate == second.estimate
    assert merged.r_hat >= 0.0 or math.isinf(merged.r_hat)
