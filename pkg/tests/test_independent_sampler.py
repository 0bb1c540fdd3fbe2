import pytest

from bench_creation.chain import gen_chain
from classes.chain_config import ChainConfig
from classes.errors import NoConsistentSamples, UsageError
from exact_inference.evaluation_tree import exact_conditional
from program_parsing.parser import parse_goal, parse_program
from sampling.independent_sampler import independent_sampler


@pytest.fixture
def chain_bench():
    return gen_chain(6, seed=1)


def test_matches_oracle_on_chain(chain_bench):
    exact = exact_conditional(chain_bench.program, chain_bench.query, chain_bench.evidence).p_conditional
    result = independent_sampler(chain_bench.program, chain_bench.query, chain_bench.evidence, 20000,
                                 ChainConfig(1, seed=8))
    assert result.estimate == pytest.approx(exact, abs=0.03)
    assert result.consistent <= result.samples
    assert result.both <= result.consistent


def test_rewards_never_increase_on_markovian_program(chain_bench):
    result = independent_sampler(chain_bench.program, chain_bench.query, chain_bench.evidence, 2000,
                                 ChainConfig(1, seed=2))
    assert result.monotonicity_violations == {}
    assert result.to_dict()['monotonicity_violations'] == 0


def test_trivial_evidence(six_edge_program):
    result = independent_sampler(six_edge_program, parse_goal("reach(a,e)"), parse_goal("true"), 20000,
                                 ChainConfig(1, seed=3))
    assert result.consistent == 20000
    assert result.estimate == pytest.approx(0.02882, abs=0.01)


def test_no_consistent_samples():
    prog = parse_program("values(c, [a, b]). :- set_sw(c, [0.0, 1.0]). p :- msw(c, a).")
    with pytest.raises(NoConsistentSamples):
        independent_sampler(prog, parse_goal("true"), parse_goal("p"), 50, ChainConfig(1))


def test_sample_count_must_be_positive(six_edge_program):
    with pytest.raises(UsageError):
        independent_sampler(six_edge_program, parse_goal("true"), parse_goal("true"), 0, ChainConfig(1))


@pytest.mark.slow
def test_ten_switch_chain_at_full_size():
    bench = gen_chain(10, seed=4)
    exact = exact_conditional(bench.program, bench.query, bench.evidence).p_conditional
    result = independent_sampler(bench.program, bench.query, bench.evidence, 100000, ChainConfig(1, seed=9))
    assert result.estimate == pytest.approx(exact, abs=0.02)
    assert result.monotonicity_violations == {}
