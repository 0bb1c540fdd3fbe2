from collections import Counter

import numpy as np
import pytest

from bench_creation.bn_grid import gen_bn
from classes.assignment import Assignment, SwitchInstance
from classes.chain_config import ChainConfig, MultiSwitch, SingleSwitch
from classes.errors import SamplerError, UsageError
from classes.q_store import QStore
from classes.term import Atom, Compound, Int
from exact_inference.evaluation_tree import exact_conditional
from program_parsing.parser import parse_goal, parse_program
from sampling.mcmc import accept_prob, accept_ratio, resample, run_chain

t = Atom("t")

# c is only consulted by the evidence after a = y, where c = f always fails
QUERY_ONLY_SWITCH = """
values(a, [x, y]).
values(c, [t, f]).
:- set_sw(a, [0.5, 0.5]).
:- set_sw(c, [0.5, 0.5]).
ev :- msw(a, x).
ev :- msw(c, t).
hit :- msw(c, t).
"""


def key(name):
    return SwitchInstance(Atom(name), Int(0))


def edge_key(x, y):
    return SwitchInstance(Compound("r", (Atom(x), Atom(y))), Int(0))


def sigma(*names):
    return Assignment({key(name): t for name in names})


def test_single_switch_forgets_exactly_one(rng):
    assert resample(sigma("a"), SingleSwitch(), rng) == Assignment()
    smaller = resample(sigma("a", "b", "c"), SingleSwitch(), rng)
    assert len(smaller) == 2


def test_single_switch_on_empty_state(rng):
    with pytest.raises(SamplerError):
        resample(Assignment(), SingleSwitch(), rng)


def test_single_switch_is_uniform():
    rng = np.random.default_rng(5)
    full = sigma("a", "b", "c")
    counts = Counter()
    draws = 6000
    for _ in range(draws):
        kept = resample(full, SingleSwitch(), rng)
        (forgotten,) = set(full.keys()) - set(kept.keys())
        counts[forgotten] += 1
    for name in "abc":
        assert counts[key(name)] / draws == pytest.approx(1 / 3, abs=0.03)


def test_multi_switch_with_certain_forgetting(rng):
    assert resample(sigma("a", "b", "c"), MultiSwitch(1.0), rng) == Assignment()


def test_multi_switch_probability_range():
    with pytest.raises(UsageError):
        MultiSwitch(0.0)
    with pytest.raises(UsageError):
        MultiSwitch(1.5)


def test_single_switch_ratio_is_size_ratio(six_edge_program):
    assert accept_prob(sigma("a", "b", "c"), sigma("a", "b", "c", "d"), SingleSwitch(), six_edge_program) == 0.75
    assert accept_prob(sigma("a", "b", "c", "d"), sigma("a", "b"), SingleSwitch(), six_edge_program) == 1.0


def test_single_switch_empty_proposal(six_edge_program):
    assert accept_ratio(Assignment(), Assignment(), SingleSwitch(), six_edge_program) == 1.0
    with pytest.raises(SamplerError):
        accept_ratio(sigma("a"), Assignment(), SingleSwitch(), six_edge_program)


def test_multi_switch_always_accepts(six_edge_program):
    assert accept_prob(sigma("a"), sigma("a", "b", "c"), MultiSwitch(0.5), six_edge_program) == 1.0


def test_adaptive_ratio_with_empty_store_matches_plain(six_edge_program):
    current = Assignment({edge_key("a", "b"): t, edge_key("b", "e"): t})
    proposed = Assignment({edge_key("a", "b"): Atom("f"), edge_key("a", "c"): t, edge_key("c", "e"): t})
    plain = accept_prob(current, proposed, SingleSwitch(), six_edge_program)
    adaptive = accept_prob(current, proposed, SingleSwitch(), six_edge_program, QStore())
    assert adaptive == plain == pytest.approx(2 / 3)


def test_adaptive_ratio_uses_q_values(six_edge_program):
    current = Assignment({edge_key("a", "b"): t})
    proposed = Assignment({edge_key("a", "b"): Atom("f")})
    store = QStore()
    store.update(edge_key("a", "b"), t, 0.0)
    # adapted P'(t) = 0.9e-6 / (0.9e-6 + 0.1), P'(f) = 0.1 / (0.9e-6 + 0.1)
    norm = 0.9e-6 + 0.1
    expected = ((0.9e-6 / norm) / 0.9) / ((0.1 / norm) / 0.1)
    assert accept_ratio(current, proposed, SingleSwitch(), six_edge_program, store, 1e-6) == pytest.approx(expected)


def test_query_only_entries_carry_no_adaptive_factor(six_edge_program):
    current = Assignment({edge_key("a", "b"): t})
    proposed = Assignment({edge_key("a", "b"): Atom("f")})
    store = QStore()
    store.update(edge_key("a", "b"), t, 0.0)
    ratio = accept_ratio(current, proposed, SingleSwitch(), six_edge_program, store, 1e-6, Assignment(), Assignment())
    assert ratio == 1.0
    only_current = accept_ratio(current, proposed, SingleSwitch(), six_edge_program, store, 1e-6, current, Assignment())
    assert only_current == pytest.approx((0.9e-6 / (0.9e-6 + 0.1)) / 0.9)


@pytest.fixture
def query_only_program():
    return parse_program(QUERY_ONLY_SWITCH)


@pytest.mark.parametrize("strategy", [SingleSwitch(), MultiSwitch(0.5)], ids=["single", "multi"])
@pytest.mark.parametrize("adaptive", [False, True], ids=["plain", "adaptive"])
def test_query_only_switch_keeps_its_prior(query_only_program, strategy, adaptive):
    query, evidence = parse_goal("hit"), parse_goal("ev")
    exact = exact_conditional(query_only_program, query, evidence).p_conditional
    assert exact == pytest.approx(2 / 3)
    cfg = ChainConfig(30000, burn_in=500, strategy=strategy, adaptive=adaptive, seed=17)
    result = run_chain(query_only_program, query, evidence, cfg)
    assert result.estimate == pytest.approx(exact, abs=0.03)
    if adaptive:
        assert result.store.q(SwitchInstance(Atom("c"), Int(0)), Atom("f")) == 0.0


def test_query_equal_to_evidence(six_edge_program):
    goal = parse_goal("reach(a,e)")
    result = run_chain(six_edge_program, goal, goal, ChainConfig(500, seed=1))
    assert result.estimate == 1.0
    assert result.evidence_rejections <= result.steps


def test_six_edge_conditional(six_edge_program):
    query, evidence = parse_goal("reach(a,d)"), parse_goal("reach(a,e)")
    exact = exact_conditional(six_edge_program, query, evidence).p_conditional
    result = run_chain(six_edge_program, query, evidence, ChainConfig(20000, burn_in=500, seed=3))
    assert result.estimate == pytest.approx(exact, abs=0.04)


def test_six_edge_conditional_adaptive_multi_switch(six_edge_program):
    query, evidence = parse_goal("reach(a,d)"), parse_goal("reach(a,e)")
    exact = exact_conditional(six_edge_program, query, evidence).p_conditional
    cfg = ChainConfig(20000, burn_in=500, strategy=MultiSwitch(0.5), adaptive=True, seed=4)
    result = run_chain(six_edge_program, query, evidence, cfg)
    assert result.estimate == pytest.approx(exact, abs=0.04)
    assert result.store is not None and result.store.updates > 0


def test_trivial_evidence_gives_prior(six_edge_program):
    query = parse_goal("reach(a,e)")
    cfg = ChainConfig(20000, strategy=MultiSwitch(0.5), seed=5)
    result = run_chain(six_edge_program, query, parse_goal("true"), cfg)
    assert result.estimate == pytest.approx(0.02882, abs=0.01)


@pytest.mark.parametrize("strategy", [SingleSwitch(), MultiSwitch(0.5)], ids=["single", "multi"])
def test_trivial_evidence_keeps_untouched_entries(six_edge_program, strategy):
    query, evidence = parse_goal("reach(a,d)"), parse_goal("true")
    exact = exact_conditional(six_edge_program, query, evidence).p_conditional
    cfg = ChainConfig(30000, burn_in=500, strategy=strategy, seed=5)
    assert run_chain(six_edge_program, query, evidence, cfg).estimate == pytest.approx(exact, abs=0.03)


def test_frozen_adaptation_reproduces_plain_chain(six_edge_program):
    query, evidence = parse_goal("reach(a,d)"), parse_goal("reach(a,e)")
    plain = run_chain(six_edge_program, query, evidence, ChainConfig(2000, seed=9))
    frozen = run_chain(six_edge_program, query, evidence, ChainConfig(2000, adaptive=True, freeze_q=True, seed=9))
    assert frozen.estimate == plain.estimate
    assert [row[:-1] for row in frozen.rows] == [row[:-1] for row in plain.rows]


def test_same_seed_same_rows(six_edge_program):
    query, evidence = parse_goal("reach(a,d)"), parse_goal("reach(a,e)")
    cfg = ChainConfig(1000, adaptive=True, seed=12)
    first = run_chain(six_edge_program, query, evidence, cfg)
    second = run_chain(six_edge_program, query, evidence, cfg)
    assert [row[:-1] for row in first.rows] == [row[:-1] for row in second.rows]


def test_rows_cover_post_burn_in_iterations(six_edge_program):
    query, evidence = parse_goal("reach(a,d)"), parse_goal("reach(a,e)")
    result = run_chain(six_edge_program, query, evidence, ChainConfig(300, burn_in=50, seed=2))
    assert len(result.rows) == 300
    assert result.rows[0].iteration == 51
    assert result.rows[-1].iteration == 350
    assert len(result.query_indicators) == 300
    assert result.rows[-1].estimate == result.estimate
    assert 0.0 <= result.acceptance_rate <= 1.0


def test_debug_checks_pass(six_edge_program):
    query, evidence = parse_goal("reach(a,d)"), parse_goal("reach(a,e)")
    cfg = ChainConfig(300, strategy=MultiSwitch(0.3), adaptive=True, seed=6, debug_checks=True, trace_dedup=True)
    result = run_chain(six_edge_program, query, evidence, cfg)
    assert 0.0 <= result.estimate <= 1.0


def test_config_validation():
    with pytest.raises(UsageError):
        ChainConfig(0)
    with pytest.raises(UsageError):
        ChainConfig(10, burn_in=-1)


def reach_rejection_rates(prog, strategy, seed, steps):
    query, evidence = parse_goal("reach(a,d)"), parse_goal("reach(a,e)")
    rates = []
    for adaptive in (False, True):
        cfg = ChainConfig(steps, strategy=strategy, adaptive=adaptive, seed=seed)
        rates.append(run_chain(prog, query, evidence, cfg).rejection_rate)
    return rates


def test_rejection_rate_band_and_direction(six_edge_program):
    # rare forgetting keeps most proposals on a consistent derivation
    plain, adaptive = reach_rejection_rates(six_edge_program, MultiSwitch(0.05), 3, 20000)
    assert 0.04 <= plain <= 0.12
    assert adaptive < plain
    plain, adaptive = reach_rejection_rates(six_edge_program, SingleSwitch(), 3, 20000)
    assert adaptive < plain


def test_acceptance_identities_over_a_run(six_edge_program):
    query, evidence = parse_goal("reach(a,d)"), parse_goal("reach(a,e)")
    multi = []
    run_chain(six_edge_program, query, evidence, ChainConfig(5000, strategy=MultiSwitch(0.5), seed=7),
              on_proposal=lambda state, candidate, alpha: multi.append(alpha))
    assert multi and all(alpha == 1.0 for alpha in multi)
    single = []
    run_chain(six_edge_program, query, evidence, ChainConfig(5000, seed=7),
              on_proposal=lambda state, candidate, alpha: single.append(
                  alpha == min(1.0, len(state) / len(candidate))))
    assert single and all(single)


@pytest.mark.slow
@pytest.mark.parametrize("adaptive", [False, True], ids=["plain", "adaptive"])
@pytest.mark.parametrize("strategy", [SingleSwitch(), MultiSwitch(0.5)], ids=["single", "multi"])
def test_six_edge_conditional_five_seeds(six_edge_program, strategy, adaptive):
    query, evidence = parse_goal("reach(a,d)"), parse_goal("reach(a,e)")
    exact = exact_conditional(six_edge_program, query, evidence).p_conditional
    for seed in range(21, 26):
        cfg = ChainConfig(100000, burn_in=1000, strategy=strategy, adaptive=adaptive, seed=seed)
        assert run_chain(six_edge_program, query, evidence, cfg).estimate == pytest.approx(exact, abs=0.02)


@pytest.mark.slow
def test_rejection_rate_over_seeds(six_edge_program):
    passed = 0
    for seed in range(31, 36):
        plain, adaptive = reach_rejection_rates(six_edge_program, MultiSwitch(0.05), seed, 100000)
        passed += 0.04 <= plain <= 0.12 and adaptive < plain
    assert passed >= 3


@pytest.mark.slow
def test_bn_grid_conditional_and_adaptation_overhead():
    bench = gen_bn(3, 3, 2, seed=2)
    exact = exact_conditional(bench.program, bench.query, bench.evidence).p_conditional
    per_iteration = {}
    for adaptive in (False, True):
        cfg = ChainConfig(100000, burn_in=1000, adaptive=adaptive, seed=13)
        result = run_chain(bench.program, bench.query, bench.evidence, cfg)
        assert result.estimate == pytest.approx(exact, abs=0.02)
        per_iteration[adaptive] = result.rows[-1].elapsed_us / (cfg.burn_in + cfg.steps)
    assert per_iteration[True] <= 2.5 * per_iteration[False]
