"""
Main entry point for the adaptive PLP sampler.

Estimates conditional probabilities P(query | evidence) of PRISM-style
probabilistic logic programs and checks them against exact inference.

Subcommands:
- run       Metropolis-Hastings (optionally adaptive) or the Markovian
            independent sampler; writes per-iteration CSV rows and a summary
- exact     exact probabilities from the evaluation tree (optionally
            cross-checked by enumerating complete worlds)
- genbench  writes a BN, Hamming, Grammar, Reach or chain benchmark program
            plus its manifest
- qdump     runs an adaptive chain and writes its Q-values as CSV

Exit codes: 0 ok, 2 usage, 3 program text, 4 runtime and file errors.

Usage: python plp_sampler.py run --program misc_files/six_edge_reach.plp \
           --query "reach(a,d)" --evidence "reach(a,e)" --samples 50000 --adapt on
"""

import argparse
import logging
import sys
from pathlib import Path

from bench_creation.bn_grid import gen_bn
from bench_creation.chain import gen_chain
from bench_creation.grammar import gen_grammar
from bench_creation.hamming import gen_hamming
from bench_creation.reach import six_edge_bench, gen_random_reach
from classes.chain_config import ChainConfig, MultiSwitch, SingleSwitch
from classes.errors import PLPError, PLPSyntaxError, UsageError
from classes.run_manifest import RunManifest
from classes.term import is_ground
from exact_inference.evaluation_tree import exact_conditional
from exact_inference.world_enumeration import world_conditional
from program_parsing.parser import parse_goal, read_program
from sampling.independent_sampler import independent_sampler
from sampling.mcmc import run_chain
from sampling.multi_chain import run_chains
from trace_visualization.print_trace import print_trace
from utilities.csv_output import write_chain_csv, write_exact_csv, write_multi_chain_csv, write_qstore_csv
from utilities.settings import configure_logging, print_the_time

logger = logging.getLogger("plp_sampler")

AGREEMENT_TOLERANCE = 1e-12
RUNTIME_EXIT_CODE = 4


def on_off(text):
    value = text.lower()
    if value not in ("on", "off"):
        raise argparse.ArgumentTypeError(f"expected on or off, got {text!r}")
    return value == "on"


def build_parser():
    parser = argparse.ArgumentParser(prog="plp_sampler", description="Adaptive MCMC for probabilistic logic programs")
    parser.add_argument("--verbose", "-v", action="count", default=0, help="log INFO (-v) or DEBUG (-vv) to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    goals = argparse.ArgumentParser(add_help=False)
    goals.add_argument("--program", required=True, help="program file")
    goals.add_argument("--query", required=True, help="ground query goal")
    goals.add_argument("--evidence", default="true", help="ground evidence goal (default: true)")

    sampler = argparse.ArgumentParser(add_help=False)
    sampler.add_argument("--samples", type=int, default=10000, help="post-burn-in iterations N")
    sampler.add_argument("--burnin", type=int, default=0)
    sampler.add_argument("--resample", choices=["single", "multi"], default=None)
    sampler.add_argument("--multi-prob", type=float, default=0.5, help="forget probability for --resample multi")
    sampler.add_argument("--adapt", type=on_off, default=False, metavar="on|off")
    sampler.add_argument("--seed", type=int, default=0)
    sampler.add_argument("--step-limit", type=int, default=None)
    sampler.add_argument("--trace-dedup", type=on_off, default=False, metavar="on|off")
    sampler.add_argument("--freeze-q", action="store_true", help="keep every Q-value at 1")
    sampler.add_argument("--debug-checks", action="store_true", help="re-check evidence in every retained state")

    run = commands.add_parser("run", parents=[goals, sampler], help="estimate P(query | evidence) by sampling")
    run.add_argument("--markovian", type=on_off, default=False, metavar="on|off",
                     help="use the adaptive independent sampler")
    run.add_argument("--chains", type=int, default=1)
    run.add_argument("--csv", default=None, help="per-iteration CSV output")
    run.add_argument("--plot", default=None, help="PNG of the running estimate")
    run.add_argument("--qdump", default=None, help="Q-value CSV output")

    exact = commands.add_parser("exact", parents=[goals], help="exact probabilities")
    exact.add_argument("--branch-limit", type=int, default=None)
    exact.add_argument("--world-limit", type=int, default=None)
    exact.add_argument("--step-limit", type=int, default=None)
    exact.add_argument("--world-check", action="store_true", help="cross-check by complete-world enumeration")
    exact.add_argument("--csv", default=None)

    genbench = commands.add_parser("genbench", help="write a benchmark program")
    genbench.add_argument("family", choices=["bn", "hamming", "grammar", "reach", "six-edge", "chain"])
    genbench.add_argument("--out", required=True, help="program file to write")
    genbench.add_argument("--manifest", default=None, help="manifest file (default: OUT with .manifest suffix)")
    genbench.add_argument("--seed", type=int, default=0)
    genbench.add_argument("--rows", type=int, default=3)
    genbench.add_argument("--cols", type=int, default=3)
    genbench.add_argument("--evidence-count", type=int, default=None)
    genbench.add_argument("--data-bits", type=int, default=4)
    genbench.add_argument("--length", type=int, default=10)
    genbench.add_argument("--level", type=int, default=2)
    genbench.add_argument("--vertices", type=int, default=10)
    genbench.add_argument("--edge-prob", type=float, default=0.3)

    qdump = commands.add_parser("qdump", parents=[goals, sampler], help="run an adaptive chain and dump its Q-values")
    qdump.add_argument("--out", required=True, help="Q-value CSV output")
    return parser


def read_goal(text, label):
    try:
        goal = parse_goal(text)
    except PLPSyntaxError as e:
        raise UsageError(f"cannot parse {label} {text!r}: {e.message}")
    if not is_ground(goal):
        raise UsageError(f"{label} must be ground: {text!r}")
    return goal


def chain_config(args, adaptive=None):
    if args.resample == "multi":
        strategy = MultiSwitch(args.multi_prob)
    else:
        strategy = SingleSwitch()
    return ChainConfig(args.samples, args.burnin, strategy, args.adapt if adaptive is None else adaptive,
                       args.seed, args.step_limit, args.trace_dedup, None, args.freeze_q, args.debug_checks)


def print_summary(label, values, stream=None):
    stream = stream or sys.stdout
    print("_________________________________", file=stream)
    print(label, file=stream)
    for key, value in values.items():
        if isinstance(value, float):
            value = f"{value:.6f}"
        print(f"{key}:\t{value}", file=stream)
    print("_________________________________", file=stream)


def command_run(args):
    if args.markovian and args.resample is not None:
        raise UsageError("--markovian on draws independent samples and cannot be combined with --resample")
    mode = "independent" if args.markovian else "mcmc"
    config = chain_config(args)
    manifest = RunManifest(args.program, args.query, args.evidence, mode, config, args.csv, args.plot,
                           args.qdump, args.chains)
    if mode == "independent" and args.csv:
        raise UsageError("--csv rows are produced by the MCMC sampler only")
    query = read_goal(args.query, "query")
    evidence = read_goal(args.evidence, "evidence")
    prog = read_program(args.program)
    print(manifest, file=sys.stderr)
    print_the_time("Run Start")

    if mode == "independent":
        result = independent_sampler(prog, query, evidence, config.steps, config)
        print_summary("Independent sampler", result.to_dict())
        if args.qdump:
            write_qstore_csv(args.qdump, result.store)
        print_the_time("Run End")
        return 0

    if args.chains > 1:
        merged = run_chains(prog, query, evidence, config, args.chains)
        for index, chain in enumerate(merged.chains):
            print_summary(f"Chain {index}", chain.to_dict())
        print_summary("Pooled", {'estimate': merged.estimate, 'spread': merged.spread, 'r_hat': merged.r_hat})
        if args.csv:
            write_multi_chain_csv(args.csv, merged.chains)
        if args.plot:
            print_trace(merged.chains[0].rows, args.plot, chains=[chain.rows for chain in merged.chains[1:]])
        if args.qdump and merged.chains[0].store is not None:
            write_qstore_csv(args.qdump, merged.chains[0].store)
    else:
        result = run_chain(prog, query, evidence, config)
        summary = result.to_dict()
        summary['rejection_rate'] = result.rejection_rate
        print_summary("Chain", summary)
        if args.csv:
            write_chain_csv(args.csv, result.rows)
        if args.plot:
            print_trace(result.rows, args.plot)
        if args.qdump:
            if result.store is None:
                raise UsageError("--qdump needs --adapt on")
            write_qstore_csv(args.qdump, result.store)
    print_the_time("Run End")
    return 0


def command_exact(args):
    query = read_goal(args.query, "query")
    evidence = read_goal(args.evidence, "evidence")
    prog = read_program(args.program)
    result = exact_conditional(prog, query, evidence, args.branch_limit, args.step_limit)
    print(result)
    if args.world_check:
        check = world_conditional(prog, query, evidence, args.world_limit, args.step_limit)
        difference = max(abs(result.p_query - check.p_query), abs(result.p_evidence - check.p_evidence),
                         abs(result.p_joint - check.p_joint))
        print(f"worlds\t{check.leaf_count}")
        print(f"oracle difference\t{difference:.3g}")
        if difference > AGREEMENT_TOLERANCE:
            logger.warning("exact oracles disagree by %.3g", difference)
    if args.csv:
        write_exact_csv(args.csv, result)
    return 0


def command_genbench(args):
    if args.family == "bn":
        spec = gen_bn(args.rows, args.cols, args.evidence_count or 0, args.seed)
    elif args.family == "hamming":
        spec = gen_hamming(args.data_bits, args.evidence_count, args.seed)
    elif args.family == "grammar":
        spec = gen_grammar(args.length, args.level)
    elif args.family == "reach":
        spec = gen_random_reach(args.vertices, args.edge_prob, args.seed)
    elif args.family == "six-edge":
        spec = six_edge_bench()
    else:
        spec = gen_chain(args.length, args.seed)
    manifest_path = args.manifest or str(Path(args.out).with_suffix(".manifest"))
    spec.write(args.out, manifest_path)
    print(spec)
    return 0


def command_qdump(args):
    query = read_goal(args.query, "query")
    evidence = read_goal(args.evidence, "evidence")
    prog = read_program(args.program)
    result = run_chain(prog, query, evidence, chain_config(args, adaptive=True))
    write_qstore_csv(args.out, result.store)
    print_summary("Q-values", {'estimate': result.estimate, 'outcomes': len(result.store),
                               'updates': result.store.updates})
    return 0


COMMANDS = {
    "run": command_run,
    "exact": command_exact,
    "genbench": command_genbench,
    "qdump": command_qdump,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    configure_logging({0: None, 1: "INFO"}.get(args.verbose, "DEBUG"))
    try:
        return COMMANDS[args.command](args)
    except PLPError as e:
        print(f"error: {e.message}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return RUNTIME_EXIT_CODE


if __name__ == "__main__":
    sys.exit(main())
