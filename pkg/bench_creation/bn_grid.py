"""
Boolean Bayesian network laid out as a rows x cols grid.

Node (R, C) has its left and upper neighbours (if any) as parents. Its CPT
is one switch per parent valuation:

- x(R,C,root)      no parents
- x(R,C,l(L))      left parent only
- x(R,C,u(U))      upper parent only
- x(R,C,ul(U,L))   both parents

CPT entries are drawn from the bench seed in (0.05, 0.95) as thousandths,
so every joint assignment has positive probability and any evidence is
satisfiable. Evidence fixes `evidence_count` nodes (chosen and valued from
the same seed); the query asks whether a remaining node is t, preferring the
bottom-right corner.
"""
import random

from bench_creation.bench_spec import BenchSpec, ratio
from classes.errors import UsageError

MAX_NODES = 400


def _cpt_line(rng, switch):
    k = rng.randint(50, 950)
    return f":- set_sw({switch}, [{ratio(k)},{ratio(1000 - k)}])."


def _node_rule(row, col):
    if row == 1 and col == 1:
        return f"node(1,1,V) :- msw(x(1,1,root),V).", ["x(1,1,root)"]
    if row == 1:
        return (f"node(1,{col},V) :- node(1,{col - 1},L), msw(x(1,{col},l(L)),V).",
                [f"x(1,{col},l({v}))" for v in "tf"])
    if col == 1:
        return (f"node({row},1,V) :- node({row - 1},1,U), msw(x({row},1,u(U)),V).",
                [f"x({row},1,u({v}))" for v in "tf"])
    return (f"node({row},{col},V) :- node({row - 1},{col},U), node({row},{col - 1},L), "
            f"msw(x({row},{col},ul(U,L)),V).",
            [f"x({row},{col},ul({u},{l}))" for u in "tf" for l in "tf"])


def gen_bn(rows, cols, evidence_count=0, seed=0):
    if rows < 1 or cols < 1:
        raise UsageError(f"grid needs at least one row and column, got {rows}x{cols}")
    if rows * cols > MAX_NODES:
        raise UsageError(f"grid of {rows * cols} nodes is larger than {MAX_NODES}")
    if not 0 <= evidence_count < rows * cols:
        raise UsageError(f"evidence count must leave a query node, got {evidence_count} of {rows * cols}")
    rng = random.Random(seed)

    rules = []
    settings = []
    for row in range(1, rows + 1):
        for col in range(1, cols + 1):
            rule, switches = _node_rule(row, col)
            rules.append(rule)
            settings.extend(_cpt_line(rng, switch) for switch in switches)

    nodes = [(row, col) for row in range(1, rows + 1) for col in range(1, cols + 1)]
    query_node = nodes[-1]
    candidates = nodes[:-1]
    evidence_nodes = sorted(rng.sample(candidates, evidence_count))
    observed = [(row, col, rng.choice("tf")) for row, col in evidence_nodes]

    lines = ["values(x(_,_,_), [t,f])."]
    lines.extend(settings)
    lines.append("")
    lines.extend(rules)
    if observed:
        body = ", ".join(f"node({row},{col},{value})" for row, col, value in observed)
        lines.append(f"evidence :- {body}.")
    else:
        lines.append("evidence.")
    lines.append(f"query :- node({query_node[0]},{query_node[1]},t).")
    text = "\n".join(lines) + "\n"
    return BenchSpec.build("bn", text, "query", "evidence", seed,
                           rows=rows, cols=cols, evidence_count=evidence_count)
