"""
Reachability over probabilistic directed graphs.

Each possible edge (X, Y) is a poss_edge fact with a boolean switch r(X, Y);
the edge exists in a world when the switch is t. reach/2 is the transitive
closure. SIX_EDGE_TEXT is the introductory six-edge graph:

    a -> b 0.9    a -> c 0.2    b -> d 0.8
    b -> e 0.01   c -> d 0.7    c -> e 0.1

P(reach(a, e)) = 0.02882 on it.
"""
import random

from bench_creation.bench_spec import BenchSpec, ratio
from classes.errors import UsageError

SIX_EDGE_TEXT = """\
poss_edge(a,b).
poss_edge(a,c).
poss_edge(b,d).
poss_edge(b,e).
poss_edge(c,d).
poss_edge(c,e).

values(r(_,_), [t,f]).
:- set_sw(r(a,b), [0.9,0.1]).
:- set_sw(r(a,c), [0.2,0.8]).
:- set_sw(r(b,d), [0.8,0.2]).
:- set_sw(r(b,e), [0.01,0.99]).
:- set_sw(r(c,d), [0.7,0.3]).
:- set_sw(r(c,e), [0.1,0.9]).

edge(X,Y) :-
     poss_edge(X,Y),
     msw(r(X,Y),t).
reach(X,Y) :- edge(X,Y).
reach(X,Y) :-
    edge(X,Z),
    reach(Z,Y).
"""

REACH_RULES = """\
edge(X,Y) :- poss_edge(X,Y), msw(r(X,Y),t).
reach(X,Y) :- edge(X,Y).
reach(X,Y) :- edge(X,Z), reach(Z,Y).
"""


def six_edge_bench():
    return BenchSpec.build("reach", SIX_EDGE_TEXT, "reach(a,d)", "reach(a,e)", None, vertices=5, edges=6)


def reach_text(edges):
    """edges: (source, target, probability) triples with atom vertex names."""
    if not edges:
        raise UsageError("a reach benchmark needs at least one edge")
    lines = [f"poss_edge({source},{target})." for source, target, _ in edges]
    lines.append("")
    lines.append("values(r(_,_), [t,f]).")
    for source, target, p in edges:
        lines.append(f":- set_sw(r({source},{target}), [{p},{_complement(p)}]).")
    lines.append("")
    return "\n".join(lines) + "\n" + REACH_RULES


def _complement(p):
    if isinstance(p, str) and "/" in p:
        numerator, denominator = p.split("/")
        return f"{int(denominator) - int(numerator)}/{denominator}"
    return repr(1.0 - float(p))


def gen_reach(edges, query, evidence="true"):
    vertices = {vertex for source, target, _ in edges for vertex in (source, target)}
    return BenchSpec.build("reach", reach_text(edges), query, evidence, None,
                           vertices=len(vertices), edges=len(edges))


def gen_random_reach(vertices, edge_prob=0.3, seed=0):
    """
    Random DAG over n0..n{vertices-1}. The path n0 -> n1 -> ... is always
    possible so every vertex can be reached; other forward edges appear with
    probability edge_prob. Query: reach the last vertex; evidence: reach the
    middle one.
    """
    if vertices < 2:
        raise UsageError(f"a random reach graph needs at least 2 vertices, got {vertices}")
    rng = random.Random(seed)
    edges = []
    for i in range(vertices):
        for j in range(i + 1, vertices):
            if j == i + 1 or rng.random() < edge_prob:
                edges.append((f"n{i}", f"n{j}", ratio(rng.randint(100, 900))))
    middle = vertices // 2
    spec = BenchSpec.build("reach", reach_text(edges), f"reach(n0,n{vertices - 1})", f"reach(n0,n{middle})",
                           seed, vertices=vertices, edges=len(edges), edge_prob=edge_prob)
    return spec
