"""
A row of boolean switches x(1)..x(n) scanned left to right.

- evidence `some_true`: some switch is t; the scan stops at the first t
- query `first_true`: x(1) is t

Whether the evidence holds after x(I) = f depends only on the switches to
the right of I, so the program has Markovian evaluation structure. The
probability of t for each switch is drawn from the bench seed in
[0.05, 0.30] so the evidence is not close to certain.
"""
import random

from bench_creation.bench_spec import BenchSpec, ratio
from classes.errors import UsageError


def gen_chain(length, seed=0):
    if length < 1:
        raise UsageError(f"chain length must be positive, got {length}")
    rng = random.Random(seed)
    lines = ["values(x(_), [t,f])."]
    for i in range(1, length + 1):
        k = rng.randint(50, 300)
        lines.append(f":- set_sw(x({i}), [{ratio(k)},{ratio(1000 - k)}]).")
    lines.append("")
    lines.extend(f"next({i},{i + 1})." for i in range(1, length))
    lines.extend([
        "scan(I) :- msw(x(I),t).",
        "scan(I) :- next(I,J), scan(J).",
        "some_true :- scan(1).",
        "first_true :- msw(x(1),t).",
    ])
    text = "\n".join(lines) + "\n"
    return BenchSpec.build("chain", text, "first_true", "some_true", seed, length=length)
