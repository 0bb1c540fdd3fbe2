"""
Random parenthesis strings.

Character I of a string of `length` characters is switch c(I), a fair choice
between open and close. Nesting depth is a Peano numeral (z, s(z), ...).

- evidence `balanced`: a left-to-right scan never closes at depth z and ends at z
- query `deep`: the scan reaches depth `level` somewhere, i.e. the largest
  number of unmatched open parentheses is at least `level`

Evidence and query consult the same character switches.
"""
from bench_creation.bench_spec import BenchSpec
from classes.errors import UsageError


def peano(n):
    term = "z"
    for _ in range(n):
        term = f"s({term})"
    return term


def gen_grammar(length, level):
    if length < 1:
        raise UsageError(f"string length must be positive, got {length}")
    if level < 1:
        raise UsageError(f"nesting level must be positive, got {level}")
    end = length + 1
    lines = ["values(c(_), [open,close])."]
    lines.extend(f":- set_sw(c({i}), [0.5,0.5])." for i in range(1, end))
    lines.append("")
    lines.extend(f"next({i},{i + 1})." for i in range(1, end))
    lines.extend([
        "move(open,D,s(D)).",
        "move(close,s(D),D).",
        "step(open,D,s(D)).",
        "step(close,s(D),D).",
        "step(close,z,z).",
        f"scan({end},z).",
        "scan(I,D) :- next(I,J), msw(c(I),C), move(C,D,D1), scan(J,D1).",
        f"climb(_,{peano(level)}).",
        "climb(I,D) :- next(I,J), msw(c(I),C), step(C,D,D1), climb(J,D1).",
        "balanced :- scan(1,z).",
        "deep :- climb(1,z).",
    ])
    text = "\n".join(lines) + "\n"
    return BenchSpec.build("grammar", text, "deep", "balanced", None, length=length, level=level)
