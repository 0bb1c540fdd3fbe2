"""
Writes a Program back out as program text.

format_program(prog) produces text that parse_program() reads back into an
equal Program. The benchmark generators write their files through it.
"""
from classes.term import format_term


def format_probability(p):
    text = repr(float(p))
    if "e" in text and "." not in text.split("e")[0]:
        mantissa, exponent = text.split("e")
        text = f"{mantissa}.0e{exponent}"
    return text


def format_clause(clause):
    head = format_term(clause.head)
    if clause.is_fact:
        return f"{head}."
    body = ", ".join(format_term(goal) for goal in clause.body)
    return f"{head} :- {body}."


def format_values(decl):
    outcomes = ", ".join(format_term(outcome) for outcome in decl.outcomes)
    return f"values({format_term(decl.pattern)}, [{outcomes}])."


def format_setting(name, probabilities):
    numbers = ", ".join(format_probability(p) for p in probabilities)
    return f":- set_sw({format_term(name)}, [{numbers}])."


def format_program(prog, header=None):
    lines = []
    if header:
        lines.extend(f"% {line}" for line in header.splitlines())
        lines.append("")
    for decl in prog.values:
        lines.append(format_values(decl))
    for name, probabilities in prog.distributions.items():
        lines.append(format_setting(name, probabilities))
    if prog.values or prog.distributions:
        lines.append("")
    for clause in prog.clauses:
        lines.append(format_clause(clause))
    return "\n".join(lines) + "\n"


def write_program(prog, path, header=None):
    with open(path, "w", encoding="utf-8") as file:
        file.write(format_program(prog, header))
