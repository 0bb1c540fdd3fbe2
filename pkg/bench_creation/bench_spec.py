"""
A generated benchmark: the program, its query and evidence goals, and how it
was made. Every generator in bench_creation returns one.

The manifest written next to a generated program is a small key-value text
file, one `key = value` per line:

    family = bn
    seed = 3
    query = query
    evidence = evidence
    rows = 3
    cols = 3
"""
from dataclasses import dataclass, field

from classes.errors import UsageError
from classes.term import format_term
from program_parsing.parser import parse_goal, parse_program
from program_parsing.printer import write_program


@dataclass
class BenchSpec:
    family: str
    text: str
    query: object
    evidence: object
    seed: object = None
    params: dict = field(default_factory=dict)
    program: object = field(default=None, repr=False)

    def __post_init__(self):
        if self.program is None:
            self.program = parse_program(self.text)

    @classmethod
    def build(cls, family, text, query, evidence, seed=None, **params):
        return cls(family, text, parse_goal(query), parse_goal(evidence), seed, params)

    def manifest(self):
        lines = [f"family = {self.family}",
                 f"seed = {self.seed}",
                 f"query = {format_term(self.query)}",
                 f"evidence = {format_term(self.evidence)}"]
        lines.extend(f"{key} = {value}" for key, value in self.params.items())
        return "\n".join(lines) + "\n"

    def write(self, program_path, manifest_path=None):
        header = f"{self.family} benchmark, seed {self.seed}"
        write_program(self.program, program_path, header)
        if manifest_path:
            with open(manifest_path, "w", encoding="utf-8") as file:
                file.write(self.manifest())

    def __str__(self):
        return (f"_________________________________\n"
                f"Benchmark\t{self.family}\n"
                f"Seed\t\t{self.seed}\n"
                f"Query\t\t{format_term(self.query)}\n"
                f"Evidence\t{format_term(self.evidence)}\n"
                f"Clauses\t\t{len(self.program.clauses)}\n"
                f"Switches\t{len(self.program.distributions)}\n"
                f"_________________________________")


def read_manifest(path):
    values = {}
    with open(path, "r", encoding="utf-8") as file:
        for number, line in enumerate(file, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise UsageError(f"{path}:{number}: expected key = value")
            values[key.strip()] = value.strip()
    return values


def ratio(numerator, denominator=1000):
    """Rational probability literal for program text."""
    return f"{numerator}/{denominator}"
