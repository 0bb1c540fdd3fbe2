"""
Abstract syntax of the PRISM-style mini-language.

A term is one of four immutable value types:

- Atom(name)                 constants such as `a`, `t`, `[]`
- Int(value)                 integer constants
- Var(id, name)              logic variables; identity is the integer id only
- Compound(functor, args)    structures with at least one argument

Switch names, instances and outcomes are ground terms. Terms compare and hash
structurally, so they can key dictionaries (assignments, Q-values, program
indexes) directly.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterator, Union


@dataclass(frozen=True, slots=True)
class Atom:
    name: str

    def __str__(self):
        return format_term(self)


@dataclass(frozen=True, slots=True)
class Int:
    value: int

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True, slots=True)
class Var:
    id: int
    name: str = field(default="", compare=False)

    def __str__(self):
        return format_term(self)


@dataclass(frozen=True, slots=True)
class Compound:
    functor: str
    args: tuple

    def __post_init__(self):
        if not self.args:
            raise ValueError(f"compound term {self.functor!r} needs at least one argument")

    @property
    def arity(self):
        return len(self.args)

    def __str__(self):
        return format_term(self)


Term = Union[Atom, Int, Var, Compound]

NIL = Atom("[]")
TRUE = Atom("true")
LIST_FUNCTOR = "."

# Binary operators the parser accepts inside clause bodies
COMPARISON_OPS = ("=:=", "=\\=", "=<", ">=", "<", ">")
INFIX_OPS = ("=", "\\=") + COMPARISON_OPS

_PLAIN_ATOM = re.compile(r"^[a-z][A-Za-z0-9_]*$")


def atom(name: str) -> Atom:
    return Atom(name)


def compound(functor: str, *args: Term) -> Term:
    """Builds a compound, or an atom when no arguments are given."""
    if not args:
        return Atom(functor)
    return Compound(functor, tuple(args))


def make_list(items, tail: Term = NIL) -> Term:
    result = tail
    for item in reversed(list(items)):
        result = Compound(LIST_FUNCTOR, (item, result))
    return result


def list_items(term: Term):
    """Returns the elements of a proper list term, or None if it is not one."""
    items = []
    while isinstance(term, Compound) and term.functor == LIST_FUNCTOR and len(term.args) == 2:
        items.append(term.args[0])
        term = term.args[1]
    if term == NIL:
        return items
    return None


def indicator(term: Term):
    """(functor, arity) of a callable term."""
    if isinstance(term, Atom):
        return term.name, 0
    if isinstance(term, Compound):
        return term.functor, len(term.args)
    return None


def is_ground(term: Term) -> bool:
    if isinstance(term, Var):
        return False
    if isinstance(term, Compound):
        return all(is_ground(arg) for arg in term.args)
    return True


def iter_vars(term: Term) -> Iterator[Var]:
    if isinstance(term, Var):
        yield term
    elif isinstance(term, Compound):
        for arg in term.args:
            yield from iter_vars(arg)


def map_vars(term: Term, fn: Callable[[Var], Term]) -> Term:
    if isinstance(term, Var):
        return fn(term)
    if isinstance(term, Compound):
        return Compound(term.functor, tuple(map_vars(arg, fn) for arg in term.args))
    return term


def offset_vars(term: Term, offset: int) -> Term:
    """Renames every Var(k) to Var(k + offset); used to take fresh clause copies."""
    if isinstance(term, Var):
        return Var(term.id + offset, term.name)
    if isinstance(term, Compound):
        return Compound(term.functor, tuple(offset_vars(arg, offset) for arg in term.args))
    return term


def format_atom(name: str) -> str:
    if _PLAIN_ATOM.match(name) or name in ("[]", "!", ";", ","):
        return name
    escaped = name.replace("\\", "\\\\").replace("'", "\\'")
    return f"'{escaped}'"


def format_term(term: Term) -> str:
    if isinstance(term, Atom):
        return format_atom(term.name)
    if isinstance(term, Int):
        return str(term.value)
    if isinstance(term, Var):
        if term.name and term.name != "_":
            return term.name
        return f"_G{term.id}"
    if term.functor == LIST_FUNCTOR and len(term.args) == 2:
        return _format_list(term)
    if term.functor in INFIX_OPS and len(term.args) == 2:
        return f"{_format_operand(term.args[0])} {term.functor} {_format_operand(term.args[1])}"
    if term.functor in (",", ";") and len(term.args) == 2:
        return f"({format_term(term.args[0])}{term.functor} {format_term(term.args[1])})"
    inner = ", ".join(format_term(arg) for arg in term.args)
    return f"{format_atom(term.functor)}({inner})"


def _format_operand(term: Term) -> str:
    text = format_term(term)
    if isinstance(term, Compound) and term.functor in INFIX_OPS and len(term.args) == 2:
        return f"({text})"
    return text


def _format_list(term: Compound) -> str:
    items = []
    while isinstance(term, Compound) and term.functor == LIST_FUNCTOR and len(term.args) == 2:
        items.append(format_term(term.args[0]))
        term = term.args[1]
    if term == NIL:
        return "[" + ", ".join(items) + "]"
    return "[" + ", ".join(items) + " | " + format_term(term) + "]"
