"""
Unification with occurs-check.

Two entry points share one algorithm:

- unify(t1, t2, theta): functional, returns a new idempotent substitution or
  None. This is the operation the rest of the package and the tests use when
  they need an mgu.
- unify_into(t1, t2, bindings, trail): destructive variant used by the SLD
  engine. It binds variables in a triangular `bindings` dict and appends every
  bound variable to `trail`, so a choice point can undo bindings by truncating.
"""
from classes.term import Compound, Term, Var


def walk(term: Term, bindings: dict) -> Term:
    while isinstance(term, Var):
        bound = bindings.get(term)
        if bound is None:
            return term
        term = bound
    return term


def resolve(term: Term, bindings: dict) -> Term:
    """Applies the substitution all the way down."""
    term = walk(term, bindings)
    if isinstance(term, Compound):
        return Compound(term.functor, tuple(resolve(arg, bindings) for arg in term.args))
    return term


def occurs(var: Var, term: Term, bindings: dict) -> bool:
    term = walk(term, bindings)
    if term == var:
        return True
    if isinstance(term, Compound):
        return any(occurs(var, arg, bindings) for arg in term.args)
    return False


def unify_into(t1: Term, t2: Term, bindings: dict, trail: list) -> bool:
    stack = [(t1, t2)]
    while stack:
        a, b = stack.pop()
        a = walk(a, bindings)
        b = walk(b, bindings)
        if a == b:
            continue
        if isinstance(a, Var):
            if occurs(a, b, bindings):
                return False
            bindings[a] = b
            trail.append(a)
        elif isinstance(b, Var):
            if occurs(b, a, bindings):
                return False
            bindings[b] = a
            trail.append(b)
        elif isinstance(a, Compound) and isinstance(b, Compound):
            if a.functor != b.functor or len(a.args) != len(b.args):
                return False
            stack.extend(zip(a.args, b.args))
        else:
            return False
    return True


def unify(t1: Term, t2: Term, theta: dict = None):
    """Most general unifier of t1 and t2 extending theta, or None on failure."""
    bindings = dict(theta) if theta else {}
    if not unify_into(t1, t2, bindings, []):
        return None
    return {var: resolve(var, bindings) for var in bindings}
