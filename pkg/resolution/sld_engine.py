"""
Depth-first, left-to-right SLD resolution over a Program.

Resolver is the shared engine behind the sampling evaluator and the
randomized initial-sample search. It keeps:

- a triangular binding store with a trail, so choice points undo bindings
  by truncating the trail
- a world dict of switch-instance outcomes chosen during the search, with
  its own trail (subclasses decide whether outcomes are undone)
- a stack of choice points over clause alternatives, `;` branches and msw
  outcomes

The engine stops at the first derivation. Built-ins: true, fail/false,
`,`/2, `;`/2, `=`/2, `\\=`/2 and integer comparisons. Calls to predicates
without clauses fail.

Subclasses implement _msw_outcomes(key) (the outcomes to try, in order) and
may override _record_outcome(key, outcome).
"""
import logging

from classes.assignment import SwitchInstance
from classes.errors import EvaluationError, StepLimitExceeded
from classes.term import Atom, Compound, Int, Var, format_term, indicator, is_ground, iter_vars, offset_vars
from resolution.unification import resolve, unify_into, walk

logger = logging.getLogger(__name__)

_FAIL = object()

_COMPARISONS = {
    "=:=": lambda a, b: a == b,
    "=\\=": lambda a, b: a != b,
    "<": lambda a, b: a < b,
    ">": lambda a, b: a > b,
    "=<": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
}


class _ChoicePoint:
    __slots__ = ("trail_len", "world_len", "kind", "alternatives", "index", "goal", "rest")

    def __init__(self, trail_len, world_len, kind, alternatives, goal, rest):
        self.trail_len = trail_len
        self.world_len = world_len
        self.kind = kind
        self.alternatives = alternatives
        self.index = 0
        self.goal = goal
        self.rest = rest


class Resolver:

    def __init__(self, prog, step_limit):
        self.prog = prog
        self.step_limit = step_limit
        self.steps = 0
        self.bindings = {}
        self.trail = []
        self.world = {}
        self.world_trail = []
        self.choicepoints = []
        self.next_var = 0

    # region Hooks
    def _msw_outcomes(self, key):
        raise NotImplementedError

    def _record_outcome(self, key, outcome):
        pass

    def _shuffle_clauses(self, clauses):
        return clauses
    # endregion

    def solve(self, goal) -> bool:
        """Runs to the first derivation of goal. Returns False when every branch fails."""
        self.next_var = max((var.id for var in iter_vars(goal)), default=-1) + 1
        goals = (goal, None)
        while True:
            if goals is _FAIL:
                goals = self._backtrack()
                if goals is _FAIL:
                    return False
            if goals is None:
                return True
            term, rest = goals
            goals = self._step(term, rest)

    def _count_step(self):
        self.steps += 1
        if self.steps > self.step_limit:
            raise StepLimitExceeded(
                f"evaluation exceeded {self.step_limit} resolution steps; the SLD tree may be infinite")

    def _step(self, term, rest):
        self._count_step()
        term = walk(term, self.bindings)
        if isinstance(term, Var):
            raise EvaluationError("cannot call an unbound variable")
        if isinstance(term, Int):
            raise EvaluationError(f"cannot call an integer: {term.value}")
        if isinstance(term, Atom):
            if term.name == "true":
                return rest
            if term.name in ("fail", "false"):
                return _FAIL
            return self._call_user(term, rest)

        functor, arity = term.functor, len(term.args)
        if arity == 2:
            left, right = term.args
            if functor == ",":
                return left, (right, rest)
            if functor == ";":
                return self._push(term, rest, "branch", [(left, rest), (right, rest)])
            if functor == "=":
                return rest if unify_into(left, right, self.bindings, self.trail) else _FAIL
            if functor == "\\=":
                mark = len(self.trail)
                unified = unify_into(left, right, self.bindings, self.trail)
                self._undo_bindings(mark)
                return _FAIL if unified else rest
            if functor in _COMPARISONS:
                a, b = self._integer(left, functor), self._integer(right, functor)
                return rest if _COMPARISONS[functor](a, b) else _FAIL
        if functor == "msw" and arity == 3:
            return self._call_msw(term, rest)
        return self._call_user(term, rest)

    def _integer(self, term, functor):
        value = walk(term, self.bindings)
        if not isinstance(value, Int):
            raise EvaluationError(
                f"{functor} needs bound integers, got {format_term(resolve(term, self.bindings))}")
        return value.value

    def _call_msw(self, term, rest):
        switch = resolve(term.args[0], self.bindings)
        instance = resolve(term.args[1], self.bindings)
        if not is_ground(switch) or not is_ground(instance):
            raise EvaluationError(
                f"msw needs a ground switch and instance, got msw({format_term(switch)}, {format_term(instance)}, _)")
        key = SwitchInstance(switch, instance)
        outcomes = self._msw_outcomes(key)
        return self._push(term, rest, "msw", [(key, outcome) for outcome in outcomes])

    def _call_user(self, term, rest):
        clauses = self.prog.clauses_for(indicator(term))
        if not clauses:
            return _FAIL
        candidates = [clause for clause in clauses if self._may_match(term, clause.head)]
        if not candidates:
            return _FAIL
        return self._push(term, rest, "clause", self._shuffle_clauses(candidates))

    def _may_match(self, goal, head):
        # first-argument prefilter
        if not isinstance(goal, Compound):
            return True
        first = walk(goal.args[0], self.bindings)
        other = head.args[0]
        if isinstance(first, Var) or isinstance(other, Var):
            return True
        if isinstance(first, Compound) and isinstance(other, Compound):
            return first.functor == other.functor and len(first.args) == len(other.args)
        return first == other

    # region Choice points
    def _push(self, goal, rest, kind, alternatives):
        if len(alternatives) == 1:
            return self._apply(kind, alternatives[0], goal, rest)
        if not alternatives:
            return _FAIL
        self.choicepoints.append(
            _ChoicePoint(len(self.trail), len(self.world_trail), kind, alternatives, goal, rest))
        return self._backtrack()

    def _backtrack(self):
        while self.choicepoints:
            choicepoint = self.choicepoints[-1]
            self._undo_bindings(choicepoint.trail_len)
            self._undo_world(choicepoint.world_len)
            alternative = choicepoint.alternatives[choicepoint.index]
            choicepoint.index += 1
            if choicepoint.index >= len(choicepoint.alternatives):
                self.choicepoints.pop()
            goals = self._apply(choicepoint.kind, alternative, choicepoint.goal, choicepoint.rest)
            if goals is not _FAIL:
                return goals
            self._count_step()
        return _FAIL

    def _apply(self, kind, alternative, goal, rest):
        if kind == "branch":
            return alternative
        if kind == "msw":
            key, outcome = alternative
            self._record_outcome(key, outcome)
            return rest if unify_into(goal.args[2], outcome, self.bindings, self.trail) else _FAIL
        clause = alternative
        offset = self.next_var
        self.next_var += clause.var_count
        head = offset_vars(clause.head, offset) if clause.var_count else clause.head
        if not unify_into(goal, head, self.bindings, self.trail):
            return _FAIL
        for body_goal in reversed(clause.body):
            rest = (offset_vars(body_goal, offset) if clause.var_count else body_goal), rest
        return rest

    def _undo_bindings(self, mark):
        while len(self.trail) > mark:
            del self.bindings[self.trail.pop()]

    def _undo_world(self, mark):
        while len(self.world_trail) > mark:
            del self.world[self.world_trail.pop()]
    # endregion
