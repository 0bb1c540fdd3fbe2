"""
Recursive-descent parser for the program grammar documented in docs/grammar.md.

parse_program(text) turns program text into a validated Program:

- `H.` and `H :- B1, ..., Bn.` become clauses (bodies may use `;` and parentheses)
- `values(Pattern, [v1, ..., vk]).` becomes a values declaration
- `:- set_sw(Switch, [p1, ..., pk]).` sets a distribution; `N/D` literals allowed
- `msw(S, V)` in a body is normalized to `msw(S, 0, V)`

parse_goal(text) parses a single goal as typed on the command line.
Parsing is deterministic: variables are numbered by first occurrence per clause.
"""
from classes.errors import PLPSyntaxError
from classes.program import Clause, Program, ValuesDecl
from classes.term import NIL, Atom, Compound, INFIX_OPS, Int, Var, list_items, make_list
from program_parsing.tokenizer import tokenize

DEFAULT_INSTANCE = Int(0)


class _Parser:

    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0
        self.var_names = {}
        self.var_count = 0

    # region Token helpers
    def peek(self, offset=0):
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def at(self, kind, text=None):
        token = self.peek()
        return token.kind == kind and (text is None or token.text == text)

    def expect(self, kind, text=None):
        token = self.peek()
        if not self.at(kind, text):
            wanted = text if text is not None else kind
            found = token.text if token.kind != "eof" else "end of input"
            raise PLPSyntaxError(f"expected {wanted!r} but found {found!r}", token.line, token.column)
        return self.advance()

    def error(self, message, token=None):
        token = token or self.peek()
        return PLPSyntaxError(message, token.line, token.column)
    # endregion

    def start_clause(self):
        self.var_names = {}
        self.var_count = 0

    def make_var(self, name):
        if name == "_":
            var = Var(self.var_count, "_")
            self.var_count += 1
            return var
        var = self.var_names.get(name)
        if var is None:
            var = Var(self.var_count, name)
            self.var_count += 1
            self.var_names[name] = var
        return var

    # region Terms
    def parse_disjunction(self):
        left = self.parse_conjunction()
        if self.at("punct", ";"):
            self.advance()
            return Compound(";", (left, self.parse_disjunction()))
        return left

    def parse_conjunction(self):
        left = self.parse_comparison()
        if self.at("punct", ","):
            self.advance()
            return Compound(",", (left, self.parse_conjunction()))
        return left

    def parse_comparison(self):
        left = self.parse_primary()
        token = self.peek()
        if token.kind == "op" and token.text in INFIX_OPS:
            self.advance()
            right = self.parse_primary()
            return Compound(token.text, (left, right))
        return left

    def parse_primary(self):
        token = self.peek()
        if token.kind == "var":
            self.advance()
            return self.make_var(token.text)
        if token.kind == "int":
            self.advance()
            return Int(int(token.text))
        if token.kind == "op" and token.text == "-" and self.peek(1).kind == "int":
            self.advance()
            return Int(-int(self.advance().text))
        if token.kind in ("atom", "qatom"):
            self.advance()
            if self.at("punct", "(") and self.peek().column == token.column + len(token.text) + (2 if token.kind == "qatom" else 0):
                self.advance()
                args = [self.parse_comparison()]
                while self.at("punct", ","):
                    self.advance()
                    args.append(self.parse_comparison())
                self.expect("punct", ")")
                return Compound(token.text, tuple(args))
            return Atom(token.text)
        if token.kind == "punct" and token.text == "[":
            return self.parse_list()
        if token.kind == "punct" and token.text == "(":
            self.advance()
            inner = self.parse_disjunction()
            self.expect("punct", ")")
            return inner
        if token.kind == "float":
            raise self.error("floating point numbers are only allowed in set_sw probability lists")
        found = token.text if token.kind != "eof" else "end of input"
        raise self.error(f"unexpected {found!r}")

    def parse_list(self):
        self.expect("punct", "[")
        if self.at("punct", "]"):
            self.advance()
            return NIL
        items = [self.parse_comparison()]
        while self.at("punct", ","):
            self.advance()
            items.append(self.parse_comparison())
        tail = NIL
        if self.at("op", "|"):
            self.advance()
            tail = self.parse_comparison()
        self.expect("punct", "]")
        return make_list(items, tail)

    def parse_probabilities(self):
        self.expect("punct", "[")
        probabilities = []
        if self.at("punct", "]"):
            self.advance()
            return probabilities
        while True:
            probabilities.append(self.parse_number())
            if self.at("punct", ","):
                self.advance()
                continue
            self.expect("punct", "]")
            return probabilities

    def parse_number(self):
        token = self.peek()
        if token.kind not in ("int", "float"):
            raise self.error(f"expected a probability but found {token.text!r}")
        self.advance()
        value = float(token.text)
        if self.at("op", "/"):
            self.advance()
            denominator = self.peek()
            if denominator.kind not in ("int", "float"):
                raise self.error("expected a denominator")
            self.advance()
            if float(denominator.text) == 0:
                raise self.error("zero denominator in probability", denominator)
            value = value / float(denominator.text)
        return value
    # endregion

    # region Program items
    def parse_program(self):
        clauses = []
        values = []
        settings = []
        while not self.at("eof"):
            self.start_clause()
            if self.at("op", ":-"):
                settings.append(self.parse_directive())
                continue
            start = self.peek()
            head = self.parse_primary()
            if isinstance(head, Compound) and head.functor == "values" and len(head.args) == 2 and self.at("end"):
                self.advance()
                values.append(self.make_values(head, start))
                continue
            if not isinstance(head, (Atom, Compound)):
                raise self.error("clause head must be an atom or compound term", start)
            body = ()
            if self.at("op", ":-"):
                self.advance()
                body = tuple(normalize_msw(goal) for goal in flatten_conjunction(self.parse_disjunction()))
            self.expect("end")
            clauses.append(Clause(head, body, self.var_count))
        return Program.create(clauses, values, settings)

    def parse_directive(self):
        self.expect("op", ":-")
        token = self.peek()
        if not (token.kind == "atom" and token.text == "set_sw"):
            raise self.error("only set_sw directives are supported")
        self.advance()
        self.expect("punct", "(")
        name = self.parse_comparison()
        self.expect("punct", ",")
        probabilities = self.parse_probabilities()
        self.expect("punct", ")")
        self.expect("end")
        return name, probabilities

    def make_values(self, head, token):
        pattern, outcome_list = head.args
        outcomes = list_items(outcome_list)
        if outcomes is None:
            raise self.error("values needs a list of outcomes", token)
        return ValuesDecl(pattern, tuple(outcomes), self.var_count)
    # endregion


def flatten_conjunction(term):
    goals = []
    while isinstance(term, Compound) and term.functor == "," and len(term.args) == 2:
        goals.append(term.args[0])
        term = term.args[1]
    goals.append(term)
    return goals


def normalize_msw(goal):
    if isinstance(goal, Compound):
        if goal.functor == "msw" and len(goal.args) == 2:
            return Compound("msw", (goal.args[0], DEFAULT_INSTANCE, goal.args[1]))
        if goal.functor in (",", ";") and len(goal.args) == 2:
            return Compound(goal.functor, tuple(normalize_msw(arg) for arg in goal.args))
    return goal


def parse_program(text):
    return _Parser(text).parse_program()


def parse_goal(text):
    parser = _Parser(text)
    parser.start_clause()
    goal = parser.parse_disjunction()
    if parser.at("end"):
        parser.advance()
    parser.expect("eof")
    return normalize_msw(goal)


def read_program(path):
    with open(path, "r", encoding="utf-8") as file:
        return parse_program(file.read())
