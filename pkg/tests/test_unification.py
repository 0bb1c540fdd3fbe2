import itertools

from classes.term import Atom, Compound, Var
from resolution.unification import resolve, unify

X, Y, Z = Var(0, "X"), Var(1, "Y"), Var(2, "Z")
a, b = Atom("a"), Atom("b")


def f(*args):
    return Compound("f", args)


def test_textbook_mgu():
    theta = unify(f(X, b), f(a, Y))
    assert theta == {X: a, Y: b}


def test_clash():
    assert unify(a, b) is None
    assert unify(f(a), Compound("g", (a,))) is None
    assert unify(f(a), f(a, b)) is None


def test_occurs_check():
    assert unify(X, f(X)) is None
    assert unify(f(X, Y), f(Y, f(X))) is None


def test_extends_theta():
    theta = unify(X, a)
    assert unify(f(X), f(b), theta) is None
    assert unify(f(X, Y), f(a, b), theta) == {X: a, Y: b}


def test_result_is_idempotent():
    theta = unify(f(X, Y, Z), f(Y, Z, a))
    for var in (X, Y, Z):
        assert resolve(theta[var], theta) == theta[var]
        assert theta[var] == a


def test_symmetric_success():
    terms = [a, b, X, Y, f(X), f(a), f(X, Y), f(Y, X), f(f(X)), f(a, b), f(X, X)]
    for left, right in itertools.product(terms, repeat=2):
        assert (unify(left, right) is None) == (unify(right, left) is None)
