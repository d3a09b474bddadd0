"""Terms over one n-ary symbol ``f`` and the derived binary symbol ``a``."""
from dataclasses import dataclass

import numpy as np
import pyparsing as pp

from magma_forge import caps
from magma_forge.core.magma import tuple_array
from magma_forge.errors import ArityMismatch, ParseError


@dataclass(frozen=True)
class Term:
    symbol: str  # "x" for a variable, "f" or "a" for an application
    index: int = 0
    children: tuple = ()

    def __post_init__(self):
        if self.symbol == "a" and len(self.children) != 2:
            raise ArityMismatch(f"the derived binary symbol takes 2 arguments, got {len(self.children)}")
        if self.symbol == "x" and self.children:
            raise ArityMismatch("a variable has no arguments")

    @property
    def max_variable(self):
        if self.symbol == "x":
            return self.index
        return max(child.max_variable for child in self.children)

    def __str__(self):
        if self.symbol == "x":
            return f"x{self.index + 1}"
        return f"{self.symbol}({', '.join(str(c) for c in self.children)})"


def var(i):
    return Term("x", i)


def f(*children):
    return Term("f", children=tuple(children))


def a(left, right):
    return Term("a", children=(left, right))


def _grammar():
    term = pp.Forward()
    variable = pp.Regex(r"x[1-9]").set_parse_action(lambda t: var(int(t[0][1:]) - 1))
    symbol = pp.one_of("f a")
    args = pp.Suppress("(") + pp.Group(pp.DelimitedList(term)) + pp.Suppress(")")
    application = (symbol + args).set_parse_action(lambda t: Term(t[0], children=tuple(t[1])))
    term <<= application | variable
    return term


_TERM = _grammar()


def parse_term(text):
    try:
        return _TERM.parse_string(text, parse_all=True)[0]
    except pp.ParseException as e:
        raise ParseError(f"cannot parse term {text!r}: {e}")


def _values(A, term, columns):
    if term.symbol == "x":
        return columns[term.index]
    vals = [_values(A, child, columns) for child in term.children]
    m, n = A.order, A.arity
    if term.symbol == "f":
        if len(vals) != n:
            raise ArityMismatch(f"f takes {n} arguments here, got {len(vals)}")
        index = np.zeros_like(vals[0])
        for v in vals:
            index = index * m + v
        return A.table[index]
    if n < 2:
        raise ArityMismatch("the derived binary symbol needs arity at least 2")
    tail = sum(m ** j for j in range(n - 1))
    return A.table[vals[0] * m ** (n - 1) + vals[1] * tail]


def evaluate(A, term, assignment):
    columns = [np.array([int(v)]) for v in assignment]
    if term.max_variable >= len(columns):
        raise ArityMismatch(f"term uses x{term.max_variable + 1} but only {len(columns)} values were given")
    return int(_values(A, term, columns)[0])


@dataclass(frozen=True)
class IdentityResult:
    holds: bool
    witness: tuple = None
    lhs_value: int = None
    rhs_value: int = None
    failures: int = 0


def check_identity(A, lhs, rhs, vars=None):
    needed = max(lhs.max_variable, rhs.max_variable) + 1
    vars = needed if vars is None else vars
    if needed > vars:
        raise ArityMismatch(f"terms use {needed} variables but only {vars} were declared")
    caps.check("identity assignments", A.order ** vars)
    assignments = tuple_array(A.order, vars)
    columns = [assignments[:, i] for i in range(vars)]
    left = np.broadcast_to(_values(A, lhs, columns), (len(assignments),))
    right = np.broadcast_to(_values(A, rhs, columns), (len(assignments),))
    failing = np.nonzero(left != right)[0]
    if not failing.size:
        return IdentityResult(True)
    # assignments with pairwise-distinct values come first
    ordered = np.sort(assignments[failing], axis=1)
    distinct = (np.diff(ordered, axis=1) != 0).all(axis=1)
    first = int(failing[np.argmax(distinct)]) if distinct.any() else int(failing[0])
    return IdentityResult(
        holds=False,
        witness=tuple(int(v) for v in assignments[first]),
        lhs_value=int(left[first]),
        rhs_value=int(right[first]),
        failures=int(failing.size),
    )
