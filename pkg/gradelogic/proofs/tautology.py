"""
Classical tautology check over box-atoms.

Atoms and maximal boxed subformulas are the propositional variables; boxes
whose grades are equivalent and whose bodies agree are the same variable.
Validity is decided by asking z3 for a falsifying assignment.
"""
import z3

from gradelogic.formulas import Atom, Const, Not, And, Or, Implies, Iff, Box, formula_key
from gradelogic.utils import GuardExceededError

__all__ = ['propositional_variables', 'is_tautology', 'DEFAULT_MAX_VARIABLES']

DEFAULT_MAX_VARIABLES = 1000
# milliseconds
SOLVER_TIMEOUT = 10000


def propositional_variables(poset, formula):
    """Map each variable key to its column, in order of first occurrence."""
    columns = {}

    def _walk(node):
        if isinstance(node, (Atom, Box)):
            columns.setdefault(formula_key(poset, node), len(columns))
        elif isinstance(node, Not):
            _walk(node.body)
        elif not isinstance(node, Const):
            _walk(node.left)
            _walk(node.right)

    _walk(formula)
    return columns


def _to_z3(poset, formula, columns):
    cache = {}

    def _build(node):
        if isinstance(node, (Atom, Box)):
            return z3.Bool(f'v{columns[formula_key(poset, node)]}')
        if isinstance(node, Const):
            return z3.BoolVal(node.value)
        if isinstance(node, Not):
            return z3.Not(_cached(node.body))
        left, right = _cached(node.left), _cached(node.right)
        if isinstance(node, And):
            return z3.And(left, right)
        if isinstance(node, Or):
            return z3.Or(left, right)
        if isinstance(node, Implies):
            return z3.Implies(left, right)
        if isinstance(node, Iff):
            return left == right
        raise TypeError(f"not a formula: {node!r}")

    def _cached(node):
        if node not in cache:
            cache[node] = _build(node)
        return cache[node]

    return _cached(formula)


def is_tautology(poset, formula, max_variables=DEFAULT_MAX_VARIABLES):
    """
    Decide whether ``formula`` holds under every assignment to its variables.

    Raises:
        GuardExceededError: More than ``max_variables`` variables, or the
            solver gave up within its time limit.
    """
    columns = propositional_variables(poset, formula)
    count = len(columns)
    if count > max_variables:
        raise GuardExceededError(f"tautology check is limited to {max_variables} variables, formula has {count}")
    solver = z3.Solver()
    solver.set('timeout', SOLVER_TIMEOUT)
    solver.add(z3.Not(_to_z3(poset, formula, columns)))
    verdict = solver.check()
    if verdict == z3.unknown:
        raise GuardExceededError(f"tautology check gave up: {solver.reason_unknown()}")
    return verdict == z3.unsat
