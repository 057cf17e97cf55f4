"""Grade expressions over the generators: leaves, meets and joins."""
from dataclasses import dataclass
from functools import reduce

__all__ = ['GradeExpr', 'Leaf', 'Meet', 'Join', 'leaves', 'expr_depth', 'meet_all', 'join_all', 'check_expr']


class GradeExpr:
    """Base class of grade expression nodes."""
    __slots__ = ()


@dataclass(frozen=True)
class Leaf(GradeExpr):
    """A generator."""
    name: str


@dataclass(frozen=True)
class Meet(GradeExpr):
    """Greatest lower bound of two grades."""
    left: GradeExpr
    right: GradeExpr


@dataclass(frozen=True)
class Join(GradeExpr):
    """Least upper bound of two grades."""
    left: GradeExpr
    right: GradeExpr


def leaves(expr):
    """Generator ids occurring in ``expr``, in order of first occurrence."""
    found = []
    stack = [expr]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            if node.name not in found:
                found.append(node.name)
        else:
            stack.append(node.right)
            stack.append(node.left)
    return found


def expr_depth(expr):
    """Nesting depth; a leaf has depth 0."""
    if isinstance(expr, Leaf):
        return 0
    return 1 + max(expr_depth(expr.left), expr_depth(expr.right))


def meet_all(exprs):
    """Left-associated meet of a non-empty sequence."""
    return reduce(Meet, exprs)


def join_all(exprs):
    """Left-associated join of a non-empty sequence."""
    return reduce(Join, exprs)


def check_expr(poset, expr):
    """Raise UndeclaredGeneratorError if ``expr`` names an unknown generator."""
    for name in leaves(expr):
        poset.check(name)
    return expr
