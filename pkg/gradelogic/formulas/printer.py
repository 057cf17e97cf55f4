"""Minimal-parenthesis rendering of formulas and grades."""
from gradelogic.grades import Leaf, Meet, Join
from .ast import Atom, Const, Not, And, Or, Implies, Iff, Box

__all__ = ['print_formula', 'print_grade', 'print_nf']

# binding strength, loosest first
_IFF, _IMP, _OR, _AND, _UNARY = 1, 2, 3, 4, 5
_G_JOIN, _G_MEET, _G_LEAF = 1, 2, 3

_FORMULA_OPS = {Iff: (' <-> ', _IFF), Implies: (' -> ', _IMP), Or: (' | ', _OR), And: (' & ', _AND)}


def _grade(expr):
    """Return (text, level) of a grade expression."""
    if isinstance(expr, Leaf):
        return expr.name, _G_LEAF
    if isinstance(expr, Meet):
        symbol, level = ' & ', _G_MEET
    elif isinstance(expr, Join):
        symbol, level = ' | ', _G_JOIN
    else:
        raise TypeError(f"not a grade expression: {expr!r}")
    return _infix(_grade(expr.left), symbol, _grade(expr.right), level, left_assoc=True), level


def _wrap(rendered, minimum):
    text, level = rendered
    return text if level >= minimum else f'({text})'


def _infix(left, symbol, right, level, left_assoc):
    if left_assoc:
        return _wrap(left, level) + symbol + _wrap(right, level + 1)
    return _wrap(left, level + 1) + symbol + _wrap(right, level)


def _formula(node):
    """Return (text, level) of a formula."""
    if isinstance(node, Atom):
        return node.name, _UNARY
    if isinstance(node, Const):
        return ('true' if node.value else 'false'), _UNARY
    if isinstance(node, Not):
        return '!' + _wrap(_formula(node.body), _UNARY), _UNARY
    if isinstance(node, Box):
        return f'[{print_grade(node.grade)}] ' + _wrap(_formula(node.body), _UNARY), _UNARY
    symbol, level = _FORMULA_OPS[type(node)]
    text = _infix(_formula(node.left), symbol, _formula(node.right), level, left_assoc=not isinstance(node, Implies))
    return text, level


def print_grade(expr):
    """Render a grade expression, e.g. ``(alpha | beta) & gamma``."""
    return _grade(expr)[0]


def print_formula(formula):
    """
    Render a formula with the fewest parentheses that parse back to it.

    Examples:
        >>> print_formula(Implies(Box(Leaf('alpha'), Atom('p')), Box(Leaf('beta'), Atom('q'))))
        '[alpha] p -> [beta] q'
    """
    return _formula(formula)[0]


def print_nf(nf):
    """Render a normal form, e.g. ``(alpha & gamma) | (beta & delta)``."""
    return nf.render()
