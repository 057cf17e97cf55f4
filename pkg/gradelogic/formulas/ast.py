"""
Formulas of the graded multimodal language.

Nodes are immutable and hashable; grade parameters of boxes are kept as the
expressions written by the user, and compared through :func:`formula_key`.
"""
from dataclasses import dataclass
from functools import lru_cache, reduce

from gradelogic.grades import GradeExpr, normalize

__all__ = [
    'Formula', 'Atom', 'Const', 'Not', 'And', 'Or', 'Implies', 'Iff', 'Box',
    'RESERVED_ATOM', 'TRUE', 'FALSE', 'P0', 'conjoin', 'implies_chain', 'formula_key', 'same_formula',
]

RESERVED_ATOM = 'p0'


class Formula:
    """Base class of formula nodes."""
    __slots__ = ()


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Const(Formula):
    value: bool


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Box(Formula):
    """``[grade] body``: body is known with at least the given grade."""
    grade: GradeExpr
    body: Formula


TRUE = Const(True)
FALSE = Const(False)
P0 = Atom(RESERVED_ATOM)

_BINARY = {And: 'and', Or: 'or', Implies: 'implies', Iff: 'iff'}


def conjoin(formulas):
    """Left-associated conjunction of a non-empty sequence."""
    return reduce(And, formulas)


def implies_chain(premises, conclusion):
    """``p1 -> (p2 -> ... -> conclusion)``."""
    result = conclusion
    for premise in reversed(list(premises)):
        result = Implies(premise, result)
    return result


@lru_cache(maxsize=65536)
def formula_key(poset, formula):
    """
    Structural key of ``formula`` with every box grade replaced by its normal form.

    Two formulas get equal keys iff they are identical up to the equivalence
    of their grade parameters.
    """
    if isinstance(formula, Atom):
        return ('atom', formula.name)
    if isinstance(formula, Const):
        return ('const', formula.value)
    if isinstance(formula, Not):
        return ('not', formula_key(poset, formula.body))
    if isinstance(formula, Box):
        return ('box', normalize(poset, formula.grade), formula_key(poset, formula.body))
    tag = _BINARY.get(type(formula))
    if tag is None:
        raise TypeError(f"not a formula: {formula!r}")
    return (tag, formula_key(poset, formula.left), formula_key(poset, formula.right))


def same_formula(poset, first, second):
    """True iff the formulas are equal up to equivalent grades."""
    return first == second or formula_key(poset, first) == formula_key(poset, second)
