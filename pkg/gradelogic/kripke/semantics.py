"""Satisfaction and validity of formulas in an interpretation."""
import numpy as np

from gradelogic.formulas import Atom, Const, Not, And, Or, Implies, Iff, Box
from .interpretation import derive_relation

__all__ = ['evaluate', 'box_truth', 'satisfies', 'valid_in']


def box_truth(relation, body):
    """Worlds all of whose successors satisfy ``body``."""
    return ~np.any(relation & ~body[None, :], axis=1)


def evaluate(interpretation, formula):
    """
    Truth value of ``formula`` at every world.

    Returns:
        numpy.ndarray, bool vector indexed like ``interpretation.worlds``.
    """
    relations = {}

    def _relation(grade):
        if grade not in relations:
            relations[grade] = derive_relation(interpretation, grade)
        return relations[grade]

    def _eval(node):
        if isinstance(node, Atom):
            return interpretation.atom_vector(node.name)
        if isinstance(node, Const):
            return np.full(interpretation.size, node.value, dtype=bool)
        if isinstance(node, Not):
            return ~_eval(node.body)
        if isinstance(node, Box):
            return box_truth(_relation(node.grade), _eval(node.body))
        left, right = _eval(node.left), _eval(node.right)
        if isinstance(node, And):
            return left & right
        if isinstance(node, Or):
            return left | right
        if isinstance(node, Implies):
            return ~left | right
        if isinstance(node, Iff):
            return left == right
        raise TypeError(f"not a formula: {node!r}")

    return _eval(formula)


def satisfies(interpretation, world, formula):
    """``I, w |= f``; atoms absent from the valuation are false."""
    return bool(evaluate(interpretation, formula)[interpretation.index(world)])


def valid_in(interpretation, formula):
    """
    Validity in an interpretation.

    Returns:
        tuple, (valid, first failing world or None).
    """
    failing = np.flatnonzero(~evaluate(interpretation, formula))
    if len(failing):
        return False, interpretation.worlds[failing[0]]
    return True, None
