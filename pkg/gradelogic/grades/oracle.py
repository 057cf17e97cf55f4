"""
Independent decision procedure for the lattice order.

A distributive lattice is separated by its order-preserving maps into the
two-element lattice, so ``e1 <= e2`` holds iff it holds under every monotone
0/1 assignment to the generators.
"""
from functools import lru_cache

import numpy as np

from gradelogic.utils import GuardExceededError
from .expr import Leaf, Meet, Join, check_expr

__all__ = ['monotone_valuations', 'evaluate_valuations', 'oracle_leq', 'DEFAULT_ORACLE_MAX_GENERATORS']

DEFAULT_ORACLE_MAX_GENERATORS = 16


@lru_cache(maxsize=32)
def monotone_valuations(poset):
    """
    Every monotone 0/1 assignment to the generators.

    Returns:
        numpy.ndarray, bool matrix of shape (valuations, generators), columns
        in ``poset.generators`` order.
    """
    size = len(poset.generators)
    codes = np.arange(1 << size, dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(size)) & 1).astype(bool)
    column = {name: i for i, name in enumerate(poset.generators)}
    keep = np.ones(len(bits), dtype=bool)
    for low, high in poset.closure:
        keep &= ~(bits[:, column[low]] & ~bits[:, column[high]])
    bits = bits[keep]
    bits.setflags(write=False)
    return bits


def evaluate_valuations(poset, expr, valuations=None):
    """Value of ``expr`` under each valuation row (meet is min, join is max)."""
    if valuations is None:
        valuations = monotone_valuations(poset)
    column = {name: i for i, name in enumerate(poset.generators)}

    def _eval(node):
        if isinstance(node, Leaf):
            return valuations[:, column[node.name]]
        if isinstance(node, Meet):
            return _eval(node.left) & _eval(node.right)
        if isinstance(node, Join):
            return _eval(node.left) | _eval(node.right)
        raise TypeError(f"not a grade expression: {node!r}")

    return _eval(expr)


def oracle_leq(poset, low, high, max_generators=DEFAULT_ORACLE_MAX_GENERATORS):
    """
    Decide ``low <= high`` by brute force over monotone valuations.

    Args:
        poset (GeneratorPoset): The generators.
        low (GradeExpr): Left expression.
        high (GradeExpr): Right expression.
        max_generators (int): Size guard; the work is exponential in it.

    Returns:
        bool.

    Raises:
        GuardExceededError: The poset has more than ``max_generators`` generators.
    """
    if len(poset.generators) > max_generators:
        raise GuardExceededError(
            f"oracle is limited to {max_generators} generators, poset has {len(poset.generators)}")
    check_expr(poset, low)
    check_expr(poset, high)
    valuations = monotone_valuations(poset)
    return bool(np.all(~evaluate_valuations(poset, low, valuations) | evaluate_valuations(poset, high, valuations)))
