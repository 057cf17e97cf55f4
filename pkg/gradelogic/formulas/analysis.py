"""Static statistics of a formula."""
from dataclasses import dataclass

from gradelogic.grades import expr_depth

from .ast import Atom, Const, Not, Box, RESERVED_ATOM

__all__ = ['FormulaStats', 'analyze', 'atoms_of', 'grades_of', 'modal_depth', 'subformulas']


@dataclass(frozen=True)
class FormulaStats:
    """
    Args:
        atoms (tuple[str]): Sorted atom ids.
        uses_reserved (bool): Whether the reserved atom p0 occurs.
        modal_depth (int): Maximal nesting of boxes.
        grades (tuple[GradeExpr]): Box parameters in order of first occurrence.
        grade_depth (int): Deepest meet/join nesting among the box parameters.
    """
    atoms: tuple
    uses_reserved: bool
    modal_depth: int
    grades: tuple
    grade_depth: int


def subformulas(formula):
    """Yield every subformula, pre-order."""
    stack = [formula]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, (Atom, Const)):
            continue
        if isinstance(node, (Not, Box)):
            stack.append(node.body)
        else:
            stack.append(node.right)
            stack.append(node.left)


def atoms_of(formula):
    return sorted({node.name for node in subformulas(formula) if isinstance(node, Atom)})


def grades_of(formula):
    found = []
    for node in subformulas(formula):
        if isinstance(node, Box) and node.grade not in found:
            found.append(node.grade)
    return found


def modal_depth(formula):
    if isinstance(formula, (Atom, Const)):
        return 0
    if isinstance(formula, Box):
        return 1 + modal_depth(formula.body)
    if isinstance(formula, Not):
        return modal_depth(formula.body)
    return max(modal_depth(formula.left), modal_depth(formula.right))


def analyze(formula):
    """
    Collect atoms, the reserved-atom flag, modal depth, grade parameters and
    their nesting depth.

    Examples:
        >>> analyze(parse_formula('[alpha][gamma] !m')).modal_depth
        2
    """
    atoms = atoms_of(formula)
    grades = tuple(grades_of(formula))
    return FormulaStats(atoms=tuple(atoms), uses_reserved=RESERVED_ATOM in atoms,
                        modal_depth=modal_depth(formula), grades=grades,
                        grade_depth=max((expr_depth(grade) for grade in grades), default=0))
