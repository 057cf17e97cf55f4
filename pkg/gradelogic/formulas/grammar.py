"""
Concrete syntax of formulas and grade expressions.

Precedence, tightest first: ``!`` and ``[g]`` prefixes, ``&``, ``|``,
``->`` (right-associative), ``<->`` (left-associative). Inside brackets ``&``
is lattice meet and ``|`` lattice join.
"""
from lark import Lark, Transformer
from lark.exceptions import UnexpectedInput, UnexpectedEOF

from gradelogic.grades import Leaf, Meet, Join, check_expr
from gradelogic.utils import ParseError, get_logger
from .ast import Atom, Box, Not, And, Or, Implies, Iff, TRUE, FALSE
from .analysis import grades_of

__all__ = ['GRAMMAR', 'parse_formula', 'parse_grade', 'check_formula']

logger = get_logger(__name__)

GRAMMAR = r"""
    ?formula: iff

    ?iff: imp
        | iff "<->" imp             -> iff

    ?imp: disj
        | disj "->" imp             -> implies

    ?disj: conj
         | disj "|" conj            -> or_

    ?conj: unary
         | conj "&" unary           -> and_

    ?unary: "!" unary               -> not_
          | "[" grade "]" unary     -> box
          | primary

    ?primary: "true"                -> true
            | "false"               -> false
            | NAME                  -> atom
            | "(" iff ")"

    ?grade: gjoin

    ?gjoin: gmeet
          | gjoin "|" gmeet         -> join

    ?gmeet: gatom
          | gmeet "&" gatom         -> meet

    ?gatom: NAME                    -> leaf
          | "(" gjoin ")"

    NAME: /[A-Za-z][A-Za-z0-9_]*/

    %import common.WS
    %ignore WS
"""


class _ToAst(Transformer):
    """Build formula and grade nodes from the parse tree."""

    def iff(self, children):
        return Iff(*children)

    def implies(self, children):
        return Implies(*children)

    def or_(self, children):
        return Or(*children)

    def and_(self, children):
        return And(*children)

    def not_(self, children):
        return Not(children[0])

    def box(self, children):
        return Box(children[0], children[1])

    def true(self, _):
        return TRUE

    def false(self, _):
        return FALSE

    def atom(self, children):
        return Atom(str(children[0]))

    def leaf(self, children):
        return Leaf(str(children[0]))

    def meet(self, children):
        return Meet(*children)

    def join(self, children):
        return Join(*children)


_PARSER = Lark(GRAMMAR, start=['formula', 'grade'], parser='lalr', transformer=_ToAst())


def _parse(text, start):
    try:
        return _PARSER.parse(text, start=start)
    except UnexpectedEOF as err:
        raise ParseError(f"unexpected end of input, expected one of {sorted(err.expected)}") from err
    except UnexpectedInput as err:
        line = err.line if err.line and err.line > 0 else None
        column = err.column if err.column and err.column > 0 else None
        context = err.get_context(text).splitlines()[0].strip() if text else ''
        raise ParseError(f"unexpected input near '{context}'", line, column) from err


def check_formula(poset, formula):
    """Raise UndeclaredGeneratorError if a box of ``formula`` names an unknown generator."""
    for grade in grades_of(formula):
        check_expr(poset, grade)
    return formula


def parse_formula(text, poset=None):
    """
    Parse a formula.

    Args:
        text (str): Surface syntax, e.g. ``[alpha & gamma] ill | [beta & delta] ill``.
        poset (GeneratorPoset): If given, box grades are checked against it.

    Returns:
        Formula.

    Raises:
        ParseError: Malformed text, with line and column.
        UndeclaredGeneratorError: A box names a generator ``poset`` lacks.

    Examples:
        >>> parse_formula('[alpha][gamma] !mary_coming')
        Box(grade=Leaf(name='alpha'), body=Box(grade=Leaf(name='gamma'), body=Not(body=Atom(name='mary_coming'))))
    """
    formula = _parse(text, 'formula')
    if poset is not None:
        check_formula(poset, formula)
    return formula


def parse_grade(text, poset=None):
    """Parse a grade expression such as ``(alpha | beta) & gamma``."""
    expr = _parse(text, 'grade')
    if poset is not None:
        check_expr(poset, expr)
    return expr
