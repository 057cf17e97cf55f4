"""formulas init"""
from .ast import (Formula, Atom, Const, Not, And, Or, Implies, Iff, Box, RESERVED_ATOM, TRUE, FALSE, P0,
                  conjoin, implies_chain, formula_key, same_formula)
from .analysis import FormulaStats, analyze, atoms_of, grades_of, modal_depth, subformulas
from .grammar import parse_formula, parse_grade, check_formula
from .printer import print_formula, print_grade, print_nf
