"""grades init"""
from .poset import GeneratorPoset, load_poset, load_poset_file, poset_leq, IDENTIFIER
from .expr import GradeExpr, Leaf, Meet, Join, leaves, expr_depth, meet_all, join_all, check_expr
from .lattice import (GradeNF, normalize, grade_leq, meet, join, to_expr, generator_nf, top_nf,
                      clause_leq, enumerate_lattice, LatticeEnumeration)
from .oracle import oracle_leq, monotone_valuations
