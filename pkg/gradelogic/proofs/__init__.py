"""proofs init"""
from .proof import (Rule, ARITY, DERIVED_RULES, Justification, ProofLine, Proof, parse_justification,
                    load_proof, load_proof_file, dump_proof)
from .tautology import is_tautology, propositional_variables
from .builder import ProofBuilder
from .order import emit_order, prove_order, box_implication, weaken_line
from .derived import expand_derived, expand_proof
from .checker import LineDiagnostic, CheckReport, check_line, check_proof
from .sampling import random_proof, random_grade, random_body
