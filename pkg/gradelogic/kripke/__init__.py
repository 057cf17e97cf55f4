"""kripke init"""
from .interpretation import (RawInterpretation, Interpretation, validate_interpretation, derive_relation,
                             parse_interpretation, load_interpretation, load_interpretation_file,
                             dump_interpretation)
from .semantics import evaluate, box_truth, satisfies, valid_in
from .search import SearchMode, Verdict, find_countermodel, random_interpretation, world_names, exhaustive_candidates
