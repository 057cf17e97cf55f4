"""engine init"""
from .kb import Fact, HornRule, KnowledgeBase, classify_assertion, load_kb, load_kb_file
from .engine import (Comparison, FactSupport, RuleSupport, PrevSupport, Version, QueryResult,
                     InferenceEngine, saturate, query, compare)
