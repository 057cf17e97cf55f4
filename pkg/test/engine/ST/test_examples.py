"""
Worked knowledge bases: best grades, comparisons, checkable traces and
semantic consistency of what the engine derives.
"""
import os
import sys
sys.path.append('.')

import numpy as np
import pytest

from gradelogic.engine import InferenceEngine, KnowledgeBase, Comparison, load_kb, load_kb_file, saturate
from gradelogic.formulas import parse_grade
from gradelogic.grades import normalize
from gradelogic.kripke import find_countermodel, exhaustive_candidates
from gradelogic.kripke.search import EXHAUSTIVE_MAX_CANDIDATES
from gradelogic.proofs import check_proof, expand_proof

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', '..', 'data')


def engine_for(name):
    return InferenceEngine(load_kb_file(os.path.join(DATA, name)))


@pytest.mark.parametrize('name, atom, expected', [
    ('example1.kb', 'ill', '(alpha & gamma) | (beta & delta)'),
    ('example2.kb', 'ill', '(alpha & gamma) | (beta & gamma)'),
    ('example2.kb', 'cold', 'alpha | beta'),
    ('example3.kb', 'late', 'alpha & beta'),
    ('example3.kb', 'restaurant', 'delta & gamma'),
])
def test_best_grades(name, atom, expected):
    engine = engine_for(name)
    assert engine.saturate()[atom].render() == expected


def test_distributivity_makes_both_orders_agree():
    engine = engine_for('example2.kb')
    poset = engine.poset
    ill = engine.saturate()['ill']
    assert ill == normalize(poset, parse_grade('(alpha | beta) & gamma'))
    assert ill == normalize(poset, parse_grade('(alpha & gamma) | (beta & gamma)'))


def test_late_is_more_certain_than_restaurant():
    assert engine_for('example3.kb').compare('late', 'restaurant') is Comparison.FIRST_HIGHER


def test_unrelated_fact_is_incomparable():
    kb = load_kb_file(os.path.join(DATA, 'example1.kb'))
    with open(os.path.join(DATA, 'example1.kb'), 'r', encoding='utf-8') as file:
        text = file.read() + 'assert: [beta] x\n'
    extended = load_kb(text, kb.poset)
    assert InferenceEngine(extended).compare('ill', 'x') is Comparison.INCOMPARABLE


@pytest.mark.parametrize('name', ['example1.kb', 'example2.kb', 'example3.kb'])
def test_traces_are_accepted(name):
    engine = engine_for(name)
    for atom, grade in engine.saturate().items():
        result = engine.query(atom)
        assert result.grade == grade
        assert check_proof(result.trace).accepted
        assert check_proof(expand_proof(result.trace)).accepted
        conclusion = result.trace.conclusion
        assert normalize(engine.poset, conclusion.right.grade) == grade


def test_example1_trace_uses_graded_modus_ponens_and_join():
    trace = engine_for('example1.kb').query('ill').trace
    rules = [line.justification.rule.value for line in trace.lines]
    assert rules.count('ag') == 2
    assert rules.count('A1') == 1


def exhaustive_bound(formula, poset):
    """Largest world count up to 3 whose exhaustive search fits the candidate budget."""
    bound = 1
    while bound < 3 and exhaustive_candidates(formula, poset, bound + 1) <= EXHAUSTIVE_MAX_CANDIDATES:
        bound += 1
    return bound


@pytest.mark.parametrize('name, deepest', [('example1.kb', 3), ('example2.kb', 2), ('example3.kb', 3)])
def test_derived_grades_have_no_countermodel(name, deepest):
    engine = engine_for(name)
    bounds = []
    for atom in engine.saturate():
        formula = engine.query(atom).trace.conclusion
        verdict = find_countermodel(formula, engine.poset, 3, mode='randomized', seed=7, samples=300)
        assert not verdict.found
        bound = exhaustive_bound(formula, engine.poset)
        exhaustive = find_countermodel(formula, engine.poset, bound)
        assert not exhaustive.found
        assert exhaustive.bound == bound
        bounds.append(bound)
    assert max(bounds) == deepest


@pytest.mark.parametrize('name', ['example1.kb', 'example2.kb', 'example3.kb'])
def test_assertion_order_does_not_change_grades(name):
    kb = load_kb_file(os.path.join(DATA, name))
    expected = saturate(kb)
    formulas = kb.formulas
    rng = np.random.default_rng(11)
    for _ in range(20):
        shuffled = [formulas[i] for i in rng.permutation(len(formulas))]
        assert saturate(KnowledgeBase.from_formulas(kb.poset, shuffled)) == expected
