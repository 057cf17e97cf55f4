# import packages
import os
import sys
sys.path.append('.')

import numpy as np
import pytest

from gradelogic.formulas import parse_formula, same_formula
from gradelogic.grades import load_poset_file
from gradelogic.proofs import (load_proof, load_proof_file, check_proof, expand_proof, expand_derived, ProofLine,
                               Justification, Rule, DERIVED_RULES, random_proof)
from gradelogic.utils import ProofError

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', '..', 'data')


def load(name):
    return load_poset_file(os.path.join(DATA, name))


def test_gmp_expansion_concludes_meet():
    proof = load_proof_file(os.path.join(DATA, 'gmp.proof'))
    expanded = expand_proof(proof)
    assert not any(line.justification.rule in DERIVED_RULES for line in expanded.lines)
    assert [line.number for line in expanded.lines] == list(range(1, len(expanded) + 1))
    assert expanded.conclusion == proof.conclusion
    assert check_proof(expanded).accepted


def test_weak_expansion():
    poset = load('weather.poset')
    line = ProofLine(5, parse_formula('[gamma] p'), Justification(Rule.WEAK, (2,)))
    steps = expand_derived(poset, line, {2: parse_formula('[alpha & delta] p')}, 10)
    assert steps[0].number == 10
    assert steps[-1].formula == parse_formula('[gamma] p')
    rules = {step.justification.rule for step in steps}
    assert Rule.GEN in rules and Rule.MP in rules


def test_ag_with_top_grades():
    poset = load('weather.poset')
    line = ProofLine(1, parse_formula('[T] p & [T] (p -> q) -> [T] q'), Justification(Rule.AG))
    steps = expand_derived(poset, line, {}, 1)
    assert steps[-1].formula == line.formula
    proof = load_proof("1: [T] p & [T] (p -> q) -> [T] q ; ag", poset)
    assert check_proof(proof).accepted


@pytest.mark.parametrize('text', [
    "1: [alpha] p & [beta] (p -> q) -> [alpha & beta] q ; ag",
    "1: [alpha] p & [delta] (p -> q) -> [gamma] q ; ag",
    "1: [alpha] ([beta] r) & [alpha] ([beta] r -> s) -> [alpha] s ; ag",
])
def test_ag_instances(text):
    report = check_proof(load_proof(text, load('weather.poset')))
    assert report.accepted, report.diagnostics


@pytest.mark.parametrize('text', [
    "1: [alpha] p & [beta] (p -> q) -> [alpha | beta] q ; ag",
    "1: [alpha] p & [beta] (r -> q) -> [alpha & beta] q ; ag",
    "1: p | !p ; taut\n2: [T] (p | !p) ; nec 1\n3: [T] p ; weak 2",
    "1: p ; taut\n2: q ; weak 1",
])
def test_bad_derived_lines(text):
    assert not check_proof(load_proof(text, load('weather.poset'))).accepted


def test_expand_derived_shape_error():
    poset = load('weather.poset')
    line = ProofLine(2, parse_formula('[alpha] q'), Justification(Rule.WEAK, (1,)))
    with pytest.raises(ProofError):
        expand_derived(poset, line, {1: parse_formula('[gamma] q')}, 3)
    with pytest.raises(ProofError):
        expand_derived(poset, ProofLine(2, parse_formula('q'), Justification(Rule.MP, (1, 1))), {1: None}, 3)


@pytest.mark.parametrize('seed', range(10))
def test_macro_conservativity(seed):
    poset = load('weather.poset')
    proof = random_proof(poset, np.random.default_rng(seed), steps=10)
    expanded = expand_proof(proof)
    assert check_proof(proof).accepted == check_proof(expanded).accepted
    assert same_formula(poset, proof.conclusion, expanded.conclusion)


def test_macro_conservativity_on_rejection():
    text = "1: p | !p ; taut\n2: [T] (p | !p) ; nec 1\n3: [alpha] (p | !p) ; weak 2\n4: [beta] p ; taut"
    proof = load_proof(text, load('weather.poset'))
    assert not check_proof(proof).accepted
    assert not check_proof(expand_proof(proof)).accepted
