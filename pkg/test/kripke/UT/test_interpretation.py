# import packages
import os
import sys
sys.path.append('.')

import numpy as np
import pytest

from gradelogic.formulas import parse_formula, parse_grade
from gradelogic.grades import load_poset_file
from gradelogic.kripke import (RawInterpretation, validate_interpretation, derive_relation, load_interpretation,
                               load_interpretation_file, dump_interpretation, satisfies, valid_in, evaluate)
from gradelogic.utils import (MonotonicityError, SerialityError, UndeclaredWorldError, UndeclaredGeneratorError,
                              ParseError)

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', '..', 'data')


def weather():
    return load_poset_file(os.path.join(DATA, 'weather.poset'))


def valid():
    interpretation, _ = load_interpretation_file(os.path.join(DATA, 'valid.interp'))
    return interpretation


def test_load_valid():
    interpretation, poset = load_interpretation_file(os.path.join(DATA, 'valid.interp'))
    assert interpretation.worlds == ('w1', 'w2')
    assert set(interpretation.relations) == set(poset.generators)
    assert interpretation.true_worlds('q') == ['w2']
    assert interpretation.pairs(interpretation.relations['beta']) == [('w1', 'w1'), ('w2', 'w2')]


def test_monotonicity_violation():
    with pytest.raises(MonotonicityError) as info:
        load_interpretation_file(os.path.join(DATA, 'not_monotone.interp'))
    assert len(info.value.problems) == 1
    assert 'w1->w2 of gamma is missing from alpha' in info.value.problems[0]


def test_seriality_violation():
    with pytest.raises(SerialityError) as info:
        load_interpretation_file(os.path.join(DATA, 'not_serial.interp'))
    assert info.value.problems == ["world 'w2' has no T-successor"]


def test_undeclared_world():
    raw = RawInterpretation(['w1'], {'T': [('w1', 'w1'), ('w1', 'w9')]}, {'p': ['w7']})
    with pytest.raises(UndeclaredWorldError) as info:
        validate_interpretation(raw, weather())
    assert len(info.value.problems) == 2


def test_undeclared_generator():
    raw = RawInterpretation(['w1'], {'T': [('w1', 'w1')], 'omega': []})
    with pytest.raises(UndeclaredGeneratorError):
        validate_interpretation(raw, weather())


@pytest.mark.parametrize('text', [
    "worlds: w1\nrel T: w1-w1\n",
    "worlds: w1\nedge T: w1->w1\n",
    "rel T: w1->w1\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        load_interpretation(text, weather())


def test_derive_relation():
    interpretation = valid()
    union = derive_relation(interpretation, parse_grade('beta | gamma'))
    assert interpretation.pairs(union) == [('w1', 'w1'), ('w1', 'w2'), ('w2', 'w2')]
    inter = derive_relation(interpretation, parse_grade('alpha & delta'))
    assert interpretation.pairs(inter) == [('w1', 'w2'), ('w2', 'w2')]


@pytest.mark.parametrize('world, text, expected', [
    ('w1', '[gamma] q', True),
    ('w1', '[beta] q', False),
    ('w1', '[delta] q', False),
    ('w1', '[alpha & delta] q', True),
    ('w2', '[T] q', False),
    ('w2', 'q & [beta] q', True),
    ('w1', '![T] false', True),
    ('w1', 'unknown_atom', False),
])
def test_satisfies(world, text, expected):
    assert satisfies(valid(), world, parse_formula(text)) is expected


def test_valid_in():
    interpretation = valid()
    assert valid_in(interpretation, parse_formula('[gamma] q')) == (True, None)
    assert valid_in(interpretation, parse_formula('[beta] q')) == (False, 'w1')
    assert valid_in(interpretation, parse_formula('[alpha] p0 -> [gamma] p0')) == (True, None)


def test_unknown_world():
    with pytest.raises(UndeclaredWorldError):
        satisfies(valid(), 'w5', parse_formula('q'))


def test_partially_inconsistent_theory():
    poset = weather()
    raw = RawInterpretation(['w1'], {'T': [('w1', 'w1')], 'beta': [('w1', 'w1')], 'delta': [('w1', 'w1')]})
    interpretation = validate_interpretation(raw, poset)
    assert satisfies(interpretation, 'w1', parse_formula('[alpha] false'))
    assert satisfies(interpretation, 'w1', parse_formula('[gamma] false'))
    assert not satisfies(interpretation, 'w1', parse_formula('[T] false'))
    assert valid_in(interpretation, parse_formula('![T] false')) == (True, None)


def test_dump_round_trip():
    interpretation = valid()
    again = load_interpretation(dump_interpretation(interpretation), weather())
    assert again.worlds == interpretation.worlds
    for name, matrix in interpretation.relations.items():
        assert np.array_equal(again.relations[name], matrix)
    formula = parse_formula('[delta] q | [alpha] !q')
    assert np.array_equal(evaluate(again, formula), evaluate(interpretation, formula))


def test_matrices_are_read_only():
    interpretation = valid()
    with pytest.raises(ValueError):
        interpretation.relations['T'][0, 0] = False
