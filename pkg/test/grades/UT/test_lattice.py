# import packages
import sys
sys.path.append('.')

import numpy as np
import pytest

from gradelogic.formulas import parse_grade
from gradelogic.grades import (GradeNF, Leaf, Meet, Join, load_poset, normalize, grade_leq, meet, join,
                               to_expr, top_nf, generator_nf)
from gradelogic.utils import UndeclaredGeneratorError

WEATHER = "generators: alpha beta gamma delta\ntop: T\norder:\ngamma < alpha\ngamma < delta\nbeta < delta\n"
ANTICHAIN = "generators: alpha beta gamma delta\ntop: T\norder:\n"
THEATER = "generators: alpha beta gamma delta\ntop: T\norder:\ngamma < alpha\ndelta < beta\n"


def nf(poset, text):
    return normalize(poset, parse_grade(text, poset))


def random_expr(poset, rng, depth):
    if depth == 0 or rng.random() < 0.3:
        return Leaf(poset.generators[int(rng.integers(len(poset.generators)))])
    kind = Meet if rng.random() < 0.5 else Join
    return kind(random_expr(poset, rng, depth - 1), random_expr(poset, rng, depth - 1))


@pytest.mark.parametrize('text, rendered', [
    ('T & alpha', 'alpha'),
    ('alpha | alpha & beta', 'alpha'),
    ('gamma & alpha', 'gamma'),
    ('alpha | gamma', 'alpha'),
    ('beta | delta', 'delta'),
    ('alpha & delta', 'alpha & delta'),
    ('T | alpha', 'T'),
    ('(alpha | beta) & gamma', 'gamma'),
    ('alpha & beta | delta', 'delta'),
    ('alpha & beta | gamma', '(alpha & beta) | gamma'),
])
def test_normalize_weather(text, rendered):
    poset = load_poset(WEATHER)
    assert nf(poset, text).render() == rendered


def test_distributivity_example():
    poset = load_poset(ANTICHAIN)
    left = nf(poset, '(alpha & gamma) | (beta & gamma)')
    right = nf(poset, '(alpha | beta) & gamma')
    assert left == right
    assert left.clauses == (('alpha', 'gamma'), ('beta', 'gamma'))
    assert left.render() == '(alpha & gamma) | (beta & gamma)'


def test_normalize_undeclared():
    poset = load_poset(WEATHER)
    with pytest.raises(UndeclaredGeneratorError):
        normalize(poset, Meet(Leaf('alpha'), Leaf('omega')))


@pytest.mark.parametrize('poset_text, low, high, expected', [
    (WEATHER, 'gamma', 'alpha & delta', True),
    (WEATHER, 'alpha & beta', 'alpha', True),
    (WEATHER, 'alpha', 'alpha & beta', False),
    (WEATHER, 'alpha', 'beta', False),
    (WEATHER, 'beta | gamma', 'delta', True),
    (THEATER, 'delta & gamma', 'alpha & beta', True),
    (THEATER, 'alpha & beta', 'delta & gamma', False),
])
def test_grade_leq(poset_text, low, high, expected):
    poset = load_poset(poset_text)
    assert grade_leq(poset, nf(poset, low), nf(poset, high)) is expected


def test_meet_join_examples():
    poset = load_poset(WEATHER)
    alpha, delta, gamma = (generator_nf(poset, name) for name in ('alpha', 'delta', 'gamma'))
    assert meet(poset, alpha, top_nf(poset)) == alpha
    assert join(poset, alpha, top_nf(poset)) == top_nf(poset)
    middle = meet(poset, alpha, delta)
    assert grade_leq(poset, gamma, middle) and middle != gamma
    assert grade_leq(poset, middle, alpha) and middle != alpha
    assert grade_leq(poset, middle, delta) and middle != delta


def test_nf_generator_property():
    poset = load_poset(WEATHER)
    assert generator_nf(poset, 'beta').generator == 'beta'
    assert nf(poset, 'alpha & delta').generator is None
    assert str(GradeNF((('alpha', 'gamma'), ('beta',)))) == '(alpha & gamma) | beta'


@pytest.mark.parametrize('poset_text', [WEATHER, ANTICHAIN, THEATER])
def test_to_expr_round_trip(poset_text):
    poset = load_poset(poset_text)
    rng = np.random.default_rng(7)
    for _ in range(50):
        value = normalize(poset, random_expr(poset, rng, 3))
        assert normalize(poset, to_expr(value)) == value


@pytest.mark.parametrize('poset_text', [WEATHER, ANTICHAIN])
def test_lattice_laws(poset_text):
    poset = load_poset(poset_text)
    rng = np.random.default_rng(2022)
    for _ in range(1000):
        a, b, c = (normalize(poset, random_expr(poset, rng, 2)) for _ in range(3))
        assert meet(poset, a, b) == meet(poset, b, a)
        assert join(poset, a, b) == join(poset, b, a)
        assert meet(poset, meet(poset, a, b), c) == meet(poset, a, meet(poset, b, c))
        assert join(poset, join(poset, a, b), c) == join(poset, a, join(poset, b, c))
        assert meet(poset, a, a) == a and join(poset, a, a) == a
        assert join(poset, a, meet(poset, a, b)) == a
        assert meet(poset, a, join(poset, a, b)) == a
        assert meet(poset, a, join(poset, b, c)) == join(poset, meet(poset, a, b), meet(poset, a, c))
        assert join(poset, a, meet(poset, b, c)) == meet(poset, join(poset, a, b), join(poset, a, c))


@pytest.mark.parametrize('poset_text', [WEATHER, THEATER])
def test_partial_order_and_bounds(poset_text):
    poset = load_poset(poset_text)
    rng = np.random.default_rng(11)
    top = top_nf(poset)
    for _ in range(1000):
        a, b, c = (normalize(poset, random_expr(poset, rng, 2)) for _ in range(3))
        assert grade_leq(poset, a, a)
        assert grade_leq(poset, a, top)
        if grade_leq(poset, a, b) and grade_leq(poset, b, a):
            assert a == b
        if grade_leq(poset, a, b) and grade_leq(poset, b, c):
            assert grade_leq(poset, a, c)
        low, high = meet(poset, a, b), join(poset, a, b)
        assert grade_leq(poset, low, a) and grade_leq(poset, low, b)
        assert grade_leq(poset, a, high) and grade_leq(poset, b, high)
        if grade_leq(poset, c, a) and grade_leq(poset, c, b):
            assert grade_leq(poset, c, low)
        if grade_leq(poset, a, c) and grade_leq(poset, b, c):
            assert grade_leq(poset, high, c)
