# import packages
import sys
sys.path.append('.')

import pytest

from gradelogic.grades import (GeneratorPoset, load_poset, enumerate_lattice, generator_nf, meet,
                               grade_leq, oracle_leq, to_expr)
from gradelogic.grades import lattice as lattice_module
from gradelogic.utils import GuardExceededError

WEATHER = "generators: alpha beta gamma delta\ntop: T\norder:\ngamma < alpha\ngamma < delta\nbeta < delta\n"


@pytest.mark.parametrize('generators, pairs, count', [
    (['a'], [], 2),
    (['a', 'b'], [], 5),
    (['a', 'b'], [('a', 'b')], 3),
])
def test_small_counts(generators, pairs, count):
    poset = GeneratorPoset.build(generators, 'T', pairs)
    lattice = enumerate_lattice(poset)
    assert len(lattice) == count


def test_antichain_elements():
    poset = GeneratorPoset.build(['a', 'b'], 'T')
    rendered = [element.render() for element in enumerate_lattice(poset).elements]
    assert rendered == sorted(['T', 'a', 'a & b', 'a | b', 'b'])


def test_weather_lattice():
    poset = load_poset(WEATHER)
    lattice = enumerate_lattice(poset)
    elements = set(lattice.elements)
    alpha, delta, gamma = (generator_nf(poset, name) for name in ('alpha', 'delta', 'gamma'))
    middle = meet(poset, alpha, delta)
    assert middle in elements
    assert middle not in (alpha, delta, gamma)
    assert grade_leq(poset, gamma, middle)
    assert grade_leq(poset, middle, alpha) and grade_leq(poset, middle, delta)
    # distinct normal forms are distinct lattice elements
    ordered = lattice.elements
    for i, first in enumerate(ordered):
        for second in ordered[i + 1:]:
            both = oracle_leq(poset, to_expr(first), to_expr(second)) and oracle_leq(poset, to_expr(second),
                                                                                       to_expr(first))
            assert not both


def test_weather_covers():
    poset = load_poset(WEATHER)
    lattice = enumerate_lattice(poset)
    assert lattice.covers
    for low, high in lattice.covers:
        assert low != high and grade_leq(poset, low, high)
        between = [c for c in lattice.elements
                   if c not in (low, high) and grade_leq(poset, low, c) and grade_leq(poset, c, high)]
        assert not between


def test_depth_cap_and_hasse_flag():
    poset = load_poset(WEATHER)
    capped = enumerate_lattice(poset, depth_cap=0, hasse=False)
    assert len(capped) == len(poset.generators)
    assert capped.covers == ()


def test_guards():
    poset = GeneratorPoset.build([f'g{i}' for i in range(9)], 'T')
    with pytest.raises(GuardExceededError):
        enumerate_lattice(poset)
    small = GeneratorPoset.build(['a', 'b', 'c'], 'T')
    with pytest.raises(GuardExceededError):
        enumerate_lattice(small, max_elements=5)


def test_element_guard_stops_within_a_round(monkeypatch):
    calls = []
    original = lattice_module.meet

    def counting_meet(poset, a, b):
        calls.append(1)
        return original(poset, a, b)

    monkeypatch.setattr(lattice_module, 'meet', counting_meet)
    # first round: 8 generators give 64 elements from 64 pairs
    poset = GeneratorPoset.build([f'g{i}' for i in range(8)], 'T')
    with pytest.raises(GuardExceededError):
        enumerate_lattice(poset, max_elements=65)
    # a finished second round would take 56 * 64 pairs
    assert len(calls) < 200
