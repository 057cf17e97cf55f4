# import packages
import sys
sys.path.append('.')

import pytest

from gradelogic.formulas import parse_grade
from gradelogic.grades import GeneratorPoset, load_poset, oracle_leq, monotone_valuations
from gradelogic.utils import GuardExceededError

WEATHER = "generators: alpha beta gamma delta\ntop: T\norder:\ngamma < alpha\ngamma < delta\nbeta < delta\n"


@pytest.mark.parametrize('low, high, expected', [
    ('gamma', 'alpha & delta', True),
    ('alpha', 'beta', False),
    ('(alpha | beta) & gamma', '(alpha | beta) & gamma', True),
    ('alpha & (beta | delta)', 'alpha & beta | alpha & delta', True),
    ('alpha', 'T', True),
    ('T', 'alpha | delta', False),
])
def test_oracle_leq(low, high, expected):
    poset = load_poset(WEATHER)
    assert oracle_leq(poset, parse_grade(low), parse_grade(high)) is expected


def test_valuations_are_monotone():
    poset = load_poset(WEATHER)
    rows = monotone_valuations(poset)
    column = {name: i for i, name in enumerate(poset.generators)}
    assert len(rows) > 0
    for low, high in poset.closure:
        assert not (rows[:, column[low]] & ~rows[:, column[high]]).any()


def test_antichain_valuation_count():
    poset = GeneratorPoset.build(['a', 'b'], 'T')
    # a, b free; T forced to 1 whenever a or b is
    assert len(monotone_valuations(poset)) == 5


def test_oracle_guard():
    poset = GeneratorPoset.build([f'g{i}' for i in range(6)], 'T')
    with pytest.raises(GuardExceededError):
        oracle_leq(poset, parse_grade('g0'), parse_grade('g1'), max_generators=4)
