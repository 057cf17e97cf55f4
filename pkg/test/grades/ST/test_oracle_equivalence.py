"""
Lattice order decided on normal forms agrees with the brute-force oracle.
"""
import sys
sys.path.append('.')

import numpy as np
import pytest

from gradelogic.grades import (GeneratorPoset, Leaf, Meet, Join, load_poset, normalize, grade_leq, oracle_leq,
                               expr_depth)

WEATHER = "generators: alpha beta gamma delta\ntop: T\norder:\ngamma < alpha\ngamma < delta\nbeta < delta\n"


def random_poset(seed):
    rng = np.random.default_rng(seed)
    names = [f'g{i}' for i in range(4)]
    pairs = [(names[i], names[j]) for i in range(4) for j in range(i + 1, 4) if rng.random() < 0.4]
    return GeneratorPoset.build(names, 'T', pairs)


def random_expr(poset, rng, depth):
    if depth == 0 or rng.random() < 0.25:
        return Leaf(poset.generators[int(rng.integers(len(poset.generators)))])
    kind = Meet if rng.random() < 0.5 else Join
    return kind(random_expr(poset, rng, depth - 1), random_expr(poset, rng, depth - 1))


@pytest.mark.parametrize('poset_name', ['weather', 'random-1', 'random-2'])
def test_oracle_equivalence(poset_name):
    if poset_name == 'weather':
        poset = load_poset(WEATHER)
    else:
        poset = random_poset(int(poset_name.split('-')[1]))
    assert len(poset.generators) == 5
    rng = np.random.default_rng(2022)
    discrepancies = 0
    for _ in range(10000):
        first, second = random_expr(poset, rng, 3), random_expr(poset, rng, 3)
        assert max(expr_depth(first), expr_depth(second)) <= 3
        decided = grade_leq(poset, normalize(poset, first), normalize(poset, second))
        if decided != oracle_leq(poset, first, second):
            discrepancies += 1
    assert discrepancies == 0
