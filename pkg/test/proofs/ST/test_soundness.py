"""
Accepted proofs have valid conclusions, and every ordered pair of lattice
elements has an accepted order proof.
"""
import os
import sys
sys.path.append('.')

import numpy as np
import pytest

from gradelogic.formulas import atoms_of
from gradelogic.grades import load_poset_file, enumerate_lattice, grade_leq
from gradelogic.kripke import random_interpretation, valid_in
from gradelogic.proofs import random_proof, check_proof, prove_order

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', '..', 'data')


@pytest.mark.parametrize('poset_file', ['weather.poset', 'theater.poset'])
def test_sampled_proofs_are_sound(poset_file):
    poset = load_poset_file(os.path.join(DATA, poset_file))
    rng = np.random.default_rng(2022)
    violations = 0
    for _ in range(100):
        proof = random_proof(poset, rng, steps=8)
        assert check_proof(proof).accepted
        atoms = set(atoms_of(proof.conclusion)) | {'p', 'q', 'p0'}
        for _ in range(50):
            interpretation = random_interpretation(poset, int(rng.integers(1, 5)), sorted(atoms), rng)
            if not valid_in(interpretation, proof.conclusion)[0]:
                violations += 1
    assert violations == 0


def test_order_proofs_for_all_ordered_pairs():
    poset = load_poset_file(os.path.join(DATA, 'weather.poset'))
    elements = enumerate_lattice(poset, hasse=False).elements
    pairs = [(a, b) for a in elements for b in elements if a != b and grade_leq(poset, a, b)][:500]
    assert pairs
    for low, high in pairs:
        report = check_proof(prove_order(poset, low, high))
        assert report.accepted, (low.render(), high.render(), report.diagnostics)
