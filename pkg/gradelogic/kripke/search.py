# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ============================================================================

"""
Bounded countermodel search.

The exhaustive mode walks interpretations by world count, then relation bits
assigned along a linear extension of the generator order (each relation is
chosen as a superset of the union of the relations below it, which makes
monotonicity hold by construction), then valuations. Generators the query
does not mention are fixed at their least admissible relation. Monotonicity
acts on each cell of the relation matrices separately, so the number of
relation assignments is the number of up-sets of the mentioned generators
raised to the number of cells; the search refuses to start when that count,
times the valuations, exceeds its candidate budget. The randomized mode
samples valid interpretations from a seeded generator.
"""
from dataclasses import dataclass
from enum import Enum

import numpy as np

from gradelogic.formulas import Atom, Const, Not, And, Or, Implies, Iff, Box, atoms_of, grades_of, check_formula
from gradelogic.grades import Leaf, Meet, Join, leaves
from gradelogic.utils import GradeLogicError, GuardExceededError, get_logger, Timer
from .interpretation import RawInterpretation, validate_interpretation
from .semantics import evaluate

__all__ = [
    'SearchMode', 'Verdict', 'find_countermodel', 'random_interpretation', 'world_names',
    'EXHAUSTIVE_MAX_WORLDS', 'EXHAUSTIVE_MAX_GENERATORS', 'EXHAUSTIVE_MAX_ATOMS', 'EXHAUSTIVE_MAX_CANDIDATES',
    'exhaustive_candidates',
]

logger = get_logger(__name__)

EXHAUSTIVE_MAX_WORLDS = 3
EXHAUSTIVE_MAX_GENERATORS = 4
EXHAUSTIVE_MAX_ATOMS = 3
EXHAUSTIVE_MAX_CANDIDATES = 500000


class SearchMode(str, Enum):
    EXHAUSTIVE = 'exhaustive'
    RANDOMIZED = 'randomized'


@dataclass(frozen=True, eq=False)
class Verdict:
    """
    Outcome of a countermodel search.

    Args:
        interpretation (Interpretation): The countermodel, or None.
        world (str): A world falsifying the query, or None.
        bound (int): Largest world count searched.
        explored (int): Candidate (interpretation, valuation) pairs evaluated.
    """
    interpretation: object
    world: str
    bound: int
    explored: int

    @property
    def found(self):
        return self.interpretation is not None


def world_names(count):
    return [f'w{i}' for i in range(count)]


def random_interpretation(poset, worlds, atoms, rng, density=0.5):
    """
    Sample a valid interpretation.

    Relations are drawn along a linear extension: each generator receives the
    union of the relations below it plus random edges, and every world left
    without a top-successor gets one at random.

    Args:
        poset (GeneratorPoset): The generators.
        worlds (int): Number of worlds, named ``w0``, ``w1``, ...
        atoms (Iterable[str]): Atoms given a random valuation.
        rng (numpy.random.Generator): Source of randomness.
        density (float): Probability of each extra edge.

    Returns:
        Interpretation.
    """
    names = world_names(worlds)
    matrices = {}
    for name in poset.linear_extension():
        matrix = rng.random((worlds, worlds)) < density
        for low in poset.below(name):
            matrix |= matrices[low]
        if name == poset.top:
            for i in np.flatnonzero(~matrix.any(axis=1)):
                matrix[i, rng.integers(worlds)] = True
        matrices[name] = matrix
    relations = {name: [(names[i], names[j]) for i, j in zip(*np.nonzero(matrix))]
                 for name, matrix in matrices.items()}
    valuation = {atom: [names[i] for i in np.flatnonzero(rng.random(worlds) < 0.5)] for atom in atoms}
    return validate_interpretation(RawInterpretation(names, relations, valuation), poset)


def _subsets(free):
    """Every submask of ``free``, including 0."""
    sub = free
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & free


def _relation_masks(order, below, full):
    """Assignments of bitmask relations to ``order``, monotone by construction."""
    def _assign(k, chosen):
        if k == len(order):
            yield dict(chosen)
            return
        name = order[k]
        lower = 0
        for low in below[name]:
            lower |= chosen[low]
        for sub in _subsets(full & ~lower):
            chosen[name] = lower | sub
            yield from _assign(k + 1, chosen)
        del chosen[name]

    yield from _assign(0, {})


def _batch_eval(formula, relation_of, atom_table, atom_index):
    """Truth of ``formula`` for every valuation row at every world: shape (valuations, worlds)."""
    valuations, _, size = atom_table.shape

    def _relation(grade):
        if isinstance(grade, Leaf):
            return relation_of[grade.name]
        if isinstance(grade, Meet):
            return _relation(grade.left) & _relation(grade.right)
        return _relation(grade.left) | _relation(grade.right)

    def _eval(node):
        if isinstance(node, Atom):
            return atom_table[:, atom_index[node.name], :]
        if isinstance(node, Const):
            return np.full((valuations, size), node.value, dtype=bool)
        if isinstance(node, Not):
            return ~_eval(node.body)
        if isinstance(node, Box):
            relation = _relation(node.grade)
            body = _eval(node.body)
            return ~np.any(relation[None, :, :] & ~body[:, None, :], axis=2)
        left, right = _eval(node.left), _eval(node.right)
        if isinstance(node, And):
            return left & right
        if isinstance(node, Or):
            return left | right
        if isinstance(node, Implies):
            return ~left | right
        if isinstance(node, Iff):
            return left == right
        raise TypeError(f"not a formula: {node!r}")

    return _eval(formula)


def _mask_table(cells):
    codes = np.arange(1 << cells, dtype=np.int64)
    return ((codes[:, None] >> np.arange(cells)) & 1).astype(bool)


def _mentioned(formula):
    return {name for grade in grades_of(formula) for name in leaves(grade)}


def _count_up_sets(poset, names):
    """Subsets of ``names`` closed upwards within ``names``."""
    count = 0
    for mask in range(1 << len(names)):
        members = {name for i, name in enumerate(names) if mask >> i & 1}
        if all(high in members for low in members for high in names if poset.less(low, high)):
            count += 1
    return count


def exhaustive_candidates(formula, poset, max_worlds):
    """
    Number of (relation assignment, valuation) pairs the exhaustive mode
    would evaluate for world counts 1 to ``max_worlds``.
    """
    up_sets = _count_up_sets(poset, sorted(_mentioned(formula)))
    atoms = len(atoms_of(formula))
    return sum(up_sets ** (size * size) * 2 ** (atoms * size) for size in range(1, max_worlds + 1))


def _exhaustive(formula, poset, max_worlds, max_generators, max_atoms, max_candidates):
    atoms = atoms_of(formula)
    mentioned = _mentioned(formula)
    if max_worlds > EXHAUSTIVE_MAX_WORLDS:
        raise GuardExceededError(f"exhaustive search is limited to {EXHAUSTIVE_MAX_WORLDS} worlds")
    if len(mentioned) > max_generators:
        raise GuardExceededError(
            f"exhaustive search is limited to {max_generators} generators, query mentions {len(mentioned)}")
    if len(atoms) > max_atoms:
        raise GuardExceededError(f"exhaustive search is limited to {max_atoms} atoms, query has {len(atoms)}")
    candidates = exhaustive_candidates(formula, poset, max_worlds)
    if candidates > max_candidates:
        raise GuardExceededError(
            f"exhaustive search up to {max_worlds} worlds needs {candidates} candidates, limit is {max_candidates};"
            " lower the world bound or use the randomized mode")

    extension = poset.linear_extension()
    order = [name for name in extension if name in mentioned]
    below = {name: [low for low in order if poset.less(low, name)] for name in order}
    rest = [name for name in extension if name not in mentioned]
    atom_index = {atom: i for i, atom in enumerate(atoms)}
    explored = 0
    for size in range(1, max_worlds + 1):
        cells = size * size
        full = (1 << cells) - 1
        matrices = _mask_table(cells).reshape(1 << cells, size, size)
        atom_table = _mask_table(len(atoms) * size).reshape(1 << (len(atoms) * size), len(atoms), size)
        loops = np.eye(size, dtype=bool)
        for masks in _relation_masks(order, below, full):
            relation_of = {name: matrices[mask] for name, mask in masks.items()}
            for name in rest:
                matrix = np.zeros((size, size), dtype=bool)
                for low in order:
                    if poset.less(low, name):
                        matrix = matrix | relation_of[low]
                if name == poset.top:
                    matrix = matrix | (loops & ~matrix.any(axis=1)[:, None])
                relation_of[name] = matrix
            if not relation_of[poset.top].any(axis=1).all():
                continue
            truth = _batch_eval(formula, relation_of, atom_table, atom_index)
            explored += len(atom_table)
            falsified = np.argwhere(~truth)
            if len(falsified):
                row, column = falsified[0]
                return _materialize(poset, size, relation_of, atoms, atom_table[row], column), explored, size
    return None, explored, max_worlds


def _materialize(poset, size, relation_of, atoms, bits, column):
    names = world_names(size)
    relations = {name: [(names[i], names[j]) for i, j in zip(*np.nonzero(matrix))]
                 for name, matrix in relation_of.items()}
    valuation = {atom: [names[i] for i in np.flatnonzero(bits[k])] for k, atom in enumerate(atoms)}
    interpretation = validate_interpretation(RawInterpretation(names, relations, valuation), poset)
    return interpretation, names[column]


def _randomized(formula, poset, max_worlds, seed, samples, density):
    rng = np.random.default_rng(seed)
    atoms = atoms_of(formula)
    for sample in range(samples):
        size = 1 + sample % max_worlds
        interpretation = random_interpretation(poset, size, atoms, rng, density)
        failing = np.flatnonzero(~evaluate(interpretation, formula))
        if len(failing):
            return (interpretation, interpretation.worlds[failing[0]]), sample + 1
    return None, samples


def find_countermodel(formula, poset, max_worlds, mode=SearchMode.EXHAUSTIVE, seed=1, samples=2000,
                      density=0.5, max_generators=EXHAUSTIVE_MAX_GENERATORS, max_atoms=EXHAUSTIVE_MAX_ATOMS,
                      max_candidates=EXHAUSTIVE_MAX_CANDIDATES):
    """
    Look for an interpretation and a world falsifying ``formula``.

    Args:
        formula (Formula): The query.
        poset (GeneratorPoset): The generators.
        max_worlds (int): Largest world count tried.
        mode (SearchMode): ``exhaustive`` or ``randomized``.
        seed (int): Seed of the randomized mode.
        samples (int): Interpretations drawn by the randomized mode.
        density (float): Edge probability of the randomized mode.
        max_generators (int): Exhaustive guard on generators the query mentions.
        max_atoms (int): Exhaustive guard on atoms.
        max_candidates (int): Exhaustive guard on the candidate count, see
            ``exhaustive_candidates``.

    Returns:
        Verdict. A countermodel is always a validated interpretation.

    Raises:
        GuardExceededError: The exhaustive envelope is exceeded.

    Examples:
        >>> verdict = find_countermodel(parse_formula('[T] p -> p'), poset, 2)
        >>> verdict.found
        True
    """
    if max_worlds < 1:
        raise GradeLogicError("max_worlds must be at least 1")
    check_formula(poset, formula)
    mode = SearchMode(mode)
    timer = Timer().start()
    if mode is SearchMode.EXHAUSTIVE:
        found, explored, bound = _exhaustive(formula, poset, max_worlds, max_generators, max_atoms, max_candidates)
    else:
        found, explored = _randomized(formula, poset, max_worlds, seed, samples, density)
        bound = max_worlds
    if found is None:
        logger.info("%s search: no countermodel up to %d worlds, %d candidates (%.3fs)",
                    mode.value, bound, explored, timer.end())
        return Verdict(None, None, bound, explored)
    interpretation, world = found
    logger.info("%s search: countermodel with %d worlds after %d candidates (%.3fs)",
                mode.value, interpretation.size, explored, timer.end())
    return Verdict(interpretation, world, interpretation.size if mode is SearchMode.EXHAUSTIVE else bound, explored)
