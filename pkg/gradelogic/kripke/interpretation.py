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

"""Finite interpretations: worlds, one accessibility relation per generator, a valuation."""
import re
from dataclasses import dataclass, field

import numpy as np

from gradelogic.grades import Leaf, Meet, Join, IDENTIFIER, check_expr, load_poset_file
from gradelogic.utils import (
    InterpretationError, MonotonicityError, SerialityError, UndeclaredWorldError, ParseError,
    iter_lines, split_header, resolve_path, get_logger,
)

__all__ = [
    'RawInterpretation', 'Interpretation', 'validate_interpretation', 'derive_relation',
    'parse_interpretation', 'load_interpretation', 'load_interpretation_file', 'dump_interpretation',
]

logger = get_logger(__name__)

_EDGE = re.compile(r'^([A-Za-z][A-Za-z0-9_]*)->([A-Za-z][A-Za-z0-9_]*)$')


@dataclass
class RawInterpretation:
    """
    Unchecked interpretation data as read from a file or built by a search.

    Args:
        worlds (list[str]): World ids.
        relations (dict): Generator id to a list of ``(source, target)`` pairs.
        valuation (dict): Atom id to the list of worlds where it holds.
        poset_path (str): The ``poset:`` entry of the file, if any.
    """
    worlds: list
    relations: dict = field(default_factory=dict)
    valuation: dict = field(default_factory=dict)
    poset_path: str = None


@dataclass(frozen=True, eq=False)
class Interpretation:
    """
    A validated interpretation.

    Relations are boolean adjacency matrices indexed like ``worlds``; every
    generator of the poset has one. Atoms missing from ``valuation`` are false
    everywhere.
    """
    poset: object
    worlds: tuple
    relations: dict
    valuation: dict

    @property
    def size(self):
        return len(self.worlds)

    def index(self, world):
        """Position of ``world``; raises UndeclaredWorldError for unknown ids."""
        try:
            return self.worlds.index(world)
        except ValueError as err:
            raise UndeclaredWorldError([f"undeclared world '{world}'"]) from err

    def atom_vector(self, atom):
        vector = self.valuation.get(atom)
        if vector is None:
            return np.zeros(self.size, dtype=bool)
        return vector

    def pairs(self, matrix):
        """Sorted world pairs of a relation matrix."""
        return sorted((self.worlds[i], self.worlds[j]) for i, j in zip(*np.nonzero(matrix)))

    def true_worlds(self, atom):
        return [self.worlds[i] for i in np.flatnonzero(self.atom_vector(atom))]

    def to_raw(self):
        relations = {name: self.pairs(matrix) for name, matrix in self.relations.items()}
        valuation = {atom: self.true_worlds(atom) for atom in self.valuation}
        return RawInterpretation(list(self.worlds), relations, valuation)


def _frozen(array):
    array.setflags(write=False)
    return array


def validate_interpretation(raw, poset):
    """
    Check and freeze interpretation data.

    Checks run in order: declared worlds, monotonicity along the covering
    pairs of the generator order, seriality of the top relation. Each stage
    reports every violation it finds.

    Args:
        raw (RawInterpretation): The data.
        poset (GeneratorPoset): Generators the relations are indexed by.

    Returns:
        Interpretation.

    Raises:
        UndeclaredGeneratorError: A relation is given for an unknown generator.
        UndeclaredWorldError: A relation or the valuation mentions an unknown world.
        MonotonicityError: ``R_a`` is not included in ``R_b`` for some a <= b.
        SerialityError: Some world has no successor under the top relation.
    """
    worlds = tuple(raw.worlds)
    if not worlds:
        raise InterpretationError(["an interpretation needs at least one world"])
    if len(set(worlds)) != len(worlds):
        raise InterpretationError(["duplicate world ids"])
    for name in raw.relations:
        poset.check(name)

    position = {world: i for i, world in enumerate(worlds)}
    problems = []
    for name, edges in sorted(raw.relations.items()):
        for source, target in edges:
            for world in (source, target):
                if world not in position:
                    problems.append(f"relation {name} uses undeclared world '{world}'")
    for atom, true_at in sorted(raw.valuation.items()):
        for world in true_at:
            if world not in position:
                problems.append(f"valuation of {atom} uses undeclared world '{world}'")
    if problems:
        raise UndeclaredWorldError(problems)

    size = len(worlds)
    relations = {}
    for name in poset.generators:
        matrix = np.zeros((size, size), dtype=bool)
        for source, target in raw.relations.get(name, ()):
            matrix[position[source], position[target]] = True
        relations[name] = _frozen(matrix)

    for low, high in poset.covers():
        missing = relations[low] & ~relations[high]
        for i, j in zip(*np.nonzero(missing)):
            problems.append(f"edge {worlds[i]}->{worlds[j]} of {low} is missing from {high} although {low} <= {high}")
    if problems:
        raise MonotonicityError(problems)

    lonely = np.flatnonzero(~relations[poset.top].any(axis=1))
    if len(lonely):
        raise SerialityError([f"world '{worlds[i]}' has no {poset.top}-successor" for i in lonely])

    valuation = {}
    for atom, true_at in raw.valuation.items():
        vector = np.zeros(size, dtype=bool)
        vector[[position[world] for world in true_at]] = True
        valuation[atom] = _frozen(vector)
    return Interpretation(poset=poset, worlds=worlds, relations=relations, valuation=valuation)


def derive_relation(interpretation, expr):
    """
    Relation of a grade expression: joins are unions, meets intersections.

    Returns:
        numpy.ndarray, boolean adjacency matrix.
    """
    check_expr(interpretation.poset, expr)

    def _derive(node):
        if isinstance(node, Leaf):
            return interpretation.relations[node.name]
        if isinstance(node, Meet):
            return _derive(node.left) & _derive(node.right)
        if isinstance(node, Join):
            return _derive(node.left) | _derive(node.right)
        raise TypeError(f"not a grade expression: {node!r}")

    return _derive(expr)


def _names(value, number, what):
    names = value.split()
    for name in names:
        if not IDENTIFIER.fullmatch(name):
            raise ParseError(f"invalid {what} id '{name}'", number)
    return names


def parse_interpretation(text):
    """
    Parse the interpretation file format.

    Lines are ``poset: <path>``, ``worlds: <id>+``, ``rel <generator>: <w>-><w'> ...``
    and ``val <atom>: <w> ...``; ``#`` starts a comment.

    Returns:
        RawInterpretation, not yet validated.
    """
    raw = RawInterpretation(worlds=None)
    for number, content in iter_lines(text):
        key, value = split_header(content, number)
        head = key.split()
        if key == 'poset':
            raw.poset_path = value
        elif key == 'worlds':
            raw.worlds = _names(value, number, 'world')
        elif len(head) == 2 and head[0] == 'rel':
            name = _names(head[1], number, 'generator')[0]
            edges = raw.relations.setdefault(name, [])
            for token in value.split():
                match = _EDGE.match(token)
                if not match:
                    raise ParseError(f"expected an edge '<w>-><w>', got '{token}'", number)
                edges.append((match.group(1), match.group(2)))
        elif len(head) == 2 and head[0] == 'val':
            atom = _names(head[1], number, 'atom')[0]
            raw.valuation.setdefault(atom, []).extend(_names(value, number, 'world'))
        else:
            raise ParseError(f"unknown key '{key}'", number)
    if raw.worlds is None:
        raise ParseError("missing 'worlds:' line")
    return raw


def load_interpretation(text, poset):
    """Parse and validate interpretation text against ``poset``."""
    return validate_interpretation(parse_interpretation(text), poset)


def load_interpretation_file(path, poset=None):
    """
    Read an interpretation file.

    The poset is loaded from the file's ``poset:`` entry, resolved against the
    file's directory, unless one is passed in.

    Returns:
        tuple, (Interpretation, GeneratorPoset).
    """
    with open(path, 'r', encoding='utf-8') as file:
        raw = parse_interpretation(file.read())
    if poset is None:
        if not raw.poset_path:
            raise ParseError("missing 'poset:' line")
        poset = load_poset_file(resolve_path(raw.poset_path, path))
    return validate_interpretation(raw, poset), poset


def dump_interpretation(interpretation, poset_path=None):
    """Render an interpretation in the file format; empty relations are kept."""
    lines = []
    if poset_path:
        lines.append(f'poset: {poset_path}')
    lines.append('worlds: ' + ' '.join(interpretation.worlds))
    for name in interpretation.poset.generators:
        edges = ' '.join(f'{a}->{b}' for a, b in interpretation.pairs(interpretation.relations[name]))
        lines.append(f'rel {name}: {edges}'.rstrip())
    for atom in sorted(interpretation.valuation):
        lines.append(f"val {atom}: {' '.join(interpretation.true_worlds(atom))}".rstrip())
    return '\n'.join(lines) + '\n'
