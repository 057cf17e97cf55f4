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

"""Generator poset with its distinguished top grade."""
import re
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from gradelogic.utils import (
    ParseError, CycleError, MissingTopError, UndeclaredGeneratorError,
    iter_lines, split_header, get_logger,
)

__all__ = ['GeneratorPoset', 'load_poset', 'load_poset_file', 'poset_leq', 'IDENTIFIER']

logger = get_logger(__name__)

IDENTIFIER = re.compile(r'[A-Za-z][A-Za-z0-9_]*')
_PAIR = re.compile(r'^([A-Za-z][A-Za-z0-9_]*)\s*<\s*([A-Za-z][A-Za-z0-9_]*)$')


@dataclass(frozen=True)
class GeneratorPoset:
    """
    A finite partially ordered set of grades with a top element.

    Use :meth:`build` rather than the constructor: it validates the order and
    precomputes the strict transitive closure.

    Args:
        generators (tuple[str]): Distinct generator ids, top included.
        top (str): The universal upper bound.
        strict_pairs (frozenset): Declared pairs ``(a, b)`` meaning a < b.
        closure (frozenset): Transitive closure of the strict order.
    """
    generators: tuple
    top: str
    strict_pairs: frozenset
    closure: frozenset

    @classmethod
    def build(cls, generators, top, pairs=()):
        """
        Validate and close a generator order.

        Args:
            generators (Iterable[str]): Declared generators; ``top`` is added if absent.
            top (str): The top generator.
            pairs (Iterable[tuple]): Strict pairs ``(a, b)`` for a < b.

        Returns:
            GeneratorPoset, with every generator placed below ``top``.

        Raises:
            UndeclaredGeneratorError: A pair names an unknown generator.
            CycleError: The pairs contain a cycle.

        Examples:
            >>> poset = GeneratorPoset.build(['a', 'b'], 'T', [('a', 'b')])
            >>> poset.leq('a', 'T')
            True
        """
        names = list(dict.fromkeys(generators))
        if top not in names:
            names.append(top)
        declared = set(names)
        pairs = tuple(pairs)
        for low, high in pairs:
            for name in (low, high):
                if name not in declared:
                    raise UndeclaredGeneratorError(name)

        graph = nx.DiGraph()
        graph.add_nodes_from(names)
        graph.add_edges_from(pairs)
        try:
            cycle = nx.find_cycle(graph)
        except nx.NetworkXNoCycle:
            cycle = None
        if cycle:
            raise CycleError([edge[0] for edge in cycle] + [cycle[0][0]])
        # top is a universal upper bound
        graph.add_edges_from((name, top) for name in names if name != top)
        try:
            cycle = nx.find_cycle(graph)
        except nx.NetworkXNoCycle:
            cycle = None
        if cycle:
            raise CycleError([edge[0] for edge in cycle] + [cycle[0][0]])

        closure = nx.transitive_closure_dag(graph)
        return cls(generators=tuple(names), top=top, strict_pairs=frozenset(pairs),
                   closure=frozenset(closure.edges()))

    def __contains__(self, name):
        return name in self.generators

    def check(self, name):
        """Raise UndeclaredGeneratorError unless ``name`` is a generator."""
        if name not in self.generators:
            raise UndeclaredGeneratorError(name)
        return name

    def leq(self, low, high):
        """True iff ``low <= high`` in the reflexive-transitive closure."""
        return low == high or (low, high) in self.closure

    def less(self, low, high):
        """True iff ``low < high``."""
        return (low, high) in self.closure

    @cached_property
    def index(self):
        """Position of every generator in lexicographic order."""
        return {name: i for i, name in enumerate(sorted(self.generators))}

    @cached_property
    def graph(self):
        """Strict order as a networkx DiGraph (closed)."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.generators)
        graph.add_edges_from(self.closure)
        return graph

    def covers(self):
        """Covering pairs (Hasse edges) of the generator order, sorted."""
        return sorted(nx.transitive_reduction(self.graph).edges())

    def linear_extension(self):
        """Generators listed bottom-up, ties broken lexicographically."""
        return list(nx.lexicographical_topological_sort(self.graph))

    def below(self, name):
        """Generators strictly below ``name``."""
        return sorted(low for low, high in self.closure if high == name)

    def dump(self):
        """Render the poset in the poset file format."""
        lines = ['generators: ' + ' '.join(self.generators), f'top: {self.top}', 'order:']
        lines += [f'{low} < {high}' for low, high in self.covers() if high != self.top]
        return '\n'.join(lines) + '\n'


def poset_leq(poset, low, high):
    """
    Decide ``low <= high`` among generators.

    Raises:
        UndeclaredGeneratorError: Either id is not a generator.
    """
    poset.check(low)
    poset.check(high)
    return poset.leq(low, high)


def _identifiers(value, number):
    names = value.split()
    for name in names:
        if not IDENTIFIER.fullmatch(name):
            raise ParseError(f"invalid identifier '{name}'", number)
    return names


def load_poset(text):
    """
    Parse the poset file format.

    The file holds a ``generators:`` line, a ``top:`` line and an ``order:``
    section of ``a < b`` lines; ``#`` starts a comment.

    Args:
        text (str): File content.

    Returns:
        GeneratorPoset, validated and closed.

    Examples:
        >>> poset = load_poset("generators: a\\ntop: T\\norder:")
        >>> poset.generators
        ('a', 'T')
    """
    generators = None
    top = None
    pairs = []
    in_order = False
    for number, content in iter_lines(text):
        if in_order:
            match = _PAIR.match(content)
            if match:
                pair = match.group(1), match.group(2)
                pairs.append((pair, number))
                continue
        key, value = split_header(content, number)
        if key == 'generators':
            if generators is not None:
                raise ParseError("duplicate 'generators:' line", number)
            generators = _identifiers(value, number)
        elif key == 'top':
            names = _identifiers(value, number)
            if len(names) != 1:
                raise ParseError("'top:' takes exactly one identifier", number)
            top = names[0]
        elif key == 'order':
            if value:
                raise ParseError("'order:' takes no value; list pairs on the following lines", number)
            in_order = True
        else:
            raise ParseError(f"unknown key '{key}'", number)

    if generators is None:
        raise ParseError("missing 'generators:' line")
    if top is None:
        raise MissingTopError("missing 'top:' line")
    declared = set(generators) | {top}
    for (low, high), number in pairs:
        for name in (low, high):
            if name not in declared:
                raise UndeclaredGeneratorError(name, number)
    poset = GeneratorPoset.build(generators, top, [pair for pair, _ in pairs])
    logger.debug("loaded poset with %d generators", len(poset.generators))
    return poset


def load_poset_file(path):
    """Read and parse a poset file."""
    with open(path, 'r', encoding='utf-8') as file:
        return load_poset(file.read())
