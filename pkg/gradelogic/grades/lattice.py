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
The distributive lattice generated by a generator poset.

Every element is kept in a canonical join-of-meets form: a set of clauses,
each clause an antichain of generators read as their meet, the clause set
itself an antichain under the meet-set order. Two expressions denote the same
grade iff their normal forms are equal.
"""
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from gradelogic.utils import GuardExceededError, get_logger, Timer
from .expr import Leaf, Meet, Join, check_expr, meet_all, join_all

__all__ = [
    'GradeNF', 'normalize', 'grade_leq', 'meet', 'join', 'to_expr', 'generator_nf', 'top_nf',
    'clause_leq', 'enumerate_lattice', 'LatticeEnumeration',
    'DEFAULT_MAX_GENERATORS', 'DEFAULT_MAX_ELEMENTS',
]

logger = get_logger(__name__)

DEFAULT_MAX_GENERATORS = 8
DEFAULT_MAX_ELEMENTS = 20000


@dataclass(frozen=True)
class GradeNF:
    """
    Canonical form of a lattice element.

    Args:
        clauses (tuple[tuple[str]]): Sorted meet-sets, each a sorted tuple of
            generator ids.
    """
    clauses: tuple

    def render(self):
        """Surface syntax, e.g. ``(alpha & gamma) | (beta & delta)``."""
        if len(self.clauses) == 1:
            return ' & '.join(self.clauses[0])
        return ' | '.join(f"({' & '.join(clause)})" if len(clause) > 1 else clause[0]
                          for clause in self.clauses)

    def __str__(self):
        return self.render()

    @property
    def generator(self):
        """The generator id if this element is a single generator, else None."""
        if len(self.clauses) == 1 and len(self.clauses[0]) == 1:
            return self.clauses[0][0]
        return None


def _minimal_members(poset, members):
    """Meet of a set of generators: keep its minimal elements."""
    members = set(members)
    return tuple(sorted(s for s in members if not any(poset.less(t, s) for t in members)))


def clause_leq(poset, low, high):
    """Meet-set order: ``low <= high`` iff every t in high has some s in low with s <= t."""
    return all(any(poset.leq(s, t) for s in low) for t in high)


def _reduce_clauses(poset, clauses):
    clauses = set(clauses)
    kept = [c for c in clauses
            if not any(d != c and clause_leq(poset, c, d) for d in clauses)]
    return GradeNF(tuple(sorted(kept)))


def generator_nf(poset, name):
    """Normal form of a single generator."""
    poset.check(name)
    return GradeNF(((name,),))


def top_nf(poset):
    """Normal form of the top grade."""
    return GradeNF(((poset.top,),))


def meet(poset, a, b):
    """Greatest lower bound of two normal forms."""
    return _reduce_clauses(poset, (_minimal_members(poset, s + t) for s in a.clauses for t in b.clauses))


def join(poset, a, b):
    """Least upper bound of two normal forms."""
    return _reduce_clauses(poset, a.clauses + b.clauses)


def grade_leq(poset, a, b):
    """
    Decide ``a <= b`` in the generated lattice.

    Every clause of ``a`` must lie below some clause of ``b``.

    Examples:
        >>> grade_leq(poset, normalize(poset, Leaf('gamma')),
        ...           normalize(poset, Meet(Leaf('alpha'), Leaf('delta'))))
        True
    """
    return all(any(clause_leq(poset, s, t) for t in b.clauses) for s in a.clauses)


@lru_cache(maxsize=65536)
def _normalize(poset, expr):
    if isinstance(expr, Leaf):
        return GradeNF(((expr.name,),))
    left = _normalize(poset, expr.left)
    right = _normalize(poset, expr.right)
    if isinstance(expr, Meet):
        return meet(poset, left, right)
    if isinstance(expr, Join):
        return join(poset, left, right)
    raise TypeError(f"not a grade expression: {expr!r}")


def normalize(poset, expr):
    """
    Canonical form of a grade expression.

    Raises:
        UndeclaredGeneratorError: ``expr`` names an unknown generator.
    """
    check_expr(poset, expr)
    return _normalize(poset, expr)


def to_expr(nf):
    """Left-associated expression whose normal form is ``nf``."""
    return join_all([meet_all([Leaf(name) for name in clause]) for clause in nf.clauses])


@dataclass(frozen=True)
class LatticeEnumeration:
    """
    Elements of a generated lattice and its covering relation.

    Args:
        elements (tuple[GradeNF]): Sorted by rendering.
        covers (tuple[tuple[GradeNF, GradeNF]]): Pairs ``(lower, upper)``.
    """
    elements: tuple
    covers: tuple

    def __len__(self):
        return len(self.elements)


def enumerate_lattice(poset, depth_cap=None, max_generators=DEFAULT_MAX_GENERATORS,
                      max_elements=DEFAULT_MAX_ELEMENTS, hasse=True):
    """
    Close the generators under meet and join.

    Args:
        poset (GeneratorPoset): The generators.
        depth_cap (int): Maximum number of closure rounds; None runs to the fixpoint.
        max_generators (int): Size guard on the poset.
        max_elements (int): Size guard on the result.
        hasse (bool): Whether to compute covering edges.

    Returns:
        LatticeEnumeration.

    Raises:
        GuardExceededError: Either guard is exceeded.
    """
    if len(poset.generators) > max_generators:
        raise GuardExceededError(
            f"enumeration is limited to {max_generators} generators, poset has {len(poset.generators)}")
    timer = Timer().start()
    elements = {generator_nf(poset, name) for name in poset.generators}
    frontier = set(elements)
    rounds = 0
    while frontier and (depth_cap is None or rounds < depth_cap):
        found = set()
        for a in frontier:
            for b in list(elements):
                for c in (meet(poset, a, b), join(poset, a, b)):
                    if c not in elements and c not in found:
                        found.add(c)
                        if len(elements) + len(found) > max_elements:
                            raise GuardExceededError(f"lattice has more than {max_elements} elements")
        elements |= found
        frontier = found
        rounds += 1

    ordered = tuple(sorted(elements, key=GradeNF.render))
    covers = ()
    if hasse:
        graph = nx.DiGraph()
        graph.add_nodes_from(ordered)
        graph.add_edges_from((a, b) for a in ordered for b in ordered
                             if a != b and grade_leq(poset, a, b))
        reduced = nx.transitive_reduction(graph)
        covers = tuple(sorted(reduced.edges(), key=lambda edge: (edge[0].render(), edge[1].render())))
    logger.info("enumerated %d lattice elements in %d rounds (%.3fs)", len(ordered), rounds, timer.end())
    return LatticeEnumeration(ordered, covers)
