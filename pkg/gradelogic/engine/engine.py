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
Forward-chaining saturation over graded Horn knowledge bases.

Every atom carries a history of versions; a version records its grade and
what produced it (a fact, a rule firing on given body versions, or the
previous version joined with a new contribution). Traces are rebuilt from
these supports as proofs of ``P -> [g] a`` where ``P`` conjoins the cited
premises.
"""
from collections import defaultdict, deque
from dataclasses import dataclass
from enum import Enum

from gradelogic.formulas import Atom, And, Implies, Box, conjoin
from gradelogic.grades import Leaf, Join, meet, join, grade_leq, to_expr
from gradelogic.proofs import ProofBuilder, Rule, box_implication
from gradelogic.utils import UnderivableError, get_logger, Timer

__all__ = [
    'Comparison', 'FactSupport', 'RuleSupport', 'PrevSupport', 'Version', 'QueryResult',
    'InferenceEngine', 'saturate', 'query', 'compare',
]

logger = get_logger(__name__)


class Comparison(str, Enum):
    FIRST_HIGHER = 'first-higher'
    SECOND_HIGHER = 'second-higher'
    EQUAL = 'equal'
    INCOMPARABLE = 'incomparable'


@dataclass(frozen=True)
class FactSupport:
    fact: int


@dataclass(frozen=True)
class RuleSupport:
    """A rule firing; ``body`` pairs each body atom with the version it used."""
    rule: int
    body: tuple


@dataclass(frozen=True)
class PrevSupport:
    version: int


@dataclass(frozen=True)
class Version:
    grade: object
    supports: tuple


@dataclass(frozen=True)
class QueryResult:
    atom: str
    grade: object
    trace: object


class InferenceEngine:
    """
    Saturating engine over one knowledge base.

    Args:
        kb (KnowledgeBase): Facts and rules.

    Examples:
        >>> engine = InferenceEngine(kb)
        >>> engine.saturate()['ill'].render()
        '(alpha & gamma) | (beta & delta)'
    """
    def __init__(self, kb):
        self.kb = kb
        self.poset = kb.poset
        self._versions = None

    @property
    def versions(self):
        if self._versions is None:
            self._versions = self._saturate()
        return self._versions

    def _saturate(self):
        timer = Timer().start()
        poset = self.poset
        versions = defaultdict(list)
        triggers = defaultdict(list)
        for position, rule in enumerate(self.kb.rules):
            for atom in rule.body:
                triggers[atom].append((position, rule))
        agenda = deque()

        def contribute(atom, grade, support):
            history = versions[atom]
            if history:
                current = history[-1].grade
                grade = join(poset, current, grade)
                if grade == current:
                    return
                supports = (PrevSupport(len(history) - 1), support)
            else:
                supports = (support,)
            history.append(Version(grade, supports))
            agenda.append(atom)
            logger.debug("%s raised to %s", atom, grade.render())

        for position, fact in enumerate(self.kb.facts):
            contribute(fact.atom, fact.grade, FactSupport(position))
        firings = 0
        while agenda:
            atom = agenda.popleft()
            for position, rule in triggers[atom]:
                if not all(versions.get(name) for name in rule.body):
                    continue
                firings += 1
                grade = rule.grade
                for name in rule.body:
                    grade = meet(poset, grade, versions[name][-1].grade)
                body = tuple((name, len(versions[name]) - 1) for name in rule.body)
                contribute(rule.head, grade, RuleSupport(position, body))
        logger.info("saturated %d atoms with %d versions and %d rule firings (%.3fs)",
                    len(versions), sum(len(history) for history in versions.values()), firings, timer.end())
        return {atom: tuple(history) for atom, history in versions.items() if history}

    def saturate(self):
        """Best derivable grade of every derivable atom, sorted by atom."""
        return {atom: self.versions[atom][-1].grade for atom in sorted(self.versions)}

    def grade(self, atom):
        history = self.versions.get(atom)
        if not history:
            raise UnderivableError(atom)
        return history[-1].grade

    def query(self, atom):
        """Best grade of ``atom`` with a proof of ``P -> [grade] atom``."""
        grade = self.grade(atom)
        return QueryResult(atom=atom, grade=grade, trace=_TraceWriter(self).write(atom))

    def compare(self, first, second):
        """Compare the best grades of two atoms."""
        a, b = self.grade(first), self.grade(second)
        below, above = grade_leq(self.poset, a, b), grade_leq(self.poset, b, a)
        if below and above:
            return Comparison.EQUAL
        if above:
            return Comparison.FIRST_HIGHER
        if below:
            return Comparison.SECOND_HIGHER
        return Comparison.INCOMPARABLE


class _TraceWriter:
    """Rebuild the derivation of one atom as a proof."""

    def __init__(self, engine):
        self.engine = engine
        self.kb = engine.kb
        self.versions = engine.versions
        self.builder = ProofBuilder(engine.poset)
        self.premise = None
        self._lines = {}
        self._premise_lines = {}

    def _cited(self, atom, index, facts, rules, seen):
        if (atom, index) in seen:
            return
        seen.add((atom, index))
        for support in self.versions[atom][index].supports:
            if isinstance(support, FactSupport):
                facts.add(support.fact)
            elif isinstance(support, PrevSupport):
                self._cited(atom, support.version, facts, rules, seen)
            else:
                rules.add(support.rule)
                for name, version in support.body:
                    self._cited(name, version, facts, rules, seen)

    def _premise_line(self, formula):
        if formula not in self._premise_lines:
            self._premise_lines[formula] = self.builder.add(Implies(self.premise, formula), Rule.TAUT)
        return self._premise_lines[formula]

    def _boxed(self, grade, formula):
        return Box(to_expr(grade), formula)

    def _conjunction(self, node, body):
        """Line ``P -> [m] node`` for a rule body subtree; returns (line, m)."""
        if isinstance(node, Atom):
            index = body[node.name]
            return self._version_line(node.name, index), self.versions[node.name][index].grade
        left_line, left_grade = self._conjunction(node.left, body)
        right_line, right_grade = self._conjunction(node.right, body)
        poset, builder = self.engine.poset, self.builder
        grade = meet(poset, left_grade, right_grade)
        expr = to_expr(grade)
        both = And(node.left, node.right)
        pairing = Implies(node.left, Implies(node.right, both))
        taut = builder.add(pairing, Rule.TAUT)
        nec = builder.add(Box(Leaf(poset.top), pairing), Rule.NEC, (taut,))
        weak = builder.add(Box(expr, pairing), Rule.WEAK, (nec,))
        first = builder.add(Implies(Box(expr, pairing), Implies(Box(expr, node.left), Box(expr, pairing.right))),
                            Rule.K)
        second = builder.add(Implies(Box(expr, pairing.right), Implies(Box(expr, node.right), Box(expr, both))),
                             Rule.K)
        lower_left = box_implication(builder, to_expr(left_grade), expr, node.left)
        lower_right = box_implication(builder, to_expr(right_grade), expr, node.right)
        line = builder.glue([left_line, right_line, weak, first, second, lower_left, lower_right],
                            Implies(self.premise, Box(expr, both)))
        return line, grade

    def _rule_line(self, support):
        rule = self.kb.rules[support.rule]
        condition = rule.formula.body.left
        head = rule.formula.body.right
        body_line, body_grade = self._conjunction(condition, dict(support.body))
        grade = meet(self.engine.poset, body_grade, rule.grade)
        goal = Implies(self.premise, self._boxed(grade, head))
        instance = Implies(And(self._boxed(body_grade, condition), self._boxed(rule.grade, rule.formula.body)),
                           self._boxed(grade, head))
        builder = self.builder
        axiom = builder.add(instance, Rule.AG)
        return builder.glue([body_line, self._premise_line(rule.formula), axiom], goal), grade

    def _version_line(self, atom, index):
        key = (atom, index)
        if key in self._lines:
            return self._lines[key]
        version = self.versions[atom][index]
        target = Atom(atom)
        parts = []
        for support in version.supports:
            if isinstance(support, FactSupport):
                fact = self.kb.facts[support.fact]
                line = self.builder.add(Implies(self.premise, self._boxed(fact.grade, target)), Rule.TAUT)
                parts.append((line, fact.grade))
            elif isinstance(support, PrevSupport):
                parts.append((self._version_line(atom, support.version), self.versions[atom][support.version].grade))
            else:
                parts.append(self._rule_line(support))
        line, grade = parts[0]
        if len(parts) == 2:
            other, other_grade = parts[1]
            left, right = to_expr(grade), to_expr(other_grade)
            axiom = self.builder.add(Implies(And(Box(left, target), Box(right, target)),
                                             Box(Join(left, right), target)), Rule.A1)
            line = self.builder.glue([line, other, axiom], Implies(self.premise, self._boxed(version.grade, target)))
        self._lines[key] = line
        return line

    def write(self, atom):
        history = self.versions[atom]
        facts, rules, seen = set(), set(), set()
        self._cited(atom, len(history) - 1, facts, rules, seen)
        premises = [self.kb.facts[i].formula for i in sorted(facts)] + [self.kb.rules[i].formula for i in sorted(rules)]
        self.premise = conjoin(premises)
        self._version_line(atom, len(history) - 1)
        return self.builder.proof(poset_path=self.kb.poset_path)


def saturate(kb):
    """Best grades of every derivable atom of ``kb``."""
    return InferenceEngine(kb).saturate()


def query(kb, atom):
    """Best grade of ``atom`` with its trace; raises UnderivableError."""
    return InferenceEngine(kb).query(atom)


def compare(kb, first, second):
    return InferenceEngine(kb).compare(first, second)
