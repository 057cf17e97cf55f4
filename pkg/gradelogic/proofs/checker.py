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
Line-by-line checker for the graded axiom system.

Grades inside boxes are compared up to equivalence: a scheme slot written
``[a & b]`` is matched by any expression with the same normal form. Schemes
that encode the lattice order (A2 to A5 and the glb rule) require their box
bodies to be the reserved atom p0.
"""
from dataclasses import dataclass

from gradelogic.formulas import Atom, Const, Not, And, Or, Implies, Box, RESERVED_ATOM, formula_key
from gradelogic.grades import Meet, Join, normalize, meet, join, top_nf
from gradelogic.utils import GradeLogicError, get_logger
from .derived import expand_derived
from .proof import Rule
from .tautology import is_tautology, DEFAULT_MAX_VARIABLES

__all__ = ['LineDiagnostic', 'CheckReport', 'check_line', 'check_proof']

logger = get_logger(__name__)

_SCHEMES = {
    Rule.K: "[a] (A -> B) -> [a] A -> [a] B",
    Rule.DTOP: "![T] false",
    Rule.A1: "[a] A & [b] A -> [a | b] A",
    Rule.A2: "[a] p0 | [b] p0 -> [a & b] p0",
    Rule.A3: "[a | b] p0 -> [a] p0 & [b] p0",
    Rule.A4: "[a & b | a & c] p0 -> [a & (b | c)] p0",
    Rule.A5: "[a] p0 -> [b] p0 for generators b < a",
    Rule.MP: "B from A and A -> B",
    Rule.NEC: "[T] A from A",
    Rule.GLB: "[b & c] p0 -> [a] p0 from [b] p0 -> [a] p0 and [c] p0 -> [a] p0",
    Rule.GEN: "[b] A -> [a] A from [b] p0 -> [a] p0",
}


@dataclass(frozen=True)
class LineDiagnostic:
    number: int
    message: str

    def __str__(self):
        return f"line {self.number}: {self.message}"


@dataclass(frozen=True)
class CheckReport:
    """
    Args:
        accepted (bool): Every line matches its justification.
        diagnostics (tuple[LineDiagnostic]): One entry per rejected line.
        conclusion (Formula): Formula of the last line.
    """
    accepted: bool
    diagnostics: tuple
    conclusion: object = None

    def __bool__(self):
        return self.accepted


class _Mismatch(Exception):
    """Raised by the shape checks; the message names the expected shape."""


class _Shapes:
    """Pattern helpers bound to one poset."""

    def __init__(self, poset, rule):
        self.poset = poset
        self.rule = rule

    def fail(self, detail=None):
        message = f"does not match {self.rule.value}: {_SCHEMES.get(self.rule, self.rule.value)}"
        raise _Mismatch(f"{message} ({detail})" if detail else message)

    def node(self, formula, kind):
        if not isinstance(formula, kind):
            self.fail()
        return formula

    def same(self, first, second):
        if formula_key(self.poset, first) != formula_key(self.poset, second):
            self.fail("subformulas differ")

    def nf(self, grade):
        return normalize(self.poset, grade)

    def grade_is(self, grade, expected, what):
        if self.nf(grade) != expected:
            self.fail(f"grade is not {what}")

    def p0_box(self, formula):
        box = self.node(formula, Box)
        if box.body != Atom(RESERVED_ATOM):
            self.fail("body must be the reserved atom p0")
        return box

    def order_line(self, formula):
        """``[b] p0 -> [a] p0``; returns (b, a)."""
        imp = self.node(formula, Implies)
        return self.p0_box(imp.left).grade, self.p0_box(imp.right).grade


def _check_k(shape, formula):
    imp = shape.node(formula, Implies)
    outer = shape.node(imp.left, Box)
    inner = shape.node(outer.body, Implies)
    rest = shape.node(imp.right, Implies)
    first, second = shape.node(rest.left, Box), shape.node(rest.right, Box)
    grade = shape.nf(outer.grade)
    shape.grade_is(first.grade, grade, "the grade of the outer box")
    shape.grade_is(second.grade, grade, "the grade of the outer box")
    shape.same(inner.left, first.body)
    shape.same(inner.right, second.body)


def _check_dtop(shape, formula):
    box = shape.node(shape.node(formula, Not).body, Box)
    if box.body != Const(False):
        shape.fail("body must be false")
    shape.grade_is(box.grade, top_nf(shape.poset), "the top grade")


def _check_a1(shape, formula):
    imp = shape.node(formula, Implies)
    both = shape.node(imp.left, And)
    first, second, goal = shape.node(both.left, Box), shape.node(both.right, Box), shape.node(imp.right, Box)
    shape.same(first.body, second.body)
    shape.same(first.body, goal.body)
    shape.grade_is(goal.grade, join(shape.poset, shape.nf(first.grade), shape.nf(second.grade)), "the join")


def _check_a2(shape, formula):
    imp = shape.node(formula, Implies)
    either = shape.node(imp.left, Or)
    first, second, goal = shape.p0_box(either.left), shape.p0_box(either.right), shape.p0_box(imp.right)
    shape.grade_is(goal.grade, meet(shape.poset, shape.nf(first.grade), shape.nf(second.grade)), "the meet")


def _check_a3(shape, formula):
    imp = shape.node(formula, Implies)
    source = shape.p0_box(imp.left)
    both = shape.node(imp.right, And)
    first, second = shape.p0_box(both.left), shape.p0_box(both.right)
    shape.grade_is(source.grade, join(shape.poset, shape.nf(first.grade), shape.nf(second.grade)), "the join")


def _check_a4(shape, formula):
    imp = shape.node(formula, Implies)
    source, goal = shape.p0_box(imp.left), shape.p0_box(imp.right)
    union = shape.node(source.grade, Join)
    left, right = shape.node(union.left, Meet), shape.node(union.right, Meet)
    common = shape.node(goal.grade, Meet)
    split = shape.node(common.right, Join)
    nf = shape.nf
    if not (nf(left.left) == nf(right.left) == nf(common.left)
            and nf(left.right) == nf(split.left) and nf(right.right) == nf(split.right)):
        shape.fail("grade components differ")


def _check_a5(shape, formula):
    high, low = shape.order_line(formula)
    high, low = shape.nf(high).generator, shape.nf(low).generator
    if high is None or low is None:
        shape.fail("grades must be generators")
    if not shape.poset.less(low, high):
        shape.fail(f"{low} < {high} does not hold")


def _check_mp(shape, formula, cited):
    premise, rule = cited
    shape.same(rule, Implies(premise, formula))


def _check_nec(shape, formula, cited):
    box = shape.node(formula, Box)
    shape.grade_is(box.grade, top_nf(shape.poset), "the top grade")
    shape.same(box.body, cited[0])


def _check_glb(shape, formula, cited):
    first_low, first_high = shape.order_line(cited[0])
    second_low, second_high = shape.order_line(cited[1])
    low, high = shape.order_line(formula)
    target = shape.nf(high)
    shape.grade_is(first_high, target, "the common conclusion")
    shape.grade_is(second_high, target, "the common conclusion")
    shape.grade_is(low, meet(shape.poset, shape.nf(first_low), shape.nf(second_low)), "the meet of the antecedents")


def _check_gen(shape, formula, cited):
    low, high = shape.order_line(cited[0])
    imp = shape.node(formula, Implies)
    source, goal = shape.node(imp.left, Box), shape.node(imp.right, Box)
    shape.same(source.body, goal.body)
    shape.grade_is(source.grade, shape.nf(low), "the antecedent grade of the cited line")
    shape.grade_is(goal.grade, shape.nf(high), "the conclusion grade of the cited line")


_AXIOMS = {Rule.K: _check_k, Rule.DTOP: _check_dtop, Rule.A1: _check_a1, Rule.A2: _check_a2,
           Rule.A3: _check_a3, Rule.A4: _check_a4, Rule.A5: _check_a5}
_INFERENCES = {Rule.MP: _check_mp, Rule.NEC: _check_nec, Rule.GLB: _check_glb, Rule.GEN: _check_gen}


def _cited(number, justification, formulas):
    cited = []
    for ref in justification.refs:
        if ref >= number or ref not in formulas:
            raise _Mismatch(f"cited line {ref} is not an earlier line")
        cited.append(formulas[ref])
    return cited


def check_line(poset, number, formula, justification, formulas, max_variables=DEFAULT_MAX_VARIABLES):
    """
    Check one core line against the earlier ``formulas`` (line number to formula).

    Returns:
        str, a diagnostic message, or None when the line is correct.
    """
    try:
        cited = _cited(number, justification, formulas)
        rule = justification.rule
        if rule is Rule.TAUT:
            if not is_tautology(poset, formula, max_variables):
                return "is not a tautology"
        elif rule in _AXIOMS:
            _AXIOMS[rule](_Shapes(poset, rule), formula)
        elif rule in _INFERENCES:
            _INFERENCES[rule](_Shapes(poset, rule), formula, cited)
        else:
            return f"'{rule.value}' is not a core rule"
    except _Mismatch as err:
        return str(err)
    except GradeLogicError as err:
        return str(err)
    return None


def _check_derived(poset, line, formulas, start, max_variables):
    cited = _cited(line.number, line.justification, formulas)
    local = dict(zip(line.justification.refs, cited))
    expansion = expand_derived(poset, line, local, start)
    for step in expansion:
        problem = check_line(poset, step.number, step.formula, step.justification, local, max_variables)
        if problem:
            return f"expansion of '{line.justification}' fails: {problem}"
        local[step.number] = step.formula
    return None


def check_proof(proof, max_variables=DEFAULT_MAX_VARIABLES):
    """
    Check every line of a proof.

    Derived lines are expanded to core steps and the steps checked in place.
    A rejected line still becomes available to later citations, so one run
    reports every faulty line.

    Args:
        proof (Proof): The derivation.
        max_variables (int): Variable guard of the tautology check.

    Returns:
        CheckReport.
    """
    formulas = {}
    diagnostics = []
    spare = (proof.lines[-1].number + 1) if proof.lines else 1
    for line in proof.lines:
        if line.justification.derived:
            try:
                problem = _check_derived(proof.poset, line, formulas, spare, max_variables)
            except (_Mismatch, GradeLogicError) as err:
                problem = str(err)
        else:
            problem = check_line(proof.poset, line.number, line.formula, line.justification, formulas, max_variables)
        if problem:
            logger.debug("line %d rejected: %s", line.number, problem)
            diagnostics.append(LineDiagnostic(line.number, problem))
        else:
            logger.debug("line %d accepted (%s)", line.number, line.justification)
        formulas[line.number] = line.formula
    if not proof.lines:
        diagnostics.append(LineDiagnostic(0, "empty proof"))
    return CheckReport(accepted=not diagnostics, diagnostics=tuple(diagnostics), conclusion=proof.conclusion)
