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
Constructive order proofs: for ``a <= b`` emit a derivation of ``[b]p0 -> [a]p0``.

The construction follows the normal forms. For every clause A of ``a`` a
clause B of ``b`` with A <= B is selected (A3), B is brought down to A one
generator at a time (A5 for generator steps, A2 to enter the meet, glb to
collect the members of B), and the clauses of ``a`` are finally joined (A1).
Propositional glue is done with tautologies and modus ponens.
"""
from gradelogic.formulas import Box, Implies, And, Or, P0
from gradelogic.grades import Leaf, Meet, Join, grade_leq, clause_leq, normalize, to_expr, meet_all, join_all
from gradelogic.utils import OrderError
from .builder import ProofBuilder
from .proof import Rule

__all__ = ['emit_order', 'prove_order', 'box_implication', 'weaken_line']


def _meet_expr(clause):
    return meet_all([Leaf(name) for name in clause])


def _box(expr):
    return Box(expr, P0)


def _into_meet(builder, member, clause):
    """``[s]p0 -> [meet of clause]p0`` for a member s of the clause, or None if the clause is s."""
    if clause == (member,):
        return None
    rest = _meet_expr([name for name in clause if name != member])
    axiom = builder.add(Implies(Or(_box(Leaf(member)), _box(rest)), _box(Meet(Leaf(member), rest))), Rule.A2)
    return builder.glue([axiom], Implies(_box(Leaf(member)), _box(_meet_expr(clause))))


def _clause_order(builder, clause, upper):
    """``[meet of upper]p0 -> [meet of clause]p0`` for meet-sets clause <= upper."""
    if clause == upper:
        return None
    poset = builder.poset
    target = _meet_expr(clause)
    steps = []
    for high in upper:
        low = next(name for name in clause if poset.leq(name, high))
        step = None
        if low != high:
            step = builder.add(Implies(_box(Leaf(high)), _box(Leaf(low))), Rule.A5)
        line = builder.chain(step, _into_meet(builder, low, clause))
        if line is None:
            line = builder.add(Implies(_box(Leaf(high)), _box(target)), Rule.TAUT)
        steps.append(line)

    current, expr = steps[0], Leaf(upper[0])
    for high, line in zip(upper[1:], steps[1:]):
        expr = Meet(expr, Leaf(high))
        current = builder.add(Implies(_box(expr), _box(target)), Rule.GLB, (current, line))
    return current


def _select_clause(builder, high, upper):
    """``[b]p0 -> [meet of upper]p0`` for a clause of ``b``, or None if it is the only one."""
    if len(high.clauses) == 1:
        return None
    upper_expr = _meet_expr(upper)
    rest = join_all([_meet_expr(clause) for clause in high.clauses if clause != upper])
    axiom = builder.add(Implies(_box(Join(upper_expr, rest)), And(_box(upper_expr), _box(rest))), Rule.A3)
    return builder.glue([axiom], Implies(_box(to_expr(high)), _box(upper_expr)))


def emit_order(builder, low, high):
    """
    Emit a derivation of ``[to_expr(high)]p0 -> [to_expr(low)]p0``.

    Args:
        builder (ProofBuilder): Receives the lines.
        low (GradeNF): The smaller grade.
        high (GradeNF): The larger grade.

    Returns:
        int, number of the concluding line.

    Raises:
        OrderError: ``low <= high`` does not hold.
    """
    poset = builder.poset
    if not grade_leq(poset, low, high):
        raise OrderError(f"{low.render()} is not below {high.render()}")
    source = _box(to_expr(high))
    target = Implies(source, _box(to_expr(low)))
    if low == high:
        return builder.add(target, Rule.TAUT)

    current, expr = None, None
    for clause in low.clauses:
        upper = next(candidate for candidate in high.clauses if clause_leq(poset, clause, candidate))
        line = builder.chain(_select_clause(builder, high, upper), _clause_order(builder, clause, upper))
        if line is None:
            line = builder.add(Implies(source, _box(_meet_expr(clause))), Rule.TAUT)
        if current is None:
            current, expr = line, _meet_expr(clause)
            continue
        joined = Join(expr, _meet_expr(clause))
        axiom = builder.add(Implies(And(_box(expr), _box(_meet_expr(clause))), _box(joined)), Rule.A1)
        current = builder.glue([current, line, axiom], Implies(source, _box(joined)))
        expr = joined

    if builder.formula(current) != target:
        current = builder.glue([current], target)
    return current


def prove_order(poset, low, high):
    """
    Proof of ``[high]p0 -> [low]p0``.

    Examples:
        >>> proof = prove_order(poset, normalize(poset, Leaf('gamma')), normalize(poset, Leaf('alpha')))
        >>> [str(line.justification) for line in proof.lines]
        ['A5']
    """
    builder = ProofBuilder(poset)
    emit_order(builder, low, high)
    return builder.proof()


def box_implication(builder, high, low, body):
    """Emit ``[high]body -> [low]body`` for grade expressions low <= high."""
    poset = builder.poset
    high_nf, low_nf = normalize(poset, high), normalize(poset, low)
    target = Implies(Box(high, body), Box(low, body))
    if high_nf == low_nf:
        return builder.add(target, Rule.TAUT)
    order = emit_order(builder, low_nf, high_nf)
    return builder.add(target, Rule.GEN, (order,))


def weaken_line(builder, number, low, formula=None):
    """From line ``[high]body`` derive ``[low]body``; returns the line itself when the grades agree."""
    source = builder.formula(number)
    if normalize(builder.poset, source.grade) == normalize(builder.poset, low):
        return number
    return builder.mp(number, box_implication(builder, source.grade, low, source.body), formula)
