"""
Macro expansion of the derived rules ``ag``, ``gmp`` and ``weak`` into core steps.

- ``weak i``: from ``[a]A`` infer ``[b]A`` for b <= a (order proof, gen, mp).
- ``gmp i j``: from ``[a]A`` and ``[b](A -> B)`` infer ``[g]B`` for g <= a & b
  (weaken both premises to g, then K and mp).
- ``ag``: the theorem ``([a]A & [b](A -> B)) -> [g]B`` for g <= a & b
  (order proofs lifted by gen, one K instance, tautology glue).
"""
from gradelogic.formulas import Box, Implies, And, same_formula, print_formula
from gradelogic.grades import grade_leq, meet, normalize
from gradelogic.utils import ProofError
from .builder import ProofBuilder
from .order import box_implication, weaken_line
from .proof import Rule, Justification, ProofLine, Proof

__all__ = ['expand_derived', 'expand_proof']


def _shape(condition, line, expected):
    if not condition:
        raise ProofError(f"line {line.number}: '{print_formula(line.formula)}' does not have the shape {expected}")


def _below_both(poset, grade, first, second):
    return grade_leq(poset, normalize(poset, grade), meet(poset, normalize(poset, first), normalize(poset, second)))


def _expand_weak(builder, line):
    poset = builder.poset
    source = builder.formula(line.justification.refs[0])
    formula = line.formula
    _shape(isinstance(source, Box) and isinstance(formula, Box) and same_formula(poset, source.body, formula.body),
           line, "'[b] A' from '[a] A'")
    _shape(grade_leq(poset, normalize(poset, formula.grade), normalize(poset, source.grade)),
           line, "'[b] A' with b <= a")
    number = weaken_line(builder, line.justification.refs[0], formula.grade, formula)
    if number == line.justification.refs[0]:
        builder.glue([number], formula)


def _expand_gmp(builder, line):
    poset = builder.poset
    first, second = line.justification.refs
    fact, rule = builder.formula(first), builder.formula(second)
    formula = line.formula
    _shape(isinstance(fact, Box) and isinstance(rule, Box) and isinstance(rule.body, Implies)
           and isinstance(formula, Box), line, "'[g] B' from '[a] A' and '[b] (A -> B)'")
    _shape(same_formula(poset, fact.body, rule.body.left) and same_formula(poset, rule.body.right, formula.body),
           line, "'[g] B' from '[a] A' and '[b] (A -> B)'")
    _shape(_below_both(poset, formula.grade, fact.grade, rule.grade), line, "'[g] B' with g <= a & b")
    grade = formula.grade
    low_fact = weaken_line(builder, first, grade, Box(grade, fact.body))
    low_rule = weaken_line(builder, second, grade, Box(grade, rule.body))
    axiom = builder.add(Implies(Box(grade, rule.body), Implies(Box(grade, rule.body.left), Box(grade, rule.body.right))),
                        Rule.K)
    step = builder.mp(low_rule, axiom)
    builder.mp(low_fact, step, formula)


def _expand_ag(builder, line):
    poset = builder.poset
    formula = line.formula
    shape = "'([a] A & [b] (A -> B)) -> [g] B'"
    _shape(isinstance(formula, Implies) and isinstance(formula.left, And) and isinstance(formula.right, Box),
           line, shape)
    fact, rule, goal = formula.left.left, formula.left.right, formula.right
    _shape(isinstance(fact, Box) and isinstance(rule, Box) and isinstance(rule.body, Implies), line, shape)
    _shape(same_formula(poset, fact.body, rule.body.left) and same_formula(poset, rule.body.right, goal.body),
           line, shape)
    _shape(_below_both(poset, goal.grade, fact.grade, rule.grade), line, f"{shape} with g <= a & b")
    grade = goal.grade
    low_fact = box_implication(builder, fact.grade, grade, fact.body)
    low_rule = box_implication(builder, rule.grade, grade, rule.body)
    axiom = builder.add(Implies(Box(grade, rule.body), Implies(Box(grade, rule.body.left), Box(grade, rule.body.right))),
                        Rule.K)
    builder.glue([low_fact, low_rule, axiom], formula)


_EXPANDERS = {Rule.WEAK: _expand_weak, Rule.GMP: _expand_gmp, Rule.AG: _expand_ag}


def expand_derived(poset, line, cited, start):
    """
    Expand one derived line into core-justified lines.

    Args:
        poset (GeneratorPoset): The grades.
        line (ProofLine): A line justified by ``ag``, ``gmp`` or ``weak``.
        cited (dict): Formulas of the lines ``line`` cites, by number.
        start (int): Number of the first emitted line.

    Returns:
        list[ProofLine], whose last formula is ``line.formula``.

    Raises:
        ProofError: The line does not have the shape its rule requires.
    """
    expander = _EXPANDERS.get(line.justification.rule)
    if expander is None:
        raise ProofError(f"line {line.number}: '{line.justification.rule.value}' is not a derived rule")
    for ref in line.justification.refs:
        if ref not in cited:
            raise ProofError(f"line {line.number}: cited line {ref} is not available")
    builder = ProofBuilder(poset, start=start, cited=cited)
    expander(builder, line)
    return builder.lines


def expand_proof(proof):
    """
    Replace every derived line by its expansion, renumbering from 1.

    Raises:
        ProofError: A derived line has the wrong shape or a citation is not an earlier line.
    """
    renumbered = {}
    formulas = {}
    lines = []
    for line in proof.lines:
        refs = []
        for ref in line.justification.refs:
            if ref not in renumbered:
                raise ProofError(f"line {line.number}: cited line {ref} is not an earlier line")
            refs.append(renumbered[ref])
        justification = Justification(line.justification.rule, tuple(refs))
        start = len(lines) + 1
        if justification.derived:
            moved = ProofLine(line.number, line.formula, justification)
            expanded = expand_derived(proof.poset, moved, {ref: formulas[ref] for ref in refs}, start)
        else:
            expanded = [ProofLine(start, line.formula, justification)]
        for new in expanded:
            formulas[new.number] = new.formula
        lines.extend(expanded)
        renumbered[line.number] = expanded[-1].number
    return Proof(poset=proof.poset, lines=tuple(lines), poset_path=proof.poset_path)
