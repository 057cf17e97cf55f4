"""Knowledge bases of graded Horn assertions."""
from dataclasses import dataclass

from gradelogic.formulas import Atom, And, Implies, Box, parse_formula, print_formula, analyze
from gradelogic.grades import normalize, load_poset_file
from gradelogic.utils import (
    FragmentError, ReservedAtomError, ParseError, UndeclaredGeneratorError,
    iter_lines, split_header, resolve_path, get_logger,
)

__all__ = ['Fact', 'HornRule', 'KnowledgeBase', 'classify_assertion', 'load_kb', 'load_kb_file']

logger = get_logger(__name__)


@dataclass(frozen=True)
class Fact:
    """``[grade] atom``."""
    index: int
    grade: object
    atom: str
    formula: object


@dataclass(frozen=True)
class HornRule:
    """``[grade] (b1 & ... & bn -> head)``; ``body`` lists the distinct body atoms."""
    index: int
    grade: object
    body: tuple
    head: str
    formula: object


@dataclass(frozen=True)
class KnowledgeBase:
    poset: object
    facts: tuple
    rules: tuple
    poset_path: str = None

    @property
    def formulas(self):
        """Assertions in file order."""
        ordered = sorted(self.facts + self.rules, key=lambda item: item.index)
        return [item.formula for item in ordered]

    @property
    def atoms(self):
        found = {fact.atom for fact in self.facts}
        for rule in self.rules:
            found.update(rule.body)
            found.add(rule.head)
        return sorted(found)

    @classmethod
    def from_formulas(cls, poset, formulas, poset_path=None):
        """Build a KB from parsed assertions, in order."""
        facts, rules = [], []
        for index, formula in enumerate(formulas):
            item = classify_assertion(poset, formula, index)
            (facts if isinstance(item, Fact) else rules).append(item)
        return cls(poset=poset, facts=tuple(facts), rules=tuple(rules), poset_path=poset_path)


def _conjuncts(formula, where):
    if isinstance(formula, Atom):
        return [formula.name]
    if isinstance(formula, And):
        return _conjuncts(formula.left, where) + _conjuncts(formula.right, where)
    raise FragmentError(f"{where}rule body must be a conjunction of atoms, got '{print_formula(formula)}'")


def classify_assertion(poset, formula, index, line=None):
    """
    Sort an assertion into a fact or a rule.

    Raises:
        ReservedAtomError: The assertion mentions p0.
        FragmentError: The assertion is not ``[g] a`` or ``[g] (a1 & ... & an -> b)``.
    """
    where = f"line {line}: " if line is not None else ""
    if analyze(formula).uses_reserved:
        raise ReservedAtomError(f"{where}the reserved atom p0 cannot express knowledge")
    if not isinstance(formula, Box):
        raise FragmentError(f"{where}assertion must be boxed, got '{print_formula(formula)}'")
    grade = normalize(poset, formula.grade)
    body = formula.body
    if isinstance(body, Atom):
        return Fact(index=index, grade=grade, atom=body.name, formula=formula)
    if isinstance(body, Implies) and isinstance(body.right, Atom):
        atoms = _conjuncts(body.left, where)
        if len(set(atoms)) != len(atoms):
            raise FragmentError(f"{where}rule body repeats an atom")
        return HornRule(index=index, grade=grade, body=tuple(atoms), head=body.right.name, formula=formula)
    raise FragmentError(f"{where}expected '[g] a' or '[g] (a1 & ... & an -> b)', got '{print_formula(formula)}'")


def load_kb(text, poset=None, base_path=None):
    """
    Parse a KB file: ``poset: <path>`` then ``assert: <formula>`` lines.

    Returns:
        KnowledgeBase.
    """
    poset_path = None
    formulas = []
    for number, content in iter_lines(text):
        key, value = split_header(content, number)
        if key == 'poset':
            poset_path = value
            if poset is None:
                poset = load_poset_file(resolve_path(value, base_path))
            continue
        if key != 'assert':
            raise ParseError(f"expected 'assert:' or 'poset:', got '{key}:'", number)
        if poset is None:
            raise ParseError("'poset:' must come before the first assertion", number)
        try:
            formula = parse_formula(value, poset)
        except ParseError as err:
            raise err.at_line(number) from err
        except UndeclaredGeneratorError as err:
            raise UndeclaredGeneratorError(err.name, number) from err
        formulas.append((formula, number))
    if poset is None:
        raise ParseError("missing 'poset:' line")
    facts, rules = [], []
    for index, (formula, number) in enumerate(formulas):
        item = classify_assertion(poset, formula, index, number)
        (facts if isinstance(item, Fact) else rules).append(item)
    logger.debug("loaded KB with %d facts and %d rules", len(facts), len(rules))
    return KnowledgeBase(poset=poset, facts=tuple(facts), rules=tuple(rules), poset_path=poset_path)


def load_kb_file(path, poset=None):
    with open(path, 'r', encoding='utf-8') as file:
        return load_kb(file.read(), poset=poset, base_path=path)
