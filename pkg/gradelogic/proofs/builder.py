"""Line-emitting helper shared by order proofs, macro expansion and engine traces."""
from gradelogic.formulas import Implies, implies_chain, same_formula, print_formula
from gradelogic.utils import ProofError
from .proof import Rule, Justification, ProofLine, Proof

__all__ = ['ProofBuilder']


class ProofBuilder:
    """
    Append-only list of proof lines.

    Args:
        poset (GeneratorPoset): Grades of every emitted formula.
        start (int): Number of the first emitted line.
        cited (dict): Formulas of lines outside the builder that emitted lines
            may cite, keyed by line number.
    """
    def __init__(self, poset, start=1, cited=None):
        self.poset = poset
        self.lines = []
        self._next = start
        self._formulas = dict(cited or {})

    def formula(self, number):
        try:
            return self._formulas[number]
        except KeyError as err:
            raise ProofError(f"line {number} is not available") from err

    @property
    def last(self):
        return self.lines[-1].number if self.lines else None

    def add(self, formula, rule, refs=()):
        """Append a line and return its number."""
        number = self._next
        self._next += 1
        self.lines.append(ProofLine(number, formula, Justification(Rule(rule), tuple(refs))))
        self._formulas[number] = formula
        return number

    def mp(self, premise, implication, formula=None):
        """Modus ponens; ``formula`` overrides the written conclusion with an equivalent one."""
        rule = self.formula(implication)
        if not isinstance(rule, Implies) or not same_formula(self.poset, rule.left, self.formula(premise)):
            raise ProofError(f"line {implication} is not an implication from line {premise}")
        conclusion = rule.right if formula is None else formula
        if not same_formula(self.poset, rule.right, conclusion):
            raise ProofError(f"'{print_formula(conclusion)}' does not follow from line {implication}")
        return self.add(conclusion, Rule.MP, (premise, implication))

    def glue(self, premises, conclusion):
        """
        Derive ``conclusion`` from the given lines by one tautology and modus ponens.

        The caller guarantees that ``p1 -> (p2 -> ... -> conclusion)`` is a
        tautology over box-atoms.
        """
        premises = list(premises)
        current = self.add(implies_chain([self.formula(n) for n in premises], conclusion), Rule.TAUT)
        for number in premises:
            current = self.mp(number, current)
        return current

    def chain(self, first, second):
        """From lines ``X -> Y`` and ``Y -> Z`` derive ``X -> Z``; None stands for identity."""
        if first is None:
            return second
        if second is None:
            return first
        conclusion = Implies(self.formula(first).left, self.formula(second).right)
        return self.glue([first, second], conclusion)

    def proof(self, poset_path=None):
        return Proof(poset=self.poset, lines=tuple(self.lines), poset_path=poset_path)
