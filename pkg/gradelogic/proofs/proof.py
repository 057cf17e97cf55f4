"""Proof objects and the proof file format."""
from dataclasses import dataclass
from enum import Enum

from gradelogic.formulas import parse_formula, print_formula
from gradelogic.grades import load_poset_file
from gradelogic.utils import ParseError, UndeclaredGeneratorError, iter_lines, split_header, resolve_path

__all__ = ['Rule', 'ARITY', 'DERIVED_RULES', 'Justification', 'ProofLine', 'Proof',
           'parse_justification', 'load_proof', 'load_proof_file', 'dump_proof']


class Rule(str, Enum):
    """Justification kinds; the value is the file token."""
    TAUT = 'taut'
    K = 'K'
    DTOP = 'Dtop'
    A1 = 'A1'
    A2 = 'A2'
    A3 = 'A3'
    A4 = 'A4'
    A5 = 'A5'
    MP = 'mp'
    NEC = 'nec'
    GLB = 'glb'
    GEN = 'gen'
    AG = 'ag'
    GMP = 'gmp'
    WEAK = 'weak'


ARITY = {Rule.MP: 2, Rule.NEC: 1, Rule.GLB: 2, Rule.GEN: 1, Rule.GMP: 2, Rule.WEAK: 1}
DERIVED_RULES = frozenset({Rule.AG, Rule.GMP, Rule.WEAK})


@dataclass(frozen=True)
class Justification:
    rule: Rule
    refs: tuple = ()

    @property
    def derived(self):
        return self.rule in DERIVED_RULES

    def __str__(self):
        return ' '.join([self.rule.value] + [str(ref) for ref in self.refs])


@dataclass(frozen=True)
class ProofLine:
    number: int
    formula: object
    justification: Justification


@dataclass(frozen=True)
class Proof:
    """
    A numbered derivation over a generator poset.

    Args:
        poset (GeneratorPoset): The grades box parameters range over.
        lines (tuple[ProofLine]): Lines with strictly increasing numbers.
        poset_path (str): Where the poset came from, kept for dumping.
    """
    poset: object
    lines: tuple
    poset_path: str = None

    @property
    def conclusion(self):
        return self.lines[-1].formula if self.lines else None

    def __len__(self):
        return len(self.lines)


def parse_justification(text, number=None):
    """Parse ``mp 1 2``-style justification text."""
    tokens = text.split()
    if not tokens:
        raise ParseError("missing justification", number)
    try:
        rule = Rule(tokens[0])
    except ValueError as err:
        raise ParseError(f"unknown justification '{tokens[0]}'", number) from err
    arity = ARITY.get(rule, 0)
    if len(tokens) - 1 != arity:
        raise ParseError(f"'{rule.value}' cites {arity} line(s), got {len(tokens) - 1}", number)
    try:
        refs = tuple(int(token) for token in tokens[1:])
    except ValueError as err:
        raise ParseError(f"line references must be integers in '{text}'", number) from err
    return Justification(rule, refs)


def load_proof(text, poset=None, base_path=None):
    """
    Parse the proof file format.

    A ``poset: <path>`` line (resolved against ``base_path``) must precede
    the proof lines unless ``poset`` is passed in. Each proof line reads
    ``<n>: <formula> ; <justification>``.

    Returns:
        Proof.

    Raises:
        ParseError: Malformed line, with its line number.
        UndeclaredGeneratorError: A formula names an unknown generator.
    """
    poset_path = None
    lines = []
    for number, content in iter_lines(text):
        key, value = split_header(content, number)
        if key == 'poset':
            poset_path = value
            if poset is None:
                poset = load_poset_file(resolve_path(value, base_path))
            continue
        if not key.isdigit():
            raise ParseError(f"expected a line number or 'poset:', got '{key}'", number)
        if poset is None:
            raise ParseError("'poset:' must come before the first proof line", number)
        index = int(key)
        if lines and index <= lines[-1].number:
            raise ParseError(f"line numbers must increase, {index} follows {lines[-1].number}", number)
        if ';' not in value:
            raise ParseError("expected '<formula> ; <justification>'", number)
        formula_text, justification_text = value.rsplit(';', 1)
        try:
            formula = parse_formula(formula_text, poset)
        except ParseError as err:
            raise err.at_line(number) from err
        except UndeclaredGeneratorError as err:
            raise UndeclaredGeneratorError(err.name, number) from err
        lines.append(ProofLine(index, formula, parse_justification(justification_text, number)))
    if poset is None:
        raise ParseError("missing 'poset:' line")
    return Proof(poset=poset, lines=tuple(lines), poset_path=poset_path)


def load_proof_file(path, poset=None):
    with open(path, 'r', encoding='utf-8') as file:
        return load_proof(file.read(), poset=poset, base_path=path)


def dump_proof(proof, poset_path=None):
    """Render a proof in the file format."""
    poset_path = poset_path or proof.poset_path
    out = [f'poset: {poset_path}'] if poset_path else []
    out += [f'{line.number}: {print_formula(line.formula)} ; {line.justification}' for line in proof.lines]
    return '\n'.join(out) + '\n'
