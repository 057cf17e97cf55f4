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

"""Exceptions raised by gradelogic."""

__all__ = [
    'GradeLogicError', 'ConfigError', 'ParseError', 'PosetError', 'CycleError',
    'MissingTopError', 'UndeclaredGeneratorError', 'InterpretationError',
    'MonotonicityError', 'SerialityError', 'UndeclaredWorldError',
    'GuardExceededError', 'OrderError', 'ProofError', 'FragmentError',
    'ReservedAtomError', 'UnderivableError',
]


class GradeLogicError(ValueError):
    """Base class of every error raised by the library."""


class ConfigError(GradeLogicError):
    """Unknown or malformed configuration entry."""


class ParseError(GradeLogicError):
    """
    Text that does not follow one of the input grammars.

    Args:
        message (str): What went wrong.
        line (int): 1-based line number, or None when unknown.
        column (int): 1-based column, or None when unknown.
    """
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ''
        if line is not None:
            where = f'line {line}'
            if column is not None:
                where += f', column {column}'
            where += ': '
        super().__init__(where + message)

    def at_line(self, line):
        """Return a copy located at ``line`` of an enclosing file."""
        return ParseError(self.message, line, self.column)


class PosetError(GradeLogicError):
    """Invalid generator poset."""


class CycleError(PosetError):
    """The declared order contains a cycle among distinct generators."""
    def __init__(self, generators):
        self.generators = tuple(generators)
        super().__init__(f"order contains a cycle through: {' < '.join(self.generators)}")


class MissingTopError(PosetError):
    """The poset file declares no top generator."""


class UndeclaredGeneratorError(GradeLogicError):
    """A grade names a generator the poset does not declare."""
    def __init__(self, name, line=None):
        self.name = name
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}undeclared generator '{name}'")


class InterpretationError(GradeLogicError):
    """
    An interpretation violates one of its constraints.

    Args:
        problems (list[str]): Every violation found, in check order.
    """
    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__('; '.join(self.problems))


class MonotonicityError(InterpretationError):
    """R_a is not included in R_b although a <= b."""


class SerialityError(InterpretationError):
    """Some world has no successor under the top relation."""


class UndeclaredWorldError(InterpretationError):
    """A relation or the valuation mentions an undeclared world."""


class GuardExceededError(GradeLogicError):
    """An exhaustive procedure was asked for more than its size guard allows."""


class OrderError(GradeLogicError):
    """An order proof was requested for grades that are not ordered."""


class ProofError(GradeLogicError):
    """Malformed proof text or a derived line whose shape cannot be expanded."""


class FragmentError(GradeLogicError):
    """A knowledge-base assertion falls outside the graded Horn fragment."""


class ReservedAtomError(GradeLogicError):
    """The reserved atom p0 is used to express knowledge."""


class UnderivableError(GradeLogicError):
    """No grade can be derived for the requested atom."""
    def __init__(self, atom):
        self.atom = atom
        super().__init__(f"atom '{atom}' is not derivable")
