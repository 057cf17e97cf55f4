"""
Command-line entry point.

Exit status: 0 for success, acceptance or truth; 1 for rejection, falsity, a
countermodel or an invalid interpretation; 2 for usage and input errors.
Reports are ``key: value`` lines on stdout; logs go to stderr.
"""
import argparse
import os
import sys

from gradelogic.engine import InferenceEngine, load_kb_file
from gradelogic.formulas import parse_formula, parse_grade, print_formula
from gradelogic.grades import load_poset_file, normalize, grade_leq, enumerate_lattice
from gradelogic.kripke import load_interpretation_file, valid_in, find_countermodel, dump_interpretation
from gradelogic.proofs import load_proof_file, check_proof, dump_proof
from gradelogic.utils import (
    GradeLogicError, InterpretationError, ParseError, UndeclaredGeneratorError, UnderivableError,
    load_config, set_log_level, resolve_path, get_logger,
)
from gradelogic.version import __version__

__all__ = ['build_parser', 'run', 'main']

logger = get_logger(__name__)

ARGV = '<argv>'


class _Usage(Exception):
    """Bad command-line input that argparse cannot detect."""


def build_parser():
    """Argument parser with one subparser per command."""
    parser = argparse.ArgumentParser(prog='gradelogic', description='Lattice-graded multimodal logic toolkit')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('--config', default=None, type=str, help='yaml overriding configs/default.yaml')
    parser.add_argument('--log-level', default=None, type=str, help='DEBUG, INFO, WARNING or ERROR')
    commands = parser.add_subparsers(dest='command', required=True)

    order = commands.add_parser('order', help='decide expr1 <= expr2')
    order.add_argument('poset')
    order.add_argument('expr1')
    order.add_argument('expr2')

    norm = commands.add_parser('normalize', help='print the normal form of a grade expression')
    norm.add_argument('poset')
    norm.add_argument('expr')

    enum = commands.add_parser('enumerate', help='list the elements of the generated lattice')
    enum.add_argument('poset')
    enum.add_argument('--hasse', action='store_true', help='also print covering pairs')

    model = commands.add_parser('check-model', help='validate an interpretation, optionally evaluate a formula')
    model.add_argument('interpretation')
    model.add_argument('formula', nargs='?')

    proof = commands.add_parser('check-proof', help='check a proof file')
    proof.add_argument('proof')

    sat = commands.add_parser('saturate', help='best grade of every derivable atom')
    sat.add_argument('kb')

    ask = commands.add_parser('query', help='best grade of one atom')
    ask.add_argument('kb')
    ask.add_argument('atom')
    ask.add_argument('--trace', default=None, help='write the proof trace to this file')

    counter = commands.add_parser('countermodel', help='search for a falsifying interpretation')
    counter.add_argument('poset')
    counter.add_argument('formula')
    counter.add_argument('--worlds', type=int, default=None)
    counter.add_argument('--seed', type=int, default=None)
    counter.add_argument('--mode', choices=['exhaustive', 'randomized'], default=None)
    counter.add_argument('--output', default=None, help='write the countermodel to this file')

    comp = commands.add_parser('compare', help='compare the best grades of two atoms')
    comp.add_argument('kb')
    comp.add_argument('atom1')
    comp.add_argument('atom2')
    return parser


def _emit(out, key, value):
    out.write(f'{key}: {value}\n')


def _bool(value):
    return 'true' if value else 'false'


def _order(args, cfg, out):
    poset = load_poset_file(args.poset)
    low = normalize(poset, _parse_argument(parse_grade, args.expr1, poset))
    high = normalize(poset, _parse_argument(parse_grade, args.expr2, poset))
    result = grade_leq(poset, low, high)
    out.write(_bool(result) + '\n')
    return 0 if result else 1


def _normalize(args, cfg, out):
    poset = load_poset_file(args.poset)
    out.write(normalize(poset, _parse_argument(parse_grade, args.expr, poset)).render() + '\n')
    return 0


def _enumerate(args, cfg, out):
    poset = load_poset_file(args.poset)
    lattice = enumerate_lattice(poset, max_generators=cfg.enumerate_max_generators,
                                max_elements=cfg.enumerate_max_elements, hasse=args.hasse)
    _emit(out, 'elements', len(lattice))
    for element in lattice.elements:
        _emit(out, 'element', element.render())
    for low, high in lattice.covers:
        _emit(out, 'cover', f'{low.render()} < {high.render()}')
    return 0


def _check_model(args, cfg, out):
    try:
        interpretation, poset = load_interpretation_file(args.interpretation)
    except InterpretationError as err:
        _emit(out, 'valid', 'false')
        for problem in err.problems:
            _emit(out, 'problem', problem)
        return 1
    _emit(out, 'valid', 'true')
    if args.formula is None:
        return 0
    formula = _parse_argument(parse_formula, args.formula, poset)
    holds, world = valid_in(interpretation, formula)
    _emit(out, 'holds', _bool(holds))
    if not holds:
        _emit(out, 'failing-world', world)
    return 0 if holds else 1


def _check_proof(args, cfg, out):
    proof = load_proof_file(args.proof)
    report = check_proof(proof, max_variables=cfg.taut_max_variables)
    _emit(out, 'accepted', _bool(report.accepted))
    for diagnostic in report.diagnostics:
        _emit(out, f'line {diagnostic.number}', diagnostic.message)
    if report.accepted:
        _emit(out, 'conclusion', print_formula(report.conclusion))
    return 0 if report.accepted else 1


def _saturate(args, cfg, out):
    grades = InferenceEngine(load_kb_file(args.kb)).saturate()
    for atom, grade in grades.items():
        _emit(out, atom, grade.render())
    return 0


def _trace_poset_path(kb, kb_path, trace_path):
    if not kb.poset_path:
        return None
    poset_file = os.path.abspath(resolve_path(kb.poset_path, kb_path))
    return os.path.relpath(poset_file, os.path.dirname(os.path.abspath(trace_path)))


def _query(args, cfg, out):
    kb = load_kb_file(args.kb)
    try:
        result = InferenceEngine(kb).query(args.atom)
    except UnderivableError:
        _emit(out, args.atom, 'underivable')
        return 1
    _emit(out, result.atom, result.grade.render())
    if args.trace:
        with open(args.trace, 'w', encoding='utf-8') as file:
            file.write(dump_proof(result.trace, _trace_poset_path(kb, args.kb, args.trace)))
        _emit(out, 'trace', args.trace)
    return 0


def _countermodel(args, cfg, out):
    poset = load_poset_file(args.poset)
    formula = _parse_argument(parse_formula, args.formula, poset)
    worlds = args.worlds if args.worlds is not None else cfg.search_max_worlds
    verdict = find_countermodel(
        formula, poset, worlds,
        mode=args.mode or cfg.search_mode,
        seed=args.seed if args.seed is not None else cfg.seed,
        samples=cfg.search_samples, density=cfg.search_density,
        max_generators=cfg.search_max_generators, max_atoms=cfg.search_max_atoms,
        max_candidates=cfg.search_max_candidates)
    if not verdict.found:
        _emit(out, 'countermodel', 'none')
        _emit(out, 'bound', verdict.bound)
        return 0
    _emit(out, 'countermodel', 'found')
    _emit(out, 'world', verdict.world)
    if args.output:
        poset_path = os.path.relpath(os.path.abspath(args.poset), os.path.dirname(os.path.abspath(args.output)))
        with open(args.output, 'w', encoding='utf-8') as file:
            file.write(dump_interpretation(verdict.interpretation, poset_path))
    out.write(dump_interpretation(verdict.interpretation))
    return 1


def _compare(args, cfg, out):
    result = InferenceEngine(load_kb_file(args.kb)).compare(args.atom1, args.atom2)
    _emit(out, 'comparison', result.value)
    return 0


def _parse_argument(parse, text, poset):
    try:
        return parse(text, poset)
    except (ParseError, UndeclaredGeneratorError) as err:
        raise _Usage(f"{ARGV}: {err}") from err


_COMMANDS = {
    'order': (_order, 'poset'),
    'normalize': (_normalize, 'poset'),
    'enumerate': (_enumerate, 'poset'),
    'check-model': (_check_model, 'interpretation'),
    'check-proof': (_check_proof, 'proof'),
    'saturate': (_saturate, 'kb'),
    'query': (_query, 'kb'),
    'countermodel': (_countermodel, 'poset'),
    'compare': (_compare, 'kb'),
}


def _describe(err, path):
    line = getattr(err, 'line', None)
    message = err.message if isinstance(err, ParseError) else str(err)
    if isinstance(err, ParseError) and err.column is not None:
        message = f'column {err.column}: {message}'
    if isinstance(err, UndeclaredGeneratorError):
        message = f"undeclared generator '{err.name}'"
    return f'{path}:{line}: {message}' if line is not None else f'{path}: {message}'


def run(argv=None, out=None, err=None):
    """
    Run one command.

    Args:
        argv (list[str]): Arguments without the program name.
        out: Stream for the report, stdout by default.
        err: Stream for error messages, stderr by default.

    Returns:
        int, the exit status.
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        cfg = load_config(args.config)
        set_log_level(args.log_level or cfg.log_level)
    except (GradeLogicError, OSError) as exc:
        err.write(f'error: {exc}\n')
        return 2
    handler, source = _COMMANDS[args.command]
    path = getattr(args, source)
    try:
        return handler(args, cfg, out)
    except _Usage as exc:
        err.write(f'error: {exc}\n')
    except GradeLogicError as exc:
        err.write(f'error: {_describe(exc, path)}\n')
    except OSError as exc:
        err.write(f'error: {exc.filename or path}: {exc.strerror or exc}\n')
    return 2


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
