"""Random accepted proofs, used to sample the soundness of the checker."""
from gradelogic.formulas import Atom, Not, And, Or, Implies, Box, FALSE, P0, formula_key
from gradelogic.grades import Leaf, Meet, Join, normalize
from .builder import ProofBuilder
from .order import emit_order
from .proof import Rule

__all__ = ['random_grade', 'random_body', 'random_proof']


def _pick(rng, items):
    return items[int(rng.integers(len(items)))]


def random_grade(poset, rng, depth=2):
    """Random grade expression of at most ``depth`` operator levels."""
    if depth == 0 or rng.random() < 0.4:
        return Leaf(_pick(rng, poset.generators))
    kind = Meet if rng.random() < 0.5 else Join
    return kind(random_grade(poset, rng, depth - 1), random_grade(poset, rng, depth - 1))


def random_body(poset, rng, atoms, depth=2):
    """Random formula over ``atoms``; boxes may occur."""
    if depth == 0 or rng.random() < 0.3:
        return Atom(_pick(rng, atoms))
    choice = rng.random()
    if choice < 0.2:
        return Not(random_body(poset, rng, atoms, depth - 1))
    if choice < 0.45:
        return Box(random_grade(poset, rng, 1), random_body(poset, rng, atoms, depth - 1))
    kind = _pick(rng, [And, Or, Implies])
    return kind(random_body(poset, rng, atoms, depth - 1), random_body(poset, rng, atoms, depth - 1))


def _axiom(builder, rng, atoms):
    poset = builder.poset
    kind = _pick(rng, ['taut', 'K', 'Dtop', 'A1', 'A2', 'A3', 'A4', 'A5'])
    if kind == 'taut':
        first, second = random_body(poset, rng, atoms), random_body(poset, rng, atoms)
        return builder.add(Implies(first, Implies(second, first)), Rule.TAUT)
    if kind == 'K':
        a = random_grade(poset, rng)
        first, second = random_body(poset, rng, atoms), random_body(poset, rng, atoms)
        return builder.add(Implies(Box(a, Implies(first, second)), Implies(Box(a, first), Box(a, second))), Rule.K)
    if kind == 'Dtop':
        return builder.add(Not(Box(Leaf(poset.top), FALSE)), Rule.DTOP)
    a, b, c = (random_grade(poset, rng) for _ in range(3))
    if kind == 'A1':
        shared = random_body(poset, rng, atoms)
        return builder.add(Implies(And(Box(a, shared), Box(b, shared)), Box(Join(a, b), shared)), Rule.A1)
    if kind == 'A2':
        return builder.add(Implies(Or(Box(a, P0), Box(b, P0)), Box(Meet(a, b), P0)), Rule.A2)
    if kind == 'A3':
        return builder.add(Implies(Box(Join(a, b), P0), And(Box(a, P0), Box(b, P0))), Rule.A3)
    if kind == 'A4':
        return builder.add(Implies(Box(Join(Meet(a, b), Meet(a, c)), P0), Box(Meet(a, Join(b, c)), P0)), Rule.A4)
    pairs = sorted(poset.closure)
    if not pairs:
        return builder.add(Implies(P0, P0), Rule.TAUT)
    low, high = _pick(rng, pairs)
    return builder.add(Implies(Box(Leaf(high), P0), Box(Leaf(low), P0)), Rule.A5)


def _modus_ponens(builder):
    keys = {formula_key(builder.poset, line.formula): line.number for line in builder.lines}
    for line in reversed(builder.lines):
        if isinstance(line.formula, Implies):
            premise = keys.get(formula_key(builder.poset, line.formula.left))
            if premise is not None:
                return builder.mp(premise, line.number)
    return None


def random_proof(poset, rng, atoms=('p', 'q'), steps=6):
    """
    Build a random proof that the checker accepts.

    Steps mix axiom instances, necessitation, order proofs lifted by gen,
    K with modus ponens, weakening and plain modus ponens.

    Args:
        poset (GeneratorPoset): The grades.
        rng (numpy.random.Generator): Source of randomness.
        atoms (Sequence[str]): Atoms of random bodies.
        steps (int): Number of construction steps.

    Returns:
        Proof.
    """
    builder = ProofBuilder(poset)
    atoms = list(atoms)
    for _ in range(steps):
        action = rng.random()
        if action < 0.35 or not builder.lines:
            _axiom(builder, rng, atoms)
        elif action < 0.5:
            source = _pick(rng, builder.lines).number
            builder.add(Box(Leaf(poset.top), builder.formula(source)), Rule.NEC, (source,))
        elif action < 0.65:
            high = random_grade(poset, rng)
            low = Meet(high, random_grade(poset, rng))
            order = emit_order(builder, normalize(poset, low), normalize(poset, high))
            body = random_body(poset, rng, atoms)
            builder.add(Implies(Box(high, body), Box(low, body)), Rule.GEN, (order,))
        elif action < 0.8:
            boxed = [line for line in builder.lines if isinstance(line.formula, Box)
                     and isinstance(line.formula.body, Implies)]
            if boxed:
                target = _pick(rng, boxed)
                grade, rule = target.formula.grade, target.formula.body
                axiom = builder.add(Implies(Box(grade, rule), Implies(Box(grade, rule.left), Box(grade, rule.right))),
                                    Rule.K)
                builder.mp(target.number, axiom)
        elif action < 0.9:
            boxes = [line for line in builder.lines if isinstance(line.formula, Box)]
            if boxes:
                source = _pick(rng, boxes)
                low = Meet(source.formula.grade, random_grade(poset, rng, 1))
                builder.add(Box(low, source.formula.body), Rule.WEAK, (source.number,))
        else:
            _modus_ponens(builder)
    return builder.proof()
