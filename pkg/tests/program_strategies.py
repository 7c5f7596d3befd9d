"""Program generators shared by the language and machine tests."""

import random
from itertools import product

from hypothesis import strategies as st

from amcmpy.constants.project import INT_MIN, INT_MAX, TEXT
from amcmpy.core.values import Text, Int, Bool, Markup
from amcmpy.lang import ast
from amcmpy.templating.content import ContentObject, ContentStore, DEFAULT
from amcmpy.utils.utils_validators import is_identifier

# -- HYPOTHESIS --

identifiers = st.from_regex(r'[a-z_][a-z0-9_]{0,5}', fullmatch=True).filter(is_identifier)

texts = st.text(st.characters(blacklist_categories=('Cs',)), max_size=12)
markups = texts.filter(lambda s: '>>>' not in s)

literals = st.one_of(
    texts.map(Text),
    st.integers(INT_MIN, INT_MAX).map(Int),
    st.booleans().map(Bool),
    markups.map(Markup),
)

atoms = st.one_of(
    literals.map(ast.Lit),
    identifiers.map(ast.Ident),
    st.just(ast.Read()),
    st.from_regex(r'[a-z]{1,4}(/[a-z]{1,4}){0,2}', fullmatch=True).map(ast.ContentRef),
)

expressions = st.one_of(
    atoms,
    st.builds(ast.Eq, atoms, atoms),
    st.builds(ast.Neq, atoms, atoms),
)

def _blocks(children):
    return st.lists(children, min_size=1, max_size=3).map(ast.sequence)

simple_commands = st.one_of(
    st.builds(ast.Assign, identifiers, expressions),
    st.builds(ast.Emit, expressions),
)

commands = st.recursive(
    simple_commands,
    lambda children: st.one_of(
        st.builds(ast.If, expressions, _blocks(children), st.none()),
        st.builds(ast.If, expressions, _blocks(children), _blocks(children)),
    ),
    max_leaves=8,
)

programs = st.lists(commands, max_size=5).map(ast.sequence)

# -- FUZZ GRAMMAR --

FUZZ_NAMES = ('a', 'b')
FUZZ_SLOTS = {'a': TEXT}
FUZZ_INPUT = (Text('x'), Int(1))


def fuzz_store() -> ContentStore:
    return ContentStore([ContentObject('k', TEXT, ((DEFAULT, Text('x')),))])

FUZZ_EXPRESSIONS = (
    ast.Lit(Text('x')),
    ast.Lit(Int(1)),
    ast.Lit(Bool(True)),
    ast.Ident('a'),
    ast.Ident('b'),
    ast.Read(),
    ast.ContentRef('k'),
    ast.ContentRef('missing'),
    ast.Eq(ast.Ident('a'), ast.Lit(Text('x'))),
    ast.Neq(ast.Read(), ast.Lit(Int(1))),
)

FUZZ_COMMANDS = (
    [ast.Assign(name, expr) for name in FUZZ_NAMES for expr in FUZZ_EXPRESSIONS]
    + [ast.Emit(expr) for expr in FUZZ_EXPRESSIONS]
    + [
        ast.If(ast.Lit(Bool(True)), ast.Assign('b', ast.Read()), None),
        ast.If(ast.Eq(ast.Ident('b'), ast.Lit(Int(1))), ast.Emit(ast.Ident('b')), ast.Assign('a', ast.Lit(Text('y')))),
        ast.If(ast.Ident('a'), ast.Emit(ast.Lit(Int(1))), None),
        ast.If(ast.Read(), ast.Skip(), ast.Emit(ast.Read())),
    ]
)


def enumerate_programs(max_commands: int = 3):
    """Every sequence of up to max_commands fuzz commands, the empty program included."""
    for size in range(max_commands + 1):
        for commands in product(FUZZ_COMMANDS, repeat=size):
            yield ast.sequence(commands)


def random_program(rng: random.Random, max_commands: int = 6, depth: int = 2):
    size = rng.randint(0, max_commands)
    return ast.sequence(_random_command(rng, depth) for _ in range(size))

def _random_command(rng: random.Random, depth: int):
    choice = rng.random()
    if depth > 0 and choice < 0.2:
        then = random_program(rng, 2, depth - 1)
        orelse = random_program(rng, 2, depth - 1) if rng.random() < 0.5 else None
        return ast.If(rng.choice(FUZZ_EXPRESSIONS), then, orelse)
    if choice < 0.6:
        return ast.Assign(rng.choice(FUZZ_NAMES), rng.choice(FUZZ_EXPRESSIONS))
    return ast.Emit(rng.choice(FUZZ_EXPRESSIONS))
