"""Emit a binding program that reproduces a content store snapshot in machine memory."""

import re

import structlog

from amcmpy.constants.project import KEYWORDS, BOOL_LITERALS, MARKUP_CLOSE
from amcmpy.core.exceptions import IdentifierCollision, IllegalIdentifier
from amcmpy.core.values import Text, Int, Bool, Markup
from amcmpy.lang import ast
from amcmpy.lang.printer import pretty_print
from amcmpy.templating.context import ANONYMOUS
from amcmpy.templating.resolve import resolve_variant
from amcmpy.utils.utils_validators import is_identifier

logger = structlog.get_logger(__name__)

ILLEGAL = re.compile(r'[^A-Za-z0-9_]')
RESERVED = KEYWORDS | frozenset(BOOL_LITERALS) | {'bind'}


def mangle_path(path: str) -> str:
    """``/`` becomes ``_``; other characters outside [A-Za-z0-9_] are dropped."""
    name = ILLEGAL.sub('', path.replace('/', '_'))
    if not is_identifier(name) or name in RESERVED:
        raise IllegalIdentifier(path)
    return name

def mangle_store(store) -> dict:
    """Identifier -> path for every object, raising on the first collision."""
    claims = {}
    for path in store.paths():
        claims.setdefault(mangle_path(path), []).append(path)
    for name, paths in claims.items():
        if len(paths) > 1:
            raise IdentifierCollision(name, paths)
    return {name: paths[0] for name, paths in claims.items()}

def has_literal_form(value) -> bool:
    if isinstance(value, Markup):
        return MARKUP_CLOSE not in value.value
    return isinstance(value, (Text, Int, Bool))

def emit_load_program(store, ctx=ANONYMOUS):
    """
    One assignment per content object, in path order. Values with a literal
    form are written inline; the rest are loaded with ``content(...)``.
    """
    commands = []
    for name, path in mangle_store(store).items():
        value = resolve_variant(store.get(path), ctx)
        expr = ast.Lit(value) if has_literal_form(value) else ast.ContentRef(path)
        commands.append(ast.Assign(name, expr))
    logger.debug("load_program_emitted", assignments=len(commands), context=ctx.fingerprint())
    return ast.sequence(commands)

def emit_load_source(store, ctx=ANONYMOUS) -> str:
    return pretty_print(emit_load_program(store, ctx))
