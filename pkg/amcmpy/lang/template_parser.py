"""Readers for template files (``.amt``) and context files (``.ctx``)."""

from amcmpy.constants.project import LIST, CONTEXT_AXES
from amcmpy.core.exceptions import ParseError, UndeclaredHole
from amcmpy.core.values import Markup, is_type_tag, list_tag
from amcmpy.lang.lexer import tokenize
from amcmpy.lang.parser import TokenStream
from amcmpy.templating.context import PersonalizationContext
from amcmpy.templating.template import Template, hole_names, malformed_holes
from amcmpy.utils.utils_parser import parse_key_values


def parse_type(stream: TokenStream) -> str:
    """``Text`` | ``Int`` | ``Bool`` | ``Markup`` | ``Record`` | ``List<T>``."""
    token = stream.identifier()
    tag = token.text
    if tag == LIST:
        stream.punct('<')
        tag = list_tag(stream.identifier().text)
        stream.punct('>')
    if not is_type_tag(tag):
        raise ParseError(f"unknown type '{tag}'", token.position, {'type'}, file=stream.file)
    return tag

def parse_template(source: str, file: str = None) -> Template:
    """
    Parse ``template "<name>" { slot <n> : <Type>; ... skeleton <<< ... >>> }``.

    A single newline directly after ``<<<`` is not part of the skeleton.
    """
    stream = TokenStream(tokenize(source, file), source, file)
    stream.word('template')
    name = stream.string().value.value
    stream.punct('{')
    slots = {}
    while stream.check_word('slot'):
        stream.advance()
        slot = stream.identifier()
        if slot.text in slots:
            raise ParseError(f"duplicate slot '{slot.text}'", slot.position, {'identifier'}, file=file)
        stream.punct(':')
        slots[slot.text] = parse_type(stream)
        stream.punct(';')
    stream.word('skeleton')
    token = stream.peek()
    if token is None or not isinstance(token.value, Markup):
        raise stream.fail({"'slot'", 'markup'})
    stream.advance()
    stream.punct('}')
    stream.done()

    skeleton = token.value.value
    if skeleton.startswith('\n'):
        skeleton = skeleton[1:]
    malformed = malformed_holes(skeleton)
    if malformed:
        raise ParseError(f"malformed hole '{malformed[0]}'", token.position, {'{{identifier}}'}, file=file)
    for hole in hole_names(skeleton):
        if hole not in slots:
            raise UndeclaredHole(hole, token.position, file=file)
    return Template(name, tuple(slots.items()), skeleton)

def parse_context(source: str, file: str = None) -> PersonalizationContext:
    """
    Parse a context file: ``p = <status>`` and ``s.<k>``/``v.<k>``/``e.<k>``
    entries. ``p`` takes a single value; the other axes are maps.
    """
    status = None
    axes = {'s': {}, 'v': {}, 'e': {}}
    for entry in parse_key_values(source, file):
        if entry.key == 'p':
            if not entry.value:
                raise ParseError("empty registration status", entry.position, {'status'}, file=file)
            status = entry.value
            continue
        axis, dot, key = entry.key.partition('.')
        if axis not in CONTEXT_AXES or axis == 'p' or not dot:
            raise ParseError(f"unknown context key '{entry.key}'", entry.position,
                             {'p', 's.<key>', 'v.<key>', 'e.<key>'}, file=file)
        if not key:
            raise ParseError(f"empty key in '{entry.key}'", entry.position, {'key'}, file=file)
        axes[axis][key] = entry.value
    if status is None:
        return PersonalizationContext.build(s=axes['s'], v=axes['v'], e=axes['e'])
    return PersonalizationContext.build(status, axes['s'], axes['v'], axes['e'])
