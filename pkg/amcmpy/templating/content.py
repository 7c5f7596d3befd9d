if __loader__.name == '__main__':
    import sys
    sys.path.append(sys.path[0] + '/../..')

import re
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType

import structlog

from amcmpy.constants.project import (
    TEXT, INT, BOOL, MARKUP, RECORD,
    CONTENT_EXT, CONTEXT_AXES, DEFAULT_GUARD, PAYLOAD_SEPARATOR
)
from amcmpy.core.exceptions import (
    ContentError,
    ContentParseError,
    DuplicatePath,
    ParseError,
)
from amcmpy.core.values import (
    Text, Int, Bool, Markup, ListValue, RecordValue,
    is_type_tag, list_element_tag
)
from amcmpy.lang.parser import parse_literal
from amcmpy.lang.tokens import Position
from amcmpy.utils.utils_parser import parse_key_values
from amcmpy.utils.utils_validators import is_path_segment

logger = structlog.get_logger(__name__)

HEADER_PATTERN = re.compile(r'^type:\s*(\S+)\s*$')
VARIANT_PATTERN = re.compile(r'^variant\s+(.+?)\s*:\s*$')
CONDITION_PATTERN = re.compile(r'^(p|[sve]\.[A-Za-z0-9_.-]+)\s*=\s*(\S+)$')


@dataclass(frozen=True, slots=True)
class Condition:
    """One atomic guard condition: ``p=<status>`` or ``<axis>.<key>=<value>``."""
    axis: str
    key: str | None
    value: str

    def holds(self, ctx) -> bool:
        return ctx.get(self.axis, self.key) == self.value

    def __str__(self) -> str:
        name = self.axis if self.key is None else f"{self.axis}.{self.key}"
        return f"{name}={self.value}"


@dataclass(frozen=True, slots=True)
class Guard:
    """A conjunction of conditions, or the ``default`` guard."""
    conditions: tuple = ()
    default: bool = False

    @property
    def score(self) -> int:
        return len(self.conditions)

    def satisfied_by(self, ctx) -> bool:
        return all(condition.holds(ctx) for condition in self.conditions)

    def __str__(self) -> str:
        return DEFAULT_GUARD if self.default else ' & '.join(map(str, self.conditions))


DEFAULT = Guard(default=True)


@dataclass(frozen=True, slots=True)
class ContentObject:
    path: str
    type: str
    variants: tuple

    def __post_init__(self):
        defaults = [i for i, (guard, _) in enumerate(self.variants) if guard.default]
        if len(defaults) > 1 or (defaults and defaults[0] != len(self.variants) - 1):
            raise ValueError(f"'{self.path}': the default variant must be unique and last")
        for _, payload in self.variants:
            if payload.tag != self.type:
                raise ValueError(f"'{self.path}': payload {payload.tag} is not {self.type}")


class ContentStore:
    """Read-only map from normalized content path to ContentObject."""

    def __init__(self, objects=()) -> None:
        table = {}
        for obj in objects:
            if obj.path in table:
                raise DuplicatePath(obj.path, [])
            table[obj.path] = obj
        self._objects = MappingProxyType(dict(sorted(table.items())))

    def get(self, path: str) -> ContentObject | None:
        return self._objects.get(path)

    def paths(self) -> list:
        return list(self._objects)

    def objects(self) -> list:
        return list(self._objects.values())

    def __len__(self) -> int:
        return len(self._objects)

    def __iter__(self):
        return iter(self._objects.values())

    def __contains__(self, path: str) -> bool:
        return path in self._objects


def parse_guard(text: str, position: Position = None, file: str = None) -> Guard:
    """``default`` or ``cond (& cond)*``; keys must be distinct."""
    text = text.strip()
    if text == DEFAULT_GUARD:
        return DEFAULT
    conditions = []
    seen = set()
    for part in text.split('&'):
        match = CONDITION_PATTERN.match(part.strip())
        if not match:
            raise ContentParseError(f"malformed guard condition {part.strip()!r}", position,
                                    {'p=<status>', '<axis>.<key>=<value>'}, file=file)
        name, value = match.groups()
        axis, _, key = name.partition('.')
        if axis not in CONTEXT_AXES:
            raise ContentParseError(f"unknown guard axis '{axis}'", position, set(CONTEXT_AXES), file=file)
        if name in seen:
            raise ContentParseError(f"guard repeats key '{name}'", position, {'distinct keys'}, file=file)
        seen.add(name)
        conditions.append(Condition(axis, key or None, value))
    return Guard(tuple(conditions))

def parse_payload(tag: str, text: str, position: Position = None, file: str = None):
    """Parse raw payload text per type tag."""
    try:
        if tag == TEXT:
            return Text(text)
        if tag == MARKUP:
            return Markup(text)
        if tag == INT:
            return Int(int(text.strip()))
        if tag == BOOL:
            if text.strip() not in ('true', 'false'):
                raise ValueError(f"expected true or false, found {text.strip()!r}")
            return Bool(text.strip() == 'true')
        if tag == RECORD:
            fields = [(entry.key, parse_literal(entry.value, file)) for entry in parse_key_values(text, file)]
            return RecordValue(tuple(fields))
        element = list_element_tag(tag)
        items = [parse_payload(element, line.strip(), position, file) for line in text.splitlines() if line.strip()]
        return ListValue(element, tuple(items))
    except ParseError:
        raise
    except (ValueError, TypeError) as e:
        raise ContentParseError(f"bad {tag} payload: {e}", position, {tag}, file=file) from e

def parse_content(text: str, path: str, file: str = None) -> ContentObject:
    """
    Parse one content file.

    Layout: a ``type: <Tag>`` header, then either ``---`` followed by a
    single default payload, or one or more ``variant <guard>:`` sections,
    each payload running to a ``---`` line or the end of the file.
    """
    lines = text.splitlines()
    index = _skip_blank(lines, 0)
    header = HEADER_PATTERN.match(lines[index]) if index < len(lines) else None
    if header is None:
        raise ContentParseError("expected 'type: <Tag>' header", Position(index + 1, 1), {'type:'}, file=file)
    tag = header.group(1)
    if not is_type_tag(tag):
        raise ContentParseError(f"unknown type '{tag}'", Position(index + 1, 1), {'type'}, file=file)

    variants = []
    index = _skip_blank(lines, index + 1)
    if index < len(lines) and lines[index].strip() == PAYLOAD_SEPARATOR:
        payload = '\n'.join(lines[index + 1:])
        variants.append((DEFAULT, parse_payload(tag, payload, Position(index + 2, 1), file)))
        index = len(lines)

    while index < len(lines):
        match = VARIANT_PATTERN.match(lines[index])
        position = Position(index + 1, 1)
        if match is None:
            raise ContentParseError("expected 'variant <guard>:' or '---'", position,
                                    {'variant', PAYLOAD_SEPARATOR}, file=file)
        guard = parse_guard(match.group(1), position, file)
        end = index + 1
        while end < len(lines) and lines[end].strip() != PAYLOAD_SEPARATOR:
            end += 1
        payload = '\n'.join(lines[index + 1:end])
        variants.append((guard, parse_payload(tag, payload, Position(index + 2, 1), file)))
        index = _skip_blank(lines, end + 1)

    if not variants:
        raise ContentParseError("content file has no payload", Position(len(lines) or 1, 1),
                                {'variant', PAYLOAD_SEPARATOR}, file=file)
    try:
        return ContentObject(path, tag, tuple(variants))
    except ValueError as e:
        raise ContentParseError(str(e), Position(1, 1), {'variant'}, file=file) from e

def _skip_blank(lines: list, index: int) -> int:
    while index < len(lines) and not lines[index].strip():
        index += 1
    return index

def content_path(root: Path, file: Path) -> str:
    """Relative path without extension, ``/``-separated; segments must be slugs."""
    relative = file.relative_to(root).with_suffix('')
    segments = relative.parts
    if not segments or not all(is_path_segment(segment) for segment in segments):
        raise ContentParseError(f"'{relative.as_posix()}' is not a normalized content path",
                                Position(1, 1), {'path'}, file=str(file))
    return '/'.join(segments)

def load_store(root) -> ContentStore:
    """One ContentObject per ``.amc`` file below root."""
    root = Path(root)
    if not root.is_dir():
        raise ContentError(f"content root '{root}' is not a directory")

    found = {}
    objects = []
    for file in sorted(root.rglob('*')):
        if not file.is_file() or file.suffix.lower() != CONTENT_EXT:
            continue
        path = content_path(root, file)
        if path in found:
            raise DuplicatePath(path, [found[path], file])
        found[path] = file
        objects.append(parse_content(file.read_text(encoding='utf-8'), path, file=str(file)))

    logger.debug("store_loaded", root=str(root), objects=len(objects))
    return ContentStore(objects)


if __name__ == '__main__':
    store = load_store(sys.argv[1] if len(sys.argv) > 1 else '.')
    for obj in store:
        print(obj.path, obj.type, [str(guard) for guard, _ in obj.variants])
