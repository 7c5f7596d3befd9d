"""The value domain: a disjoint sum of content types.

Every value carries exactly one type tag. Tags are plain strings:
``Text``, ``Int``, ``Bool``, ``Markup``, ``Record`` and ``List<T>`` for a
scalar element tag ``T``.
"""

import re
from dataclasses import dataclass
from typing import ClassVar, Union

from amcmpy.constants.project import (
    TEXT, INT, BOOL, MARKUP, LIST, RECORD,
    SCALAR_TAGS, INT_MIN, INT_MAX
)

LIST_TAG_PATTERN = re.compile(r'^List<(\w+)>$')


@dataclass(frozen=True, slots=True)
class Text:
    value: str
    tag: ClassVar[str] = TEXT

@dataclass(frozen=True, slots=True)
class Int:
    value: int
    tag: ClassVar[str] = INT

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(self.value, int):
            raise TypeError(f"Int expects an integer, not {type(self.value).__name__}")
        if not INT_MIN <= self.value <= INT_MAX:
            raise ValueError(f"{self.value} does not fit in 64 bits")

@dataclass(frozen=True, slots=True)
class Bool:
    value: bool
    tag: ClassVar[str] = BOOL

@dataclass(frozen=True, slots=True)
class Markup:
    value: str
    tag: ClassVar[str] = MARKUP

@dataclass(frozen=True, slots=True)
class ListValue:
    element_tag: str
    items: tuple = ()

    def __post_init__(self):
        if self.element_tag not in SCALAR_TAGS:
            raise ValueError(f"list elements must be scalar, not {self.element_tag}")
        for item in self.items:
            if item.tag != self.element_tag:
                raise ValueError(f"list of {self.element_tag} cannot hold {item.tag}")

    @property
    def tag(self) -> str:
        return list_tag(self.element_tag)

@dataclass(frozen=True, slots=True, eq=False)
class RecordValue:
    fields: tuple = ()
    tag: ClassVar[str] = RECORD

    def __post_init__(self):
        names = [name for name, _ in self.fields]
        if len(names) != len(set(names)):
            raise ValueError(f"record field names must be distinct: {names}")

    def as_dict(self) -> dict:
        return dict(self.fields)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RecordValue):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __hash__(self) -> int:
        return hash(frozenset(self.fields))


Literal = Union[Text, Int, Bool, Markup]
Value = Union[Text, Int, Bool, Markup, ListValue, RecordValue]

SCALAR_CLASSES = {TEXT: Text, INT: Int, BOOL: Bool, MARKUP: Markup}


def list_tag(element_tag: str) -> str:
    return f"{LIST}<{element_tag}>"

def list_element_tag(tag: str) -> str | None:
    """Return ``T`` for ``List<T>``, else None."""
    match = LIST_TAG_PATTERN.match(tag)
    return match.group(1) if match else None

def is_type_tag(tag: str) -> bool:
    if tag in SCALAR_TAGS or tag == RECORD:
        return True
    return list_element_tag(tag) in SCALAR_TAGS

def text_form(value: Value) -> str:
    """Textual form of a value as it appears in a rendered page."""
    if isinstance(value, (Text, Markup)):
        return value.value
    if isinstance(value, Bool):
        return 'true' if value.value else 'false'
    if isinstance(value, Int):
        return str(value.value)
    if isinstance(value, ListValue):
        return ''.join(text_form(item) for item in value.items)
    if isinstance(value, RecordValue):
        return '\n'.join(f"{name}: {text_form(field)}" for name, field in value.fields)
    raise TypeError(f"not a value: {value!r}")

def to_python(value: Value):
    """Plain Python data for a value, used by the JSON encoders."""
    if isinstance(value, ListValue):
        return [to_python(item) for item in value.items]
    if isinstance(value, RecordValue):
        return {name: to_python(field) for name, field in value.fields}
    return value.value
