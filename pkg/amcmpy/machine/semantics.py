"""
Primitive rules shared by the denotational evaluator and the small-step
machine. Both evaluators reach every effect and every error through these
functions, so they cannot disagree on a single rule.
"""

from amcmpy.core.exceptions import MachineError, ErrorKind, NoVariant
from amcmpy.core.values import Bool
from amcmpy.machine.state import MachineState, Memory, UNBOUND
from amcmpy.templating.resolve import resolve_variant


def lookup_identifier(s: MachineState, name: str, pos=None):
    value = s.memory.lookup(name)
    if value is UNBOUND:
        raise MachineError(ErrorKind.UNBOUND_IDENTIFIER, name, pos, s)
    return value

def read_input(s: MachineState, pos=None) -> tuple:
    if not s.input:
        raise MachineError(ErrorKind.INPUT_EXHAUSTED, 'read', pos, s)
    return s.consume()

def resolve_content(s: MachineState, path: str, store, ctx, pos=None):
    obj = store.get(path) if store is not None else None
    if obj is None:
        raise MachineError(ErrorKind.UNKNOWN_CONTENT, path, pos, s)
    try:
        return resolve_variant(obj, ctx)
    except NoVariant:
        raise MachineError(ErrorKind.UNKNOWN_CONTENT, f"{path} (no variant for context)", pos, s)

def compare_values(s: MachineState, left, right, negate: bool, pos=None) -> Bool:
    """Equality between values of one type tag; deep for lists and records."""
    if left.tag != right.tag:
        raise MachineError(ErrorKind.TYPE_INCOMPATIBILITY, f"{left.tag} vs {right.tag}", pos, s)
    return Bool((left == right) != negate)

def branch_condition(s: MachineState, value, pos=None) -> bool:
    if not isinstance(value, Bool):
        raise MachineError(ErrorKind.TYPE_INCOMPATIBILITY, f"condition is {value.tag}", pos, s)
    return value.value

def bind_value(m: Memory, slot_type: str, ide: str, v, pos=None, state: MachineState = None) -> Memory:
    """Type-checked binding of v to identifier ide declared with slot_type."""
    if v.tag != slot_type:
        raise MachineError(ErrorKind.TYPE_INCOMPATIBILITY, ide, pos, state)
    return m.bind(ide, v)

def assign(s: MachineState, name: str, value, slots: dict = None, pos=None) -> MachineState:
    """C[I=E]: (m[v/I], i, o), through bind_value when I is a typed slot."""
    if slots and name in slots:
        return s.with_memory(bind_value(s.memory, slots[name], name, value, pos, s))
    return s.with_memory(s.memory.bind(name, value))
