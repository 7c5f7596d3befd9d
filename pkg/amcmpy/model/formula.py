"""
Formulas of the object definition language and their evaluation.

Elements live at metalevels: an individual id is at level 0, a frozenset of
level j elements is at level j + 1. An atomic formula has a native level
(0 for attribute tests, level(o) - 1 for membership in object o). At its
native level an atom is tested directly; above it, the atom holds of a set
when it holds of every member.
"""

from dataclasses import dataclass

from amcmpy.core.exceptions import LevelMismatch, StateMismatch, UnknownReference

# -- SYNTAX --

@dataclass(frozen=True, slots=True)
class AttrEq:
    concept: str
    function: str
    literal: object

@dataclass(frozen=True, slots=True)
class AttrNeq:
    concept: str
    function: str
    literal: object

@dataclass(frozen=True, slots=True)
class And:
    left: object
    right: object

@dataclass(frozen=True, slots=True)
class Or:
    left: object
    right: object

@dataclass(frozen=True, slots=True)
class Not:
    operand: object

@dataclass(frozen=True, slots=True)
class InObject:
    name: str

@dataclass(frozen=True, slots=True)
class TrueFormula:
    pass

@dataclass(frozen=True, slots=True)
class FalseFormula:
    pass


TRUE = TrueFormula()
FALSE = FalseFormula()


def depth(f) -> int:
    if isinstance(f, (And, Or)):
        return 1 + max(depth(f.left), depth(f.right))
    if isinstance(f, Not):
        return 1 + depth(f.operand)
    return 0

def referenced_objects(f) -> list:
    """Names of objects referenced by InObject, in order of appearance."""
    if isinstance(f, InObject):
        return [f.name]
    if isinstance(f, (And, Or)):
        return referenced_objects(f.left) + referenced_objects(f.right)
    if isinstance(f, Not):
        return referenced_objects(f.operand)
    return []

def referenced_attributes(f) -> list:
    if isinstance(f, (AttrEq, AttrNeq)):
        return [(f.concept, f.function)]
    if isinstance(f, (And, Or)):
        return referenced_attributes(f.left) + referenced_attributes(f.right)
    if isinstance(f, Not):
        return referenced_attributes(f.operand)
    return []

def check_references(model, f) -> None:
    """Raise UnknownReference for the first concept, function or object f names that model lacks."""
    for concept, function in referenced_attributes(f):
        if concept not in model.concepts:
            raise UnknownReference(concept)
        if function not in model.concepts[concept].function_names:
            raise UnknownReference(f"{concept}.{function}")
    for name in referenced_objects(f):
        if name not in model.objects:
            raise UnknownReference(name)

# -- EVALUATION --

def element_level(element) -> int | None:
    """0 for an id, j + 1 for a set of level j elements, None for the empty set."""
    if isinstance(element, str):
        return 0
    if isinstance(element, frozenset):
        for member in element:
            inner = element_level(member)
            return None if inner is None else inner + 1
        return None
    raise LevelMismatch(f"{element!r} is not a model element")

def eval_formula(model, f, element, state, level: int = None) -> bool:
    """
    Truth of f at element under state, with closed-world attributes:
    an absent attribute makes AttrEq false and AttrNeq true.
    """
    check_references(model, f)
    if level is None:
        level = element_level(element)
        if level is None:
            level = 1
    return _holds(model, f, element, state, level)

def _holds(model, f, x, state, level: int) -> bool:
    if isinstance(f, TrueFormula):
        return True
    if isinstance(f, FalseFormula):
        return False
    if isinstance(f, And):
        return _holds(model, f.left, x, state, level) and _holds(model, f.right, x, state, level)
    if isinstance(f, Or):
        return _holds(model, f.left, x, state, level) or _holds(model, f.right, x, state, level)
    if isinstance(f, Not):
        return not _holds(model, f.operand, x, state, level)
    if isinstance(f, (AttrEq, AttrNeq, InObject)):
        return _atom(model, f, x, state, level)
    raise TypeError(f"not a formula: {f!r}")

def _native_level(model, f, state) -> int:
    if isinstance(f, InObject):
        obj = model.objects[f.name]
        if obj.state != state:
            raise StateMismatch(f"object '{obj.name}' is stamped at {obj.state}, not {state}")
        return obj.level - 1
    return 0

def _atom(model, f, x, state, level: int) -> bool:
    native = _native_level(model, f, state)
    if level < native:
        raise LevelMismatch(f"{type(f).__name__} needs level {native} elements, got level {level}")
    if level > native:
        return all(_atom(model, f, member, state, level - 1) for member in x)
    if isinstance(f, InObject):
        return x in model.objects[f.name].extension
    individual = model.individuals.get(x)
    value = individual.attribute(f.concept, f.function) if individual is not None else None
    if isinstance(f, AttrEq):
        return value is not None and value == f.literal
    return value is None or value != f.literal
