"""
Operations over the conceptual model. Every operation returns a new model
(or a value computed from one); no model is ever mutated.
"""

from itertools import chain, combinations

import structlog

from amcmpy.constants.project import TEXT, SCALAR_TAGS, MAX_POWERSET_BASE
from amcmpy.core.exceptions import (
    DuplicateName,
    UnknownDomain,
    DuplicateId,
    TypeMismatch,
    UnknownConcept,
    UnknownIndividual,
    UnknownReference,
    LevelMismatch,
    StratificationError,
    StateMismatch,
    NotAMember,
    NotFound,
    NotUnique,
)
from amcmpy.model.formula import (
    eval_formula,
    check_references,
    element_level,
    referenced_objects,
    _holds,
)
from amcmpy.model.types import (
    Concept,
    DataObject,
    DomainModel,
    Individual,
    LevelObject,
    StateId,
    VariableDomain,
)

logger = structlog.get_logger(__name__)


def empty_model() -> DomainModel:
    return DomainModel()

def _state(state) -> StateId:
    return state if isinstance(state, StateId) else StateId(state)

# -- DECLARATIONS --

def declare_domain(model: DomainModel, name: str, element_type: str = TEXT) -> DomainModel:
    if name in model.domains or name in model.objects:
        raise DuplicateName('domain', name)
    domains = dict(model.domains)
    domains[name] = VariableDomain(name, element_type)
    return model.evolve(domains=domains)

def declare_state(model: DomainModel, state) -> DomainModel:
    state = _state(state)
    if state in model.states:
        raise DuplicateName('state', state.index)
    return model.evolve(states=model.states + (state,))

def define_concept(model: DomainModel, c: Concept) -> DomainModel:
    if c.name in model.concepts:
        raise DuplicateName('concept', c.name)
    if c.domain_name not in model.domains:
        raise UnknownDomain(c.domain_name)
    if c.value_type not in SCALAR_TAGS:
        raise TypeMismatch(c.name, 'a scalar type', c.value_type)
    concepts = dict(model.concepts)
    concepts[c.name] = c
    return model.evolve(concepts=concepts)

def add_individual(model: DomainModel, domain: str, ind: Individual) -> DomainModel:
    """Declare ind in domain, checking every attribute against its concept."""
    if domain not in model.domains:
        raise UnknownDomain(domain)
    if ind.id in model.individuals:
        raise DuplicateId(ind.id)
    for (concept_name, function), literal in ind.attributes:
        concept = model.concepts.get(concept_name)
        if concept is None:
            raise UnknownConcept(concept_name)
        if function not in concept.function_names:
            raise UnknownConcept(concept_name, f"concept '{concept_name}' has no function '{function}'")
        if concept.domain_name != domain:
            raise UnknownConcept(concept_name, f"concept '{concept_name}' ranges over '{concept.domain_name}', not '{domain}'")
        if literal.tag != concept.value_type:
            raise TypeMismatch(f"{ind.id}:{concept_name}.{function}", concept.value_type, literal.tag)
    individuals = dict(model.individuals)
    individuals[ind.id] = Individual(ind.id, ind.attributes, domain)
    return model.evolve(individuals=individuals)

def set_state_membership(model: DomainModel, domain: str, state, members) -> DomainModel:
    """Replace the membership of domain at state; other states are untouched."""
    state = _state(state)
    if domain not in model.domains:
        raise UnknownDomain(domain)
    members = frozenset(members)
    for ident in sorted(members):
        individual = model.individuals.get(ident)
        if individual is None or individual.domain != domain:
            raise UnknownIndividual(ident)
    states = model.states if state in model.states else model.states + (state,)
    domains = dict(model.domains)
    domains[domain] = domains[domain].with_members(state, members)
    return model.evolve(domains=domains, states=states)

def make_data_object(model: DomainModel, concept: str, individual: str, state) -> DataObject:
    """The checked triple <concept, individual, state>."""
    state = _state(state)
    if concept not in model.concepts:
        raise UnknownConcept(concept)
    if individual not in model.individuals:
        raise UnknownIndividual(individual)
    c = model.concepts[concept]
    if individual not in model.members(c.domain_name, state):
        raise NotAMember(individual, c.domain_name, state)
    return DataObject(c, model.individuals[individual], state)

# -- QUERIES --

def _domain_members(model: DomainModel, domain: str, state: StateId) -> frozenset:
    if domain not in model.domains:
        raise UnknownDomain(domain)
    if state not in model.states:
        raise UnknownReference(f"state {state}")
    return model.members(domain, state)

def individualize(model: DomainModel, domain: str, f, state) -> str:
    """The unique member of domain satisfying f at state (definite description)."""
    state = _state(state)
    members = _domain_members(model, domain, state)
    check_references(model, f)
    satisfiers = [d for d in sorted(members) if eval_formula(model, f, d, state, level=0)]
    if not satisfiers:
        raise NotFound(0)
    if len(satisfiers) > 1:
        raise NotUnique(len(satisfiers))
    return satisfiers[0]

def powerset(elements) -> list:
    elements = sorted(elements, key=_sort_key)
    subsets = chain.from_iterable(combinations(elements, size) for size in range(len(elements) + 1))
    return [frozenset(subset) for subset in subsets]

def _sort_key(element):
    if isinstance(element, frozenset):
        return (1, sorted(map(_sort_key, element)))
    return (0, element)

def resolve_base(model: DomainModel, base, state: StateId) -> tuple:
    """(base name, base level, carrier elements) for a domain or level object."""
    if isinstance(base, LevelObject):
        obj = base
    elif base in model.domains:
        return base, 0, _domain_members(model, base, state)
    elif base in model.objects:
        obj = model.objects[base]
    else:
        raise UnknownReference(base)
    if obj.state != state:
        raise StateMismatch(f"base '{obj.name}' is stamped at {obj.state}, not {state}")
    if len(obj.extension) > MAX_POWERSET_BASE:
        raise LevelMismatch(f"base '{obj.name}' has {len(obj.extension)} members; "
                            f"subsets are enumerated only up to {MAX_POWERSET_BASE}")
    return obj.name, obj.level, powerset(obj.extension)

def comprehend(model: DomainModel, base, f, state, name: str,
               unique: bool = False, stratified: bool = True) -> LevelObject:
    """
    {x in base at state | f}, one level above its base.

    Level 1 objects range over the members of a domain; a level j object
    ranges over all subsets of its level j-1 base. InObject may only name
    objects of strictly lower level than the result.
    """
    state = _state(state)
    if name in model.objects or name in model.domains:
        raise DuplicateName('object', name)
    check_references(model, f)
    base_name, base_level, carrier = resolve_base(model, base, state)
    level = base_level + 1
    if stratified:
        for ref in referenced_objects(f):
            if model.objects[ref].level >= level:
                raise StratificationError(
                    f"object '{name}' (level {level}) may not reference '{ref}' "
                    f"(level {model.objects[ref].level})")
    extension = frozenset(x for x in carrier if _holds(model, f, x, state, base_level))
    logger.debug("comprehended", name=name, level=level, base=base_name, size=len(extension))
    return LevelObject(name, level, base_name, f, extension, state, unique)

def add_object(model: DomainModel, obj: LevelObject) -> DomainModel:
    if obj.name in model.objects or obj.name in model.domains:
        raise DuplicateName('object', obj.name)
    objects = dict(model.objects)
    objects[obj.name] = obj
    return model.evolve(objects=objects)

def define_object(model: DomainModel, base, f, state, name: str, unique: bool = False) -> tuple:
    """Comprehend and register in one go; returns (model, object)."""
    obj = comprehend(model, base, f, state, name, unique)
    return add_object(model, obj), obj

def member(obj: LevelObject, element) -> bool:
    """Membership in a level object: satisfaction of its defining formula."""
    expected = obj.level - 1
    actual = element_level(element)
    if actual is None:
        if expected < 1:
            raise LevelMismatch(f"'{obj.name}' holds individuals, not sets")
    elif actual != expected:
        raise LevelMismatch(f"'{obj.name}' holds level {expected} elements, got level {actual}")
    return element in obj.extension

# -- DYNAMICS --

def state_delta(model: DomainModel, domain: str, before, after) -> tuple:
    """(entered, left): individuals that appear and disappear between two states."""
    old = _domain_members(model, domain, _state(before))
    new = _domain_members(model, domain, _state(after))
    return new - old, old - new

def states_satisfying(model: DomainModel, domain: str, individual: str, f) -> list:
    """All states at which individual is a member of domain and satisfies f."""
    if individual not in model.individuals:
        raise UnknownIndividual(individual)
    check_references(model, f)
    return [
        state for state in model.states
        if individual in _domain_members(model, domain, state)
        and eval_formula(model, f, individual, state, level=0)
    ]
