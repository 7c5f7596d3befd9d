"""Entities of the conceptual data model."""

from dataclasses import dataclass, field
from types import MappingProxyType

from amcmpy.constants.project import TEXT


@dataclass(frozen=True, slots=True, order=True)
class StateId:
    index: str

    def __str__(self) -> str:
        return self.index


@dataclass(frozen=True, slots=True)
class Concept:
    """A family of functions over one individual set with one value type."""
    name: str
    domain_name: str
    value_type: str
    function_names: tuple

    def __post_init__(self):
        object.__setattr__(self, 'function_names', tuple(self.function_names))
        if len(set(self.function_names)) != len(self.function_names):
            raise ValueError(f"concept '{self.name}' repeats a function name")


@dataclass(frozen=True, slots=True)
class Individual:
    id: str
    attributes: tuple = ()
    domain: str = None

    def __post_init__(self):
        attributes = self.attributes
        if isinstance(attributes, dict):
            attributes = attributes.items()
        object.__setattr__(self, 'attributes', tuple(attributes))

    @classmethod
    def build(cls, ident: str, attributes: dict = None, domain: str = None) -> 'Individual':
        return cls(ident, tuple((attributes or {}).items()), domain)

    def attribute(self, concept: str, function: str):
        """The literal for (concept, function), or None when absent."""
        return dict(self.attributes).get((concept, function))


@dataclass(frozen=True, slots=True)
class VariableDomain:
    """For each state, the set of individuals present: H_T(I)."""
    name: str
    element_type: str = TEXT
    membership: tuple = ()

    def members(self, state: StateId) -> frozenset | None:
        return dict(self.membership).get(state)

    def with_members(self, state: StateId, members) -> 'VariableDomain':
        table = dict(self.membership)
        table[state] = frozenset(members)
        return VariableDomain(self.name, self.element_type, tuple(table.items()))

    def states(self) -> list:
        return [state for state, _ in self.membership]


@dataclass(frozen=True, slots=True)
class DataObject:
    """The triple <concept, individual, state>."""
    concept: Concept
    individual: Individual
    state: StateId


@dataclass(frozen=True, slots=True)
class LevelObject:
    """
    A comprehension {x in base | formula} materialized at one state.

    Level 1 objects hold individual ids; a level j object holds frozensets
    drawn from the powerset of its level j-1 base.
    """
    name: str
    level: int
    base: str
    defining_formula: object
    extension: frozenset
    state: StateId
    unique: bool = False

    def __post_init__(self):
        if self.level < 1:
            raise ValueError(f"object '{self.name}' must have level >= 1")


def _frozen(mapping=None) -> MappingProxyType:
    return MappingProxyType(dict(mapping or {}))


@dataclass(frozen=True, slots=True)
class DomainModel:
    """Name-keyed collections of every model entity, in declaration order."""
    domains: MappingProxyType = field(default_factory=_frozen)
    concepts: MappingProxyType = field(default_factory=_frozen)
    individuals: MappingProxyType = field(default_factory=_frozen)
    states: tuple = ()
    objects: MappingProxyType = field(default_factory=_frozen)

    def evolve(self, **changes) -> 'DomainModel':
        """A new model with some collections replaced."""
        fields = {
            'domains': self.domains,
            'concepts': self.concepts,
            'individuals': self.individuals,
            'states': self.states,
            'objects': self.objects,
        }
        fields.update(changes)
        for key in ('domains', 'concepts', 'individuals', 'objects'):
            fields[key] = _frozen(fields[key])
        fields['states'] = tuple(fields['states'])
        return DomainModel(**fields)

    def concepts_over(self, domain: str) -> list:
        return [c for c in self.concepts.values() if c.domain_name == domain]

    def individuals_of(self, domain: str) -> list:
        return [i for i in self.individuals.values() if i.domain == domain]

    def members(self, domain: str, state: StateId) -> frozenset:
        found = self.domains[domain].members(state)
        return found if found is not None else frozenset()
