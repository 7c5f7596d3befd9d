"""Machine configuration: State = Memory x Input x Output."""

from dataclasses import dataclass, field, replace


class Unbound:
    """The ``unbound`` element added to the value domain of Memory."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return 'unbound'

    def __bool__(self) -> bool:
        return False


UNBOUND = Unbound()


class Memory:
    """
    Total map from identifiers to values: absent identifiers are unbound.
    Instances are never mutated; ``bind`` returns a new memory.
    """

    __slots__ = ('_bindings',)

    def __init__(self, bindings: dict = None) -> None:
        self._bindings = dict(bindings or {})

    def lookup(self, name: str):
        return self._bindings.get(name, UNBOUND)

    def is_bound(self, name: str) -> bool:
        return name in self._bindings

    def bind(self, name: str, value) -> 'Memory':
        """Substitution m[v/I]: rebinding overwrites, other names are untouched."""
        bindings = dict(self._bindings)
        bindings[name] = value
        return Memory(bindings)

    def names(self) -> list:
        return sorted(self._bindings)

    def items(self) -> list:
        return sorted(self._bindings.items())

    def as_dict(self) -> dict:
        return dict(self._bindings)

    def __len__(self) -> int:
        return len(self._bindings)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Memory):
            return NotImplemented
        return self._bindings == other._bindings

    def __hash__(self) -> int:
        return hash(frozenset(self._bindings.items()))

    def __repr__(self) -> str:
        inner = ', '.join(f"{name}={value!r}" for name, value in self.items())
        return f"Memory({{{inner}}})"


@dataclass(frozen=True, slots=True)
class MachineState:
    memory: Memory = field(default_factory=Memory)
    input: tuple = ()
    output: tuple = ()

    def with_memory(self, memory: Memory) -> 'MachineState':
        return replace(self, memory=memory)

    def consume(self) -> tuple:
        """Head of input and the state without it."""
        return self.input[0], replace(self, input=self.input[1:])

    def append_output(self, value) -> 'MachineState':
        return replace(self, output=self.output + (value,))


def initial_state(input=()) -> MachineState:
    """Empty memory, the given input, empty output."""
    return MachineState(Memory(), tuple(input), ())
