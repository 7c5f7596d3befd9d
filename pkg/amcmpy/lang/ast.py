"""Abstract syntax for the binding language: the Exp and Com domains.

Positions are carried for diagnostics only and never take part in equality,
so a pretty-printed program re-parses to an equal tree.
"""

from dataclasses import dataclass, field

from amcmpy.lang.tokens import Position


def _pos():
    return field(default=None, compare=False, repr=False)

# -- EXPRESSIONS --

@dataclass(frozen=True, slots=True)
class Lit:
    value: object
    pos: Position = _pos()

@dataclass(frozen=True, slots=True)
class Ident:
    name: str
    pos: Position = _pos()

@dataclass(frozen=True, slots=True)
class ContentRef:
    path: str
    pos: Position = _pos()

    def __post_init__(self):
        if not self.path:
            raise ValueError("content paths are non-empty")

@dataclass(frozen=True, slots=True)
class Read:
    pos: Position = _pos()

@dataclass(frozen=True, slots=True)
class Eq:
    left: object
    right: object
    pos: Position = _pos()

@dataclass(frozen=True, slots=True)
class Neq:
    left: object
    right: object
    pos: Position = _pos()

# -- COMMANDS --

@dataclass(frozen=True, slots=True)
class Assign:
    name: str
    expr: object
    pos: Position = _pos()

@dataclass(frozen=True, slots=True)
class Seq:
    first: object
    rest: object
    pos: Position = _pos()

@dataclass(frozen=True, slots=True)
class If:
    cond: object
    then: object
    orelse: object = None
    pos: Position = _pos()

@dataclass(frozen=True, slots=True)
class Emit:
    expr: object
    pos: Position = _pos()

@dataclass(frozen=True, slots=True)
class Skip:
    """The empty program."""
    pos: Position = _pos()


def sequence(commands) -> object:
    """Right-associated Seq over commands; Skip when there are none."""
    commands = list(commands)
    if not commands:
        return Skip()
    result = commands[-1]
    for command in reversed(commands[:-1]):
        result = Seq(command, result, command.pos)
    return result

def flatten(com) -> list:
    """The commands of a Seq chain in execution order."""
    if isinstance(com, Seq):
        return flatten(com.first) + flatten(com.rest)
    if isinstance(com, Skip):
        return []
    return [com]
