from enum import Enum


class AmcmError(Exception):
    """Base class for every error raised by amcmpy."""
    pass

# -- SOURCE TEXT --

class SourceError(AmcmError):
    """An error tied to a position in some source text."""

    def __init__(self, message: str, position=None, file: str = None):
        self.message = message
        self.position = position
        self.file = file
        super().__init__(self._format())

    def _format(self) -> str:
        where = []
        if self.file:
            where.append(str(self.file))
        if self.position is not None:
            where.append(f"{self.position.line}:{self.position.column}")
        prefix = ":".join(where)
        return f"{prefix}: {self.message}" if prefix else self.message

class LexError(SourceError):
    """Raised on an unterminated literal or an illegal character."""
    pass

class ParseError(SourceError):
    """Raised when the token stream does not match the grammar."""

    def __init__(self, message: str, position=None, expected=(), file: str = None):
        self.expected = frozenset(expected)
        super().__init__(message, position, file)

class UndeclaredHole(ParseError):
    """A skeleton hole has no slot declaration."""

    def __init__(self, name: str, position=None, file: str = None):
        self.name = name
        super().__init__(f"hole '{{{{{name}}}}}' has no slot declaration", position, file=file)

class DuplicateKey(ParseError):
    """A key appears twice in a key = value file."""

    def __init__(self, key: str, position=None, file: str = None):
        self.key = key
        super().__init__(f"duplicate key '{key}'", position, file=file)

# -- CONCEPTUAL MODEL --

class ModelError(AmcmError):
    """Base class for conceptual model errors."""
    pass

class DuplicateName(ModelError):
    def __init__(self, kind: str, name: str):
        super().__init__(f"{kind} '{name}' is already declared")
        self.kind = kind
        self.name = name

class UnknownDomain(ModelError):
    def __init__(self, name: str):
        super().__init__(f"domain '{name}' is not declared")
        self.name = name

class DuplicateId(ModelError):
    def __init__(self, ident: str):
        super().__init__(f"individual '{ident}' is already declared")
        self.ident = ident

class TypeMismatch(ModelError):
    def __init__(self, subject: str, expected: str, actual: str):
        super().__init__(f"{subject}: expected {expected}, got {actual}")
        self.subject = subject
        self.expected = expected
        self.actual = actual

class UnknownConcept(ModelError):
    def __init__(self, name: str, detail: str = None):
        super().__init__(detail or f"concept '{name}' is not declared")
        self.name = name

class UnknownIndividual(ModelError):
    def __init__(self, ident: str):
        super().__init__(f"individual '{ident}' is not declared")
        self.ident = ident

class UnknownReference(ModelError):
    """A formula or object names something the model does not declare."""

    def __init__(self, reference: str):
        super().__init__(f"unknown reference '{reference}'")
        self.reference = reference

class LevelMismatch(ModelError):
    """An element or reference sits at the wrong metalevel."""
    pass

class StratificationError(LevelMismatch):
    """A defining formula references an object that is not strictly lower."""
    pass

class StateMismatch(ModelError):
    """A level object is used at a state other than the one it is stamped with."""
    pass

class NotAMember(ModelError):
    """An individual is absent from a domain at a state."""

    def __init__(self, ident: str, domain: str, state):
        super().__init__(f"individual '{ident}' is not in domain '{domain}' at state {state}")
        self.ident = ident
        self.domain = domain
        self.state = state

class DefiniteDescriptionError(ModelError):
    """Individualization found no satisfier or more than one."""

    def __init__(self, message: str, count: int):
        super().__init__(message)
        self.count = count

class NotFound(DefiniteDescriptionError):
    def __init__(self, count: int = 0):
        super().__init__("no individual satisfies the formula", count)

class NotUnique(DefiniteDescriptionError):
    def __init__(self, count: int):
        super().__init__(f"{count} individuals satisfy the formula", count)

# -- ABSTRACT MACHINE --

class ErrorKind(Enum):
    UNBOUND_IDENTIFIER = 'UnboundIdentifier'
    TYPE_INCOMPATIBILITY = 'TypeIncompatibility'
    INPUT_EXHAUSTED = 'InputExhausted'
    UNKNOWN_CONTENT = 'UnknownContent'

class MachineError(AmcmError):
    """The {error} summand of the machine's semantic functions."""

    def __init__(self, kind: ErrorKind, detail: str, position=None, state=None):
        self.kind = kind
        self.detail = detail
        self.position = position
        self.state = state
        super().__init__(str(self))

    def __str__(self) -> str:
        where = f" at {self.position.line}:{self.position.column}" if self.position else ""
        return f"{self.kind.value}({self.detail}){where}"

# -- CONTENT --

class ContentError(AmcmError):
    """Base class for content store errors."""
    pass

class NoVariant(ContentError):
    def __init__(self, path: str):
        super().__init__(f"no variant of '{path}' matches the context")
        self.path = path

class DuplicatePath(ContentError):
    def __init__(self, path: str, files: list):
        super().__init__(f"content path '{path}' is defined by {', '.join(map(str, files))}")
        self.path = path
        self.files = files

class ContentParseError(ParseError):
    """A malformed content file."""
    pass

# -- TRANSLATION --

class TranslationError(AmcmError):
    pass

class IntegrityFailed(TranslationError):
    def __init__(self, report):
        super().__init__(f"integrity check failed with {len(report.errors)} error(s)")
        self.report = report

class IdentifierCollision(TranslationError):
    def __init__(self, identifier: str, paths: list):
        super().__init__(f"paths {', '.join(paths)} all mangle to '{identifier}'")
        self.identifier = identifier
        self.paths = paths

class IllegalIdentifier(TranslationError):
    def __init__(self, path: str):
        super().__init__(f"path '{path}' does not mangle to a legal identifier")
        self.path = path

# -- CONFIGURATION --

class ConfigError(AmcmError):
    """Raised when the project configuration is missing or inconsistent."""
    pass

class CustomEncoderError(AmcmError):
    """Custom error class to represent errors that occur during encoding."""

    def __init__(self, message: str, *args):
        super().__init__(message, *args)
        self.message = message

    def __str__(self):
        return f"CustomEncoderError: {self.message}"
