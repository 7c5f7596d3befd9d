import hashlib
from dataclasses import dataclass

from amcmpy.constants.project import DEFAULT_STATUS


@dataclass(frozen=True, slots=True)
class PersonalizationContext:
    """
    The parameter axes of the personalization functional:
    registration status (p), user preferences (s), client interface
    parameters (v) and data access device parameters (e).

    The maps are stored as sorted (key, value) tuples so contexts are
    hashable and compare by content.
    """
    p: str = DEFAULT_STATUS
    s: tuple = ()
    v: tuple = ()
    e: tuple = ()

    def __post_init__(self):
        if not self.p:
            raise ValueError("registration status must not be empty")
        for axis in ('s', 'v', 'e'):
            pairs = tuple(sorted(dict(getattr(self, axis)).items()))
            if any(not key for key, _ in pairs):
                raise ValueError(f"empty key on axis '{axis}'")
            object.__setattr__(self, axis, pairs)

    @classmethod
    def build(cls, p: str = DEFAULT_STATUS, s: dict = None, v: dict = None, e: dict = None):
        return cls(p, tuple((s or {}).items()), tuple((v or {}).items()), tuple((e or {}).items()))

    def get(self, axis: str, key: str = None) -> str | None:
        """Value of a context key; ``get('p')`` is the status."""
        if axis == 'p':
            return self.p
        return dict(getattr(self, axis)).get(key)

    def with_key(self, axis: str, key: str, value: str) -> 'PersonalizationContext':
        pairs = dict(getattr(self, axis))
        pairs[key] = value
        fields = {'p': self.p, 's': self.s, 'v': self.v, 'e': self.e, axis: tuple(pairs.items())}
        return PersonalizationContext(**fields)

    def canonical(self) -> str:
        lines = [f"p = {self.p}"]
        for axis in ('s', 'v', 'e'):
            lines += [f"{axis}.{key} = {value}" for key, value in getattr(self, axis)]
        return '\n'.join(lines) + '\n'

    def fingerprint(self) -> str:
        return context_fingerprint(self)


ANONYMOUS = PersonalizationContext()


def context_fingerprint(ctx: PersonalizationContext) -> str:
    """SHA-256 over the canonical context text."""
    return hashlib.sha256(ctx.canonical().encode('utf-8')).hexdigest()
