from dataclasses import fields, is_dataclass
from enum import Enum
from json import JSONEncoder
from pathlib import PurePath
from types import MappingProxyType

from amcmpy.core.exceptions import CustomEncoderError
from amcmpy.core.values import Text, Int, Bool, Markup, ListValue, RecordValue, to_python


def namespace(o) -> dict:
    """
    Attribute dictionary of an object, covering slotted dataclasses and
    objects exposing ``as_dict`` as well as plain instances.
    """
    if is_dataclass(o) and not isinstance(o, type):
        return {f.name: getattr(o, f.name) for f in fields(o)}
    if hasattr(o, 'as_dict'):
        return o.as_dict()
    if hasattr(o, '__dict__'):
        return o.__dict__
    raise CustomEncoderError(f"Object of type {type(o).__name__} has no attributes to encode")

def plain(o):
    """JSON-ready form for the non-record types amcmpy passes around."""
    if isinstance(o, (Text, Int, Bool, Markup, ListValue, RecordValue)):
        return to_python(o)
    if isinstance(o, Enum):
        return o.value
    if isinstance(o, (set, frozenset)):
        return sorted((plain(item) if isinstance(item, frozenset) else item for item in o), key=str)
    if isinstance(o, MappingProxyType):
        return dict(o)
    if isinstance(o, PurePath):
        return o.as_posix()
    return None


class Encoder(JSONEncoder):
    """
    Encoder class provides a way to serialize amcmpy objects
    .. to JSON: content values become plain data, everything else
    .. is encoded through its namespace dictionary.
    """
    def default(self, o):
        found = plain(o)
        if found is not None:
            return found
        try:
            return namespace(o)
        except CustomEncoderError:
            raise
        except Exception as e:
            raise CustomEncoderError("An error occurred during encoding") from e

class SecretsEncoder(Encoder):
    """JSON encoder that excludes specified attributes from the output."""

    def __init__(self, secrets: list = ['secrets'], **kwargs):
        if not isinstance(secrets, list):
            raise TypeError("secrets must be a list")
        if not secrets:
            raise ValueError("secrets must not be empty")
        if not all(isinstance(attr, str) for attr in secrets):
            raise TypeError("All elements in secrets must be strings")

        self.secrets = set(secrets)
        super().__init__(**kwargs)

    def default(self, o):
        """Encodes the object to JSON format excluding specified attributes."""
        found = plain(o)
        if found is not None:
            return found
        return {k: v for k, v in namespace(o).items() if k not in self.secrets}
