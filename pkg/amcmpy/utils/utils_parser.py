from dataclasses import dataclass

from amcmpy.constants.project import COMMENT
from amcmpy.core.exceptions import ParseError, DuplicateKey
from amcmpy.lang.tokens import Position


@dataclass(frozen=True, slots=True)
class KeyValue:
    key: str
    value: str
    position: Position


def parse_key_values(text: str, file: str = None) -> list:
    """
    Parse the line-oriented ``key = value`` micro-grammar shared by
    context files, input files and the project configuration.

    Blank lines and lines starting with ``#`` are skipped. Keys are
    stripped; values run to the end of the line and are stripped.
    """
    entries = []
    seen = set()
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(COMMENT):
            continue
        column = len(line) - len(line.lstrip()) + 1
        position = Position(number, column)
        if '=' not in stripped:
            raise ParseError(f"expected 'key = value', found {stripped!r}", position, {"'='"}, file=file)
        key, value = (part.strip() for part in stripped.split('=', 1))
        if not key:
            raise ParseError("missing key before '='", position, {'key'}, file=file)
        if key in seen:
            raise DuplicateKey(key, position, file=file)
        seen.add(key)
        entries.append(KeyValue(key, value, position))
    return entries

def split_list(value: str) -> list:
    """Split a comma-separated configuration value, dropping empty items."""
    return [item.strip() for item in value.split(',') if item.strip()]
