import re

from amcmpy.constants.project import KEYWORDS, BOOL_LITERALS

IDENTIFIER_PATTERN = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')
PATH_SEGMENT_PATTERN = re.compile(r'^[A-Za-z0-9_][A-Za-z0-9_-]*$')


def is_identifier(value) -> bool:
    """Check if the given string is a legal program identifier."""
    if not isinstance(value, str):
        return False
    return bool(IDENTIFIER_PATTERN.match(value)) and value not in KEYWORDS and value not in BOOL_LITERALS

def is_path_segment(value) -> bool:
    """Check if the given string is one segment of a normalized content path."""
    return isinstance(value, str) and bool(PATH_SEGMENT_PATTERN.match(value))
