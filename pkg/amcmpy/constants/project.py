"""Project-wide constants."""

# Content type tags
TEXT = 'Text'
INT = 'Int'
BOOL = 'Bool'
MARKUP = 'Markup'
LIST = 'List'
RECORD = 'Record'

SCALAR_TAGS = (TEXT, INT, BOOL, MARKUP)

INT_MIN = -(2 ** 63)
INT_MAX = 2 ** 63 - 1

# Language
KEYWORDS = frozenset({'if', 'else', 'emit', 'content', 'read'})
BOOL_LITERALS = {'true': True, 'false': False}
PUNCTUATION = ('<<<', '==', '!=', '=', ';', '(', ')', '{', '}', ':', ',', '.', '<', '>', '|', '@')
MARKUP_OPEN = '<<<'
MARKUP_CLOSE = '>>>'
COMMENT = '#'

# Personalization
DEFAULT_STATUS = 'anonymous'
CONTEXT_AXES = ('p', 's', 'v', 'e')
DEFAULT_GUARD = 'default'

# Files
TEMPLATE_EXT = '.amt'
BINDING_EXT = '.amp'
CONTENT_EXT = '.amc'
CONTEXT_EXT = '.ctx'
PAGE_EXT = '.html'
TRACE_EXT = '.trace'
PAYLOAD_SEPARATOR = '---'

# CLI
PROJECT_ENV = 'AMCM_PROJECT'
DEFAULT_PROJECT_FILE = 'amcm.conf'
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTEGRITY = 2
EXIT_MACHINE = 3

# Model
MAX_POWERSET_BASE = 16

# DDL
SQL_TYPES = {
    TEXT: 'TEXT',
    MARKUP: 'TEXT',
    INT: 'BIGINT',
    BOOL: 'BOOLEAN',
}

# Words portable SQL parsers refuse as bare table or column names
SQL_RESERVED = frozenset({
    'all', 'and', 'any', 'as', 'asc', 'between', 'by', 'case', 'cast', 'check', 'column',
    'constraint', 'create', 'cross', 'current', 'current_date', 'current_time',
    'current_timestamp', 'current_user', 'default', 'delete', 'desc', 'distinct', 'drop',
    'else', 'end', 'except', 'exists', 'false', 'fetch', 'for', 'foreign', 'from', 'full',
    'grant', 'group', 'having', 'in', 'inner', 'insert', 'intersect', 'into', 'is', 'join',
    'key', 'left', 'like', 'limit', 'natural', 'not', 'null', 'offset', 'on', 'or', 'order',
    'outer', 'primary', 'references', 'right', 'select', 'session_user', 'set', 'some',
    'table', 'then', 'to', 'true', 'union', 'unique', 'update', 'user', 'using', 'values',
    'when', 'where', 'with',
})
