"""
Relational image of a DomainModel.

Mapping:

- domain ``d`` -> table ``d`` keyed by ``id``, one NOT NULL column
  ``<concept>_<fn>`` per concept function over ``d``, in declaration order;
- states of ``d`` -> ``d_state(state_id, individual_id)`` keyed by both
  columns, ``individual_id`` referencing ``d(id)``;
- level 1 object ``o`` -> ``o_members(individual_id)`` referencing its domain;
- level j object ``o`` (j >= 2) -> ``o_members(member_id)`` plus
  ``o_elements(member_id, element_id)``, each element referencing the
  members of the level j-1 base.
"""

import re
from dataclasses import dataclass

import structlog

from amcmpy.constants.project import TEXT, SQL_TYPES
from amcmpy.core.exceptions import IntegrityFailed, ParseError
from amcmpy.lang.tokens import Position
from amcmpy.translator.integrity import check_integrity
from amcmpy.translator.naming import (
    ID_COLUMN, STATE_COLUMN, INDIVIDUAL_COLUMN, MEMBER_COLUMN, ELEMENT_COLUMN,
    domain_table, state_table, members_table, elements_table,
    attribute_column, members_key, objects_in_order,
)

logger = structlog.get_logger(__name__)

INDENT = '    '


@dataclass(frozen=True, slots=True)
class Column:
    name: str
    type: str
    nullable: bool = False


@dataclass(frozen=True, slots=True)
class ForeignKey:
    name: str
    columns: tuple
    table: str
    references: tuple


@dataclass(frozen=True, slots=True)
class Table:
    name: str
    columns: tuple
    primary_key: tuple
    unique: tuple = ()
    foreign_keys: tuple = ()

    @property
    def primary_key_name(self) -> str:
        return f"{self.name}_pk"

    def column(self, name: str) -> Column | None:
        return next((c for c in self.columns if c.name == name), None)

    def column_names(self) -> list:
        return [c.name for c in self.columns]


@dataclass(frozen=True, slots=True)
class DdlDocument:
    tables: tuple = ()

    def table(self, name: str) -> Table | None:
        return next((t for t in self.tables if t.name == name), None)

    def names(self) -> list:
        return [t.name for t in self.tables]

    def __len__(self) -> int:
        return len(self.tables)


def _fk(table: str, column: str, target: str, target_column: str) -> ForeignKey:
    return ForeignKey(f"{table}_{column}_fk", (column,), target, (target_column,))

# -- TRANSLATION --

def domain_tables(model, name: str) -> list:
    domain = model.domains[name]
    id_type = SQL_TYPES[domain.element_type]
    columns = [Column(ID_COLUMN, id_type)]
    for concept in model.concepts_over(name):
        for function in concept.function_names:
            columns.append(Column(attribute_column(concept.name, function), SQL_TYPES[concept.value_type]))
    table = domain_table(name)
    states = state_table(name)
    return [
        Table(table, tuple(columns), (ID_COLUMN,)),
        Table(
            states,
            (Column(STATE_COLUMN, SQL_TYPES[TEXT]), Column(INDIVIDUAL_COLUMN, id_type)),
            (STATE_COLUMN, INDIVIDUAL_COLUMN),
            foreign_keys=(_fk(states, INDIVIDUAL_COLUMN, table, ID_COLUMN),),
        ),
    ]

def object_tables(model, obj) -> list:
    members = members_table(obj.name)
    if obj.level == 1:
        id_type = SQL_TYPES[model.domains[obj.base].element_type]
        return [Table(
            members,
            (Column(INDIVIDUAL_COLUMN, id_type),),
            (INDIVIDUAL_COLUMN,),
            foreign_keys=(_fk(members, INDIVIDUAL_COLUMN, domain_table(obj.base), ID_COLUMN),),
        )]
    base = model.objects[obj.base]
    if base.level == 1:
        element_type = SQL_TYPES[model.domains[base.base].element_type]
    else:
        element_type = SQL_TYPES[TEXT]
    elements = elements_table(obj.name)
    return [
        Table(members, (Column(MEMBER_COLUMN, SQL_TYPES[TEXT]),), (MEMBER_COLUMN,)),
        Table(
            elements,
            (Column(MEMBER_COLUMN, SQL_TYPES[TEXT]), Column(ELEMENT_COLUMN, element_type)),
            (MEMBER_COLUMN, ELEMENT_COLUMN),
            foreign_keys=(
                _fk(elements, MEMBER_COLUMN, members, MEMBER_COLUMN),
                _fk(elements, ELEMENT_COLUMN, members_table(base.name), members_key(base.level)),
            ),
        ),
    ]

def translate_ddl(model) -> DdlDocument:
    """The relational image of model; raises IntegrityFailed unless the model checks clean."""
    report = check_integrity(model)
    if not report.passed:
        raise IntegrityFailed(report)
    tables = []
    for name in model.domains:
        tables.extend(domain_tables(model, name))
    for obj in objects_in_order(model):
        tables.extend(object_tables(model, obj))
    logger.debug("ddl_translated", tables=len(tables))
    return DdlDocument(tuple(tables))

# -- RENDERING --

def render_table(table: Table) -> str:
    lines = []
    for column in table.columns:
        null = '' if column.nullable else ' NOT NULL'
        lines.append(f"{column.name} {column.type}{null}")
    lines.append(f"CONSTRAINT {table.primary_key_name} PRIMARY KEY ({', '.join(table.primary_key)})")
    for index, columns in enumerate(table.unique, 1):
        lines.append(f"CONSTRAINT {table.name}_uq{index} UNIQUE ({', '.join(columns)})")
    for fk in table.foreign_keys:
        lines.append(f"CONSTRAINT {fk.name} FOREIGN KEY ({', '.join(fk.columns)}) "
                     f"REFERENCES {fk.table} ({', '.join(fk.references)})")
    body = ',\n'.join(INDENT + line for line in lines)
    return f"CREATE TABLE {table.name} (\n{body}\n);\n"

def render_ddl(doc: DdlDocument) -> str:
    """Statements separated by one blank line; the empty document renders as ''."""
    return '\n'.join(render_table(table) for table in doc.tables)

# -- PARSING --

STATEMENT = re.compile(r'CREATE TABLE (\w+) \(\n(.*?)\n\);\n', re.DOTALL)
COLUMN = re.compile(r'^(\w+) (TEXT|BIGINT|BOOLEAN)( NOT NULL)?$')
PRIMARY_KEY = re.compile(r'^CONSTRAINT (\w+) PRIMARY KEY \(([\w, ]+)\)$')
UNIQUE = re.compile(r'^CONSTRAINT (\w+) UNIQUE \(([\w, ]+)\)$')
FOREIGN_KEY = re.compile(r'^CONSTRAINT (\w+) FOREIGN KEY \(([\w, ]+)\) REFERENCES (\w+) \(([\w, ]+)\)$')


def _names(text: str) -> tuple:
    return tuple(name.strip() for name in text.split(','))

def _position(text: str, offset: int) -> Position:
    line = text.count('\n', 0, offset) + 1
    return Position(line, offset - (text.rfind('\n', 0, offset) + 1) + 1)

def parse_ddl(text: str) -> DdlDocument:
    """Read back the output of render_ddl; anything else is a ParseError."""
    tables = []
    offset = 0
    while offset < len(text):
        if text[offset] == '\n':
            offset += 1
            continue
        match = STATEMENT.match(text, offset)
        if match is None:
            raise ParseError("expected CREATE TABLE statement", _position(text, offset), {'CREATE TABLE'})
        tables.append(_parse_table(text, match))
        offset = match.end()
    return DdlDocument(tuple(tables))

def _parse_table(text: str, match) -> Table:
    name, body = match.groups()
    columns, primary_key, unique, foreign_keys = [], None, [], []
    line_offset = match.start(2)
    for raw in body.split('\n'):
        line = raw.strip().removesuffix(',')
        if found := COLUMN.match(line):
            columns.append(Column(found.group(1), found.group(2), nullable=not found.group(3)))
        elif found := PRIMARY_KEY.match(line):
            primary_key = _names(found.group(2))
        elif found := UNIQUE.match(line):
            unique.append(_names(found.group(2)))
        elif found := FOREIGN_KEY.match(line):
            foreign_keys.append(ForeignKey(found.group(1), _names(found.group(2)),
                                           found.group(3), _names(found.group(4))))
        else:
            raise ParseError(f"unrecognized line {line!r} in table '{name}'",
                             _position(text, line_offset), {'column', 'CONSTRAINT'})
        line_offset += len(raw) + 1
    if primary_key is None:
        raise ParseError(f"table '{name}' has no primary key", _position(text, match.start()), {'PRIMARY KEY'})
    return Table(name, tuple(columns), primary_key, tuple(unique), tuple(foreign_keys))

# -- VERIFICATION --

def verify_ddl(doc: DdlDocument) -> list:
    """Duplicate declarations and broken internal references; an empty list means consistent."""
    problems = []
    declared = {}
    for table in doc.tables:
        if table.name in declared:
            problems.append(f"table '{table.name}' is declared twice")
        names = table.column_names()
        for column in sorted({c for c in names if names.count(c) > 1}):
            problems.append(f"{table.name}: column '{column}' is declared twice")
        for column in table.primary_key + tuple(c for cols in table.unique for c in cols):
            if column not in names:
                problems.append(f"{table.name}: key column '{column}' is not declared")
        for fk in table.foreign_keys:
            for column in fk.columns:
                if column not in names:
                    problems.append(f"{fk.name}: column '{column}' is not declared")
            target = declared.get(fk.table)
            if target is None and fk.table == table.name:
                target = table
            if target is None:
                problems.append(f"{fk.name}: '{fk.table}' is not declared before '{table.name}'")
            elif fk.references != target.primary_key:
                problems.append(f"{fk.name}: does not reference the primary key of '{fk.table}'")
        declared.setdefault(table.name, table)
    return problems
