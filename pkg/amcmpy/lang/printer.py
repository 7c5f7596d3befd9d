"""Canonical source text for programs and literals."""

from amcmpy.constants.project import MARKUP_OPEN, MARKUP_CLOSE
from amcmpy.core.values import Text, Int, Bool, Markup, ListValue, RecordValue
from amcmpy.lang import ast

INDENT = '    '
STRING_ESCAPES = {'\\': '\\\\', '"': '\\"', '\n': '\\n', '\t': '\\t'}


def literal_source(value) -> str:
    """Source text that lexes back to the same literal."""
    if isinstance(value, Text):
        return '"' + ''.join(STRING_ESCAPES.get(char, char) for char in value.value) + '"'
    if isinstance(value, Bool):
        return 'true' if value.value else 'false'
    if isinstance(value, Int):
        return str(value.value)
    if isinstance(value, Markup):
        if MARKUP_CLOSE in value.value:
            raise ValueError(f"markup containing '{MARKUP_CLOSE}' has no literal form")
        return f"{MARKUP_OPEN}{value.value}{MARKUP_CLOSE}"
    raise ValueError(f"{type(value).__name__} values have no literal form")

def value_source(value) -> str:
    """Display form of any value; literal syntax where one exists."""
    if isinstance(value, ListValue):
        return '[' + ', '.join(value_source(item) for item in value.items) + ']'
    if isinstance(value, RecordValue):
        return '{' + ', '.join(f"{name}: {value_source(field)}" for name, field in value.fields) + '}'
    return literal_source(value)

def expression_source(expr) -> str:
    if isinstance(expr, ast.Lit):
        return literal_source(expr.value)
    if isinstance(expr, ast.Ident):
        return expr.name
    if isinstance(expr, ast.ContentRef):
        return f"content({literal_source(Text(expr.path))})"
    if isinstance(expr, ast.Read):
        return 'read()'
    if isinstance(expr, ast.Eq):
        return f"{expression_source(expr.left)} == {expression_source(expr.right)}"
    if isinstance(expr, ast.Neq):
        return f"{expression_source(expr.left)} != {expression_source(expr.right)}"
    raise TypeError(f"not an expression: {expr!r}")

def command_lines(com, depth: int = 0) -> list:
    pad = INDENT * depth
    if isinstance(com, ast.Skip):
        return []
    if isinstance(com, ast.Seq):
        return command_lines(com.first, depth) + command_lines(com.rest, depth)
    if isinstance(com, ast.Assign):
        return [f"{pad}{com.name} = {expression_source(com.expr)};"]
    if isinstance(com, ast.Emit):
        return [f"{pad}emit {expression_source(com.expr)};"]
    if isinstance(com, ast.If):
        lines = [f"{pad}if ({expression_source(com.cond)}) {{"]
        lines += command_lines(com.then, depth + 1)
        if com.orelse is None:
            lines.append(f"{pad}}}")
        else:
            lines.append(f"{pad}}} else {{")
            lines += command_lines(com.orelse, depth + 1)
            lines.append(f"{pad}}}")
        return lines
    raise TypeError(f"not a command: {com!r}")

def pretty_print(com, depth: int = 0) -> str:
    """Canonical program text, one command per line, newline-terminated."""
    lines = command_lines(com, depth)
    return ''.join(line + '\n' for line in lines)
