"""Recursive-descent parser for binding programs.

Grammar::

    program := com*
    com     := IDENT "=" exp ";"
             | "if" "(" exp ")" block ("else" block)?
             | "emit" exp ";"
    block   := "{" com+ "}"
    exp     := atom (("==" | "!=") atom)?
    atom    := STRING | INT | MARKUP | "true" | "false" | IDENT
             | "content" "(" STRING ")" | "read" "(" ")"
"""

from dataclasses import dataclass

from amcmpy.core.exceptions import ParseError
from amcmpy.core.values import Text
from amcmpy.lang import ast
from amcmpy.lang.lexer import tokenize, end_position
from amcmpy.lang.tokens import Position, Token, TokenKind

COMMAND_START = frozenset({'identifier', 'if', 'emit'})
EXPRESSION_START = frozenset({'literal', 'identifier', 'content', 'read'})


class TokenStream:
    """Cursor over a token list shared by every parser in the project."""

    def __init__(self, tokens: list, source: str = '', file: str = None) -> None:
        self.tokens = tokens
        self.index = 0
        self.file = file
        self.eof = end_position(source) if source else self._after_last()

    def _after_last(self):
        if not self.tokens:
            return Position(1, 1)
        last = self.tokens[-1]
        return Position(last.position.line, last.position.column + len(last.text))

    def peek(self, ahead: int = 0) -> Token | None:
        index = self.index + ahead
        return self.tokens[index] if index < len(self.tokens) else None

    def at_end(self) -> bool:
        return self.index >= len(self.tokens)

    def advance(self) -> Token:
        token = self.peek()
        self.index += 1
        return token

    def position(self):
        token = self.peek()
        return token.position if token else self.eof

    def fail(self, expected, what: str = None) -> ParseError:
        token = self.peek()
        found = f"'{token.text}'" if token else 'end of input'
        expected = sorted(expected)
        message = what or f"expected {' or '.join(expected)}, found {found}"
        return ParseError(message, self.position(), expected, file=self.file)

    def punct(self, text: str) -> Token:
        token = self.peek()
        if token is None or not token.is_punct(text):
            raise self.fail({f"'{text}'"})
        return self.advance()

    def keyword(self, text: str) -> Token:
        token = self.peek()
        if token is None or not token.is_keyword(text):
            raise self.fail({f"'{text}'"})
        return self.advance()

    def word(self, text: str) -> Token:
        token = self.peek()
        if token is None or not token.is_word(text):
            raise self.fail({f"'{text}'"})
        return self.advance()

    def identifier(self) -> Token:
        token = self.peek()
        if token is None or token.kind is not TokenKind.IDENTIFIER:
            raise self.fail({'identifier'})
        return self.advance()

    def string(self) -> Token:
        token = self.peek()
        if token is None or not isinstance(token.value, Text) or token.kind is not TokenKind.LITERAL:
            raise self.fail({'string'})
        return self.advance()

    def literal(self) -> Token:
        token = self.peek()
        if token is None or token.kind is not TokenKind.LITERAL:
            raise self.fail({'literal'})
        return self.advance()

    def check_punct(self, text: str) -> bool:
        token = self.peek()
        return token is not None and token.is_punct(text)

    def check_word(self, text: str) -> bool:
        token = self.peek()
        return token is not None and token.is_word(text)

    def done(self) -> None:
        if not self.at_end():
            raise self.fail({'end of input'})


class ProgramParser:

    def __init__(self, stream: TokenStream) -> None:
        self.stream = stream

    def program(self, closing: str = None) -> object:
        """Parse commands until end of input or the closing punctuation."""
        commands = []
        while not self.stream.at_end() and not self.stream.check_punct(closing or ''):
            commands.append(self.command())
        return ast.sequence(commands)

    def block(self) -> object:
        self.stream.punct('{')
        commands = [self.command()]
        while not self.stream.check_punct('}'):
            if self.stream.at_end():
                raise self.stream.fail({"'}'"} | COMMAND_START)
            commands.append(self.command())
        self.stream.punct('}')
        return ast.sequence(commands)

    def command(self) -> object:
        token = self.stream.peek()
        if token is None:
            raise self.stream.fail(COMMAND_START)
        if token.kind is TokenKind.IDENTIFIER:
            self.stream.advance()
            self.stream.punct('=')
            expr = self.expression()
            self.stream.punct(';')
            return ast.Assign(token.text, expr, token.position)
        if token.is_keyword('emit'):
            self.stream.advance()
            expr = self.expression()
            self.stream.punct(';')
            return ast.Emit(expr, token.position)
        if token.is_keyword('if'):
            self.stream.advance()
            self.stream.punct('(')
            cond = self.expression()
            self.stream.punct(')')
            then = self.block()
            orelse = None
            if self.stream.peek() is not None and self.stream.peek().is_keyword('else'):
                self.stream.advance()
                orelse = self.block()
            return ast.If(cond, then, orelse, token.position)
        raise self.stream.fail(COMMAND_START)

    def expression(self) -> object:
        left = self.atom()
        token = self.stream.peek()
        if token is not None and (token.is_punct('==') or token.is_punct('!=')):
            self.stream.advance()
            right = self.atom()
            node = ast.Eq if token.text == '==' else ast.Neq
            return node(left, right, token.position)
        return left

    def atom(self) -> object:
        token = self.stream.peek()
        if token is None:
            raise self.stream.fail(EXPRESSION_START, "expected expression, found end of input")
        if token.kind is TokenKind.LITERAL:
            self.stream.advance()
            return ast.Lit(token.value, token.position)
        if token.kind is TokenKind.IDENTIFIER:
            self.stream.advance()
            return ast.Ident(token.text, token.position)
        if token.is_keyword('content'):
            self.stream.advance()
            self.stream.punct('(')
            path = self.stream.string()
            self.stream.punct(')')
            if not path.value.value:
                raise ParseError("content path must not be empty", path.position,
                                 {'string'}, file=self.stream.file)
            return ast.ContentRef(path.value.value, token.position)
        if token.is_keyword('read'):
            self.stream.advance()
            self.stream.punct('(')
            self.stream.punct(')')
            return ast.Read(token.position)
        raise self.stream.fail(EXPRESSION_START, f"expected expression, found '{token.text}'")


@dataclass(frozen=True, slots=True)
class Binding:
    """A parsed ``.amp`` file: the template name and its binding program."""
    template: str
    program: object


def parse_program(tokens: list, source: str = '', file: str = None) -> object:
    """Parse a token list into a single command (right-associated Seq)."""
    stream = TokenStream(tokens, source, file)
    program = ProgramParser(stream).program()
    stream.done()
    return program

def parse_source(source: str, file: str = None) -> object:
    return parse_program(tokenize(source, file), source, file)

def parse_binding(source: str, file: str = None) -> Binding:
    """Parse ``bind "<template>" { <program> }``."""
    stream = TokenStream(tokenize(source, file), source, file)
    stream.word('bind')
    name = stream.string().value.value
    stream.punct('{')
    program = ProgramParser(stream).program(closing='}')
    stream.punct('}')
    stream.done()
    return Binding(name, program)

def is_binding_form(tokens: list) -> bool:
    """``bind "<name>"`` opens a binding; ``bind = ...`` is an ordinary assignment."""
    return (
        len(tokens) > 1 and tokens[0].is_word('bind')
        and tokens[1].kind is TokenKind.LITERAL and isinstance(tokens[1].value, Text)
    )

def parse_program_file(source: str, file: str = None) -> object:
    """A bare program, or the program inside a ``bind`` wrapper."""
    tokens = tokenize(source, file)
    if is_binding_form(tokens):
        return parse_binding(source, file).program
    return parse_program(tokens, source, file)

def parse_literal(text: str, file: str = None):
    """A single literal written in program syntax, e.g. ``"x"``, ``3``, ``true``."""
    tokens = tokenize(text, file)
    if len(tokens) != 1 or tokens[0].kind is not TokenKind.LITERAL:
        position = tokens[0].position if tokens else Position(1, 1)
        raise ParseError(f"expected a single literal, found {text.strip()!r}", position, {'literal'}, file=file)
    return tokens[0].value
