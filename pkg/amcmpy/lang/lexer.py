if __loader__.name == '__main__':
    import sys
    sys.path.append(sys.path[0] + '/../..')

import re
from bisect import bisect_right

from amcmpy.constants.project import (
    KEYWORDS, BOOL_LITERALS, PUNCTUATION,
    MARKUP_OPEN, MARKUP_CLOSE, COMMENT,
    INT_MIN, INT_MAX
)
from amcmpy.core.exceptions import LexError
from amcmpy.core.values import Text, Int, Bool, Markup
from amcmpy.lang.tokens import Position, Token, TokenKind

IDENTIFIER = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')
INTEGER = re.compile(r'-?[0-9]+')
WHITESPACE = re.compile(r'[ \t\r\n\f\v]+')
ESCAPES = {'"': '"', '\\': '\\', 'n': '\n', 't': '\t'}
PUNCT_BY_LENGTH = sorted(PUNCTUATION, key=len, reverse=True)


class Lexer:
    """Splits source text into tokens.

    Whitespace and ``#`` comments are skipped; every other character belongs
    to exactly one token, and each token keeps its exact source text.
    """

    def __init__(self, source: str, file: str = None) -> None:
        self.source = source
        self.file = file
        self.line_starts = [0] + [m.end() for m in re.finditer('\n', source)]

    def position(self, offset: int) -> Position:
        line = bisect_right(self.line_starts, offset)
        return Position(line, offset - self.line_starts[line - 1] + 1)

    def error(self, message: str, offset: int) -> LexError:
        return LexError(message, self.position(offset), file=self.file)

    def tokens(self) -> list:
        tokens = []
        offset = 0
        size = len(self.source)
        while offset < size:
            char = self.source[offset]
            space = WHITESPACE.match(self.source, offset)
            if space:
                offset = space.end()
                continue
            if char == COMMENT:
                newline = self.source.find('\n', offset)
                offset = size if newline == -1 else newline
                continue
            token = self._next(offset)
            tokens.append(token)
            offset = token.end
        return tokens

    def _next(self, offset: int) -> Token:
        source = self.source
        if source.startswith(MARKUP_OPEN, offset):
            return self._markup(offset)
        char = source[offset]
        if char == '"':
            return self._string(offset)
        number = INTEGER.match(source, offset)
        if number:
            return self._integer(offset, number.group())
        word = IDENTIFIER.match(source, offset)
        if word:
            return self._word(offset, word.group())
        for punct in PUNCT_BY_LENGTH:
            if source.startswith(punct, offset):
                return Token(TokenKind.PUNCTUATION, punct, self.position(offset), offset)
        raise self.error(f"illegal character {char!r}", offset)

    def _make(self, kind: TokenKind, start: int, end: int, value=None) -> Token:
        return Token(kind, self.source[start:end], self.position(start), start, value)

    def _markup(self, start: int) -> Token:
        body_start = start + len(MARKUP_OPEN)
        close = self.source.find(MARKUP_CLOSE, body_start)
        if close == -1:
            raise self.error("unterminated markup literal", start)
        # the last three of a run of '>' close the literal
        while self.source.startswith('>', close + len(MARKUP_CLOSE)):
            close += 1
        end = close + len(MARKUP_CLOSE)
        return self._make(TokenKind.LITERAL, start, end, Markup(self.source[body_start:close]))

    def _string(self, start: int) -> Token:
        chars = []
        offset = start + 1
        while offset < len(self.source):
            char = self.source[offset]
            if char == '"':
                return self._make(TokenKind.LITERAL, start, offset + 1, Text(''.join(chars)))
            if char == '\n':
                break
            if char == '\\':
                escaped = self.source[offset + 1:offset + 2]
                if escaped not in ESCAPES:
                    raise self.error(f"unknown escape '\\{escaped}'", offset)
                chars.append(ESCAPES[escaped])
                offset += 2
                continue
            chars.append(char)
            offset += 1
        raise self.error("unterminated string", start)

    def _integer(self, start: int, text: str) -> Token:
        number = int(text)
        if not INT_MIN <= number <= INT_MAX:
            raise self.error(f"integer {text} does not fit in 64 bits", start)
        return self._make(TokenKind.LITERAL, start, start + len(text), Int(number))

    def _word(self, start: int, text: str) -> Token:
        end = start + len(text)
        if text in BOOL_LITERALS:
            return self._make(TokenKind.LITERAL, start, end, Bool(BOOL_LITERALS[text]))
        if text in KEYWORDS:
            return self._make(TokenKind.KEYWORD, start, end)
        return self._make(TokenKind.IDENTIFIER, start, end)


def tokenize(source: str, file: str = None) -> list:
    """Split source into a list of tokens, raising LexError on bad input."""
    return Lexer(source, file).tokens()

def end_position(source: str) -> Position:
    """Position just past the last character of source."""
    lexer = Lexer(source)
    return lexer.position(len(source))


if __name__ == '__main__':
    for token in tokenize('title = "Hi"; # greeting\nemit content("news/a");'):
        print(token.position, token)
