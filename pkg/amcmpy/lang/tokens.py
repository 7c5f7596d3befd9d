from dataclasses import dataclass, field
from enum import Enum


@dataclass(frozen=True, slots=True, order=True)
class Position:
    """A 1-based source position."""
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class TokenKind(Enum):
    IDENTIFIER = 'identifier'
    LITERAL = 'literal'
    KEYWORD = 'keyword'
    PUNCTUATION = 'punctuation'


@dataclass(frozen=True, slots=True)
class Token:
    kind: TokenKind
    text: str
    position: Position
    offset: int
    value: object = field(default=None, compare=False)

    @property
    def end(self) -> int:
        return self.offset + len(self.text)

    def is_punct(self, text: str) -> bool:
        return self.kind is TokenKind.PUNCTUATION and self.text == text

    def is_keyword(self, text: str) -> bool:
        return self.kind is TokenKind.KEYWORD and self.text == text

    def is_word(self, text: str) -> bool:
        """True for an identifier with this exact text (a soft keyword)."""
        return self.kind is TokenKind.IDENTIFIER and self.text == text

    def __str__(self) -> str:
        return f"{self.kind.value}({self.text})"
