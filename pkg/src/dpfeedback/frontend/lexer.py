"""Tokenizer for the mini-C subset."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParseError

KEYWORDS = {
    "int", "bool", "void", "if", "else", "for", "while", "return",
    "scanf", "printf", "true", "false",
}

# Longest first so that '<=' wins over '<'.
OPERATORS = [
    "<<", ">>",  # recognized so we can reject them with a clear message
    "==", "!=", "<=", ">=", "&&", "||", "++", "--",
    "+=", "-=", "*=", "/=", "%=",
    "+", "-", "*", "/", "%", "<", ">", "=", "!", "?", ":",
    "(", ")", "[", "]", "{", "}", ",", ";", "&",
]


@dataclass(frozen=True)
class Token:
    kind: str    # "ident" | "int" | "string" | "op" | "kw" | "eof"
    text: str
    line: int
    col: int

    def __repr__(self):
        return f"{self.kind}:{self.text!r}@{self.line}:{self.col}"


def tokenize(source: str) -> list:
    toks = []
    i = 0
    line, col = 1, 1
    n = len(source)

    def advance(k=1):
        nonlocal i, line, col
        for _ in range(k):
            if i < n and source[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        c = source[i]
        if c in " \t\r\n":
            advance()
            continue
        if source.startswith("//", i):
            while i < n and source[i] != "\n":
                advance()
            continue
        if source.startswith("/*", i):
            start_line, start_col = line, col
            advance(2)
            while i < n and not source.startswith("*/", i):
                advance()
            if i >= n:
                raise ParseError("unterminated comment", start_line, start_col)
            advance(2)
            continue
        if c == '"':
            start_line, start_col = line, col
            advance()
            buf = []
            while i < n and source[i] != '"':
                if source[i] == "\\" and i + 1 < n:
                    buf.append(source[i:i + 2])
                    advance(2)
                else:
                    buf.append(source[i])
                    advance()
            if i >= n:
                raise ParseError("unterminated string literal", start_line, start_col)
            advance()
            toks.append(Token("string", "".join(buf), start_line, start_col))
            continue
        if c.isdigit():
            start_line, start_col = line, col
            j = i
            while j < n and source[j].isdigit():
                j += 1
            toks.append(Token("int", source[i:j], start_line, start_col))
            advance(j - i)
            continue
        if c.isalpha() or c == "_":
            start_line, start_col = line, col
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            text = source[i:j]
            kind = "kw" if text in KEYWORDS else "ident"
            toks.append(Token(kind, text, start_line, start_col))
            advance(j - i)
            continue
        for op in OPERATORS:
            if source.startswith(op, i):
                toks.append(Token("op", op, line, col))
                advance(len(op))
                break
        else:
            raise ParseError(f"unexpected character {c!r}", line, col)
    toks.append(Token("eof", "", line, col))
    return toks
