"""Concrete syntax for the While language.

Grammar (';' and '&&' associate to the right, '+' to the left):

    com    ::= seq
    seq    ::= atom (";" seq)?
    atom   ::= "SKIP"
             | ident ":=" aexp
             | "IF" bexp "THEN" com "ELSE" com "FI"
             | "WHILE" bexp "DO" com "OD"
             | "(" com ")"
    bexp   ::= bconj ("&&" bexp)?
    bconj  ::= "!" bconj | "true" | "false"
             | aexp "<" aexp | "(" bexp ")"
    aexp   ::= term ("+" term)*
    term   ::= int-literal | ident | "(" aexp ")"

Keywords (reserved, may not be identifiers): SKIP IF THEN ELSE FI WHILE
DO OD true false.  Identifiers match [a-zA-Z][a-zA-Z0-9_]*.  Integer
literals are an optional '-' immediately followed by digits.  Line
comments run from '--' to end of line.  Whitespace between tokens is
insignificant.

A '(' at the start of a bconj is ambiguous: it may open a parenthesized
boolean or the left operand of a comparison.  The parser first attempts
`aexp "<" aexp` and falls back to `"(" bexp ")"`, reporting whichever
attempt progressed further when both fail.
"""

from __future__ import annotations

from dataclasses import dataclass

from .imp import Aexp, And, Bc, Bexp, Com, If, Less, N, Not, Plus, Seq, Set, Skip, V, While

KEYWORDS = frozenset({"SKIP", "IF", "THEN", "ELSE", "FI", "WHILE", "DO", "OD", "true", "false"})

_SYMBOLS = (":=", "&&", ";", "+", "<", "!", "(", ")")


class ParseError(Exception):
    """Lexical or syntactic violation, with a 1-based source position."""

    def __init__(self, line: int, col: int, message: str, expected: tuple[str, ...] = ()):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col
        self.message = message
        self.expected = list(expected)

    @property
    def position(self) -> tuple[int, int]:
        return (self.line, self.col)


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str  # "ident", "int", "kw", "sym", "eof"
    text: str
    line: int
    col: int


def _lex(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    line = 1
    col = 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if text.startswith("--", i):
            while i < n and text[i] != "\n":
                i += 1
                col += 1
            continue
        start_line, start_col = line, col
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = "kw" if word in KEYWORDS else "ident"
            tokens.append(_Token(kind, word, start_line, start_col))
            col += j - i
            i = j
            continue
        if ch.isdigit() or (ch == "-" and i + 1 < n and text[i + 1].isdigit()):
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], start_line, start_col))
            col += j - i
            i = j
            continue
        for sym in _SYMBOLS:
            if text.startswith(sym, i):
                tokens.append(_Token("sym", sym, start_line, start_col))
                i += len(sym)
                col += len(sym)
                break
        else:
            raise ParseError(line, col, f"unexpected character {ch!r}")
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def cur(self) -> _Token:
        return self.tokens[self.pos]

    def _error(self, message: str, expected: tuple[str, ...] = ()) -> ParseError:
        tok = self.cur
        return ParseError(tok.line, tok.col, message, expected)

    def at_sym(self, sym: str) -> bool:
        return self.cur.kind == "sym" and self.cur.text == sym

    def at_kw(self, kw: str) -> bool:
        return self.cur.kind == "kw" and self.cur.text == kw

    def take(self) -> _Token:
        tok = self.cur
        self.pos += 1
        return tok

    def expect_sym(self, sym: str) -> None:
        if not self.at_sym(sym):
            raise self._error(f"expected {sym!r}", (f"'{sym}'",))
        self.pos += 1

    def expect_kw(self, kw: str) -> None:
        if not self.at_kw(kw):
            raise self._error(f"expected keyword {kw}", (kw,))
        self.pos += 1

    def expect_eof(self) -> None:
        if self.cur.kind != "eof":
            raise self._error(f"unexpected input after complete phrase: {self.cur.text!r}", ("end of input",))

    # --- arithmetic expressions ---

    def aexp(self) -> Aexp:
        node = self.term()
        while self.at_sym("+"):
            self.pos += 1
            node = Plus(node, self.term())
        return node

    def term(self) -> Aexp:
        tok = self.cur
        if tok.kind == "int":
            self.pos += 1
            return N(int(tok.text))
        if tok.kind == "ident":
            self.pos += 1
            return V(tok.text)
        if self.at_sym("("):
            self.pos += 1
            node = self.aexp()
            self.expect_sym(")")
            return node
        raise self._error(
            "expected arithmetic expression",
            ("integer literal", "identifier", "'('"),
        )

    # --- boolean expressions ---

    def bexp(self) -> Bexp:
        node = self.bconj()
        if self.at_sym("&&"):
            self.pos += 1
            return And(node, self.bexp())
        return node

    def bconj(self) -> Bexp:
        if self.at_sym("!"):
            self.pos += 1
            return Not(self.bconj())
        if self.at_kw("true"):
            self.pos += 1
            return Bc(True)
        if self.at_kw("false"):
            self.pos += 1
            return Bc(False)
        if self.at_sym("("):
            # Ambiguous: comparison whose left side is parenthesized, or a
            # parenthesized boolean.  Try the comparison first.
            save = self.pos
            try:
                return self._comparison()
            except ParseError as cmp_err:
                cmp_pos = self.pos
                self.pos = save
                try:
                    self.pos += 1  # '('
                    node = self.bexp()
                    self.expect_sym(")")
                    return node
                except ParseError as par_err:
                    if self.pos >= cmp_pos:
                        raise par_err
                    self.pos = cmp_pos
                    raise cmp_err
        return self._comparison()

    def _comparison(self) -> Bexp:
        if self.cur.kind not in ("int", "ident") and not self.at_sym("("):
            raise self._error(
                "expected boolean expression",
                ("'!'", "true", "false", "comparison", "'('"),
            )
        left = self.aexp()
        self.expect_sym("<")
        return Less(left, self.aexp())

    # --- commands ---

    def com(self) -> Com:
        node = self.atom()
        if self.at_sym(";"):
            self.pos += 1
            return Seq(node, self.com())
        return node

    def atom(self) -> Com:
        tok = self.cur
        if self.at_kw("SKIP"):
            self.pos += 1
            return Skip()
        if tok.kind == "ident":
            self.pos += 1
            self.expect_sym(":=")
            return Set(tok.text, self.aexp())
        if self.at_kw("IF"):
            self.pos += 1
            guard = self.bexp()
            self.expect_kw("THEN")
            then_branch = self.com()
            self.expect_kw("ELSE")
            else_branch = self.com()
            self.expect_kw("FI")
            return If(guard, then_branch, else_branch)
        if self.at_kw("WHILE"):
            self.pos += 1
            guard = self.bexp()
            self.expect_kw("DO")
            body = self.com()
            self.expect_kw("OD")
            return While(guard, body)
        if self.at_sym("("):
            self.pos += 1
            node = self.com()
            self.expect_sym(")")
            return node
        raise self._error(
            "expected command",
            ("SKIP", "assignment", "IF", "WHILE", "'('"),
        )


def parse_com(text: str) -> Com:
    """Parse a complete command; raises ParseError on any violation."""
    p = _Parser(_lex(text))
    node = p.com()
    p.expect_eof()
    return node


def parse_aexp(text: str) -> Aexp:
    """Parse a complete arithmetic expression."""
    p = _Parser(_lex(text))
    node = p.aexp()
    p.expect_eof()
    return node


def parse_bexp(text: str) -> Bexp:
    """Parse a complete boolean expression."""
    p = _Parser(_lex(text))
    node = p.bexp()
    p.expect_eof()
    return node
