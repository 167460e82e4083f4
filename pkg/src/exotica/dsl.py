"""Construction-script language: tokenizer, AST, parser, serializer.

Line-oriented grammar with `#` comments:

    let NAME = EXPR
    assert EXPR (== EXPR)? (budget INT)? (cite STRING)?

Expressions are identifiers, integers, strings, booleans, lists, function
calls, and three literal blocks: `presentation { gens: ...; rels: ...; }`,
`glue { w -> w', ...; meridian -> w; }` (both in the shared text form), and
`invariants { key: value, ... }`.  Newlines end statements except inside
brackets or braces.  Every node carries its source position.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from .constructions import bundled_names
from .presentations import GluingMap, Presentation
from .textform import (
    TextFormError,
    format_gluing,
    format_presentation,
    parse_gluing,
    parse_presentation,
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


# -- tokens ---------------------------------------------------------------------

_PUNCT = ("==", "(", ")", "[", "]", "{", "}", ",", ":", "=")
_BLOCK_HEADS = ("presentation", "glue")


@dataclass(frozen=True)
class Token:
    kind: str  # NAME INT STRING BLOCK NEWLINE EOF or a punctuation literal
    value: object
    line: int
    col: int
    start: int = 0  # absolute source offsets, for statement text capture
    end: int = 0


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos, line, col = 0, 1, 1
    depth = 0
    expect_block = False

    def error(message: str) -> ParseError:
        return ParseError(message, line, col)

    def emit(kind: str, value, start: int, end: int) -> None:
        tokens.append(Token(kind, value, line, col, start, end))

    while pos < len(text):
        ch = text[pos]
        if ch == "\n":
            if depth == 0 and tokens and tokens[-1].kind != "NEWLINE":
                emit("NEWLINE", None, pos, pos)
            pos += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            pos += 1
            col += 1
            continue
        if ch == "#":
            while pos < len(text) and text[pos] != "\n":
                pos += 1
            continue
        if ch == "{" and expect_block:
            end = text.find("}", pos)
            if end < 0:
                raise error("unterminated block: missing `}`")
            raw = text[pos + 1 : end]
            emit("BLOCK", raw, pos, end + 1)
            line += raw.count("\n")
            col = len(raw) - raw.rfind("\n") if "\n" in raw else col + len(raw) + 2
            pos = end + 1
            expect_block = False
            continue
        expect_block = False
        if ch == '"':
            end = pos + 1
            while end < len(text) and text[end] not in '"\n':
                end += 1
            if end >= len(text) or text[end] != '"':
                raise error("unterminated string")
            emit("STRING", text[pos + 1 : end], pos, end + 1)
            col += end - pos + 1
            pos = end + 1
            continue
        if ch.isdigit() or (ch == "-" and pos + 1 < len(text) and text[pos + 1].isdigit()):
            end = pos + 1
            while end < len(text) and text[end].isdigit():
                end += 1
            emit("INT", int(text[pos:end]), pos, end)
            col += end - pos
            pos = end
            continue
        if ch.isalpha() or ch == "_":
            end = pos
            while end < len(text) and (text[end].isalnum() or text[end] == "_"):
                end += 1
            name = text[pos:end]
            emit("NAME", name, pos, end)
            if name in _BLOCK_HEADS:
                expect_block = True
            col += end - pos
            pos = end
            continue
        for punct in _PUNCT:
            if text.startswith(punct, pos):
                if punct in "([{":
                    depth += 1
                elif punct in ")]}":
                    depth = max(0, depth - 1)
                emit(punct, punct, pos, pos + len(punct))
                pos += len(punct)
                col += len(punct)
                break
        else:
            raise error(f"unexpected character {ch!r}")
    tokens.append(Token("NEWLINE", None, line, col, len(text), len(text)))
    tokens.append(Token("EOF", None, line, col, len(text), len(text)))
    return tokens


# -- AST ------------------------------------------------------------------------


@dataclass(frozen=True)
class Node:
    line: int = field(default=0, kw_only=True, compare=False)
    col: int = field(default=0, kw_only=True, compare=False)


@dataclass(frozen=True)
class IntLit(Node):
    value: int


@dataclass(frozen=True)
class StrLit(Node):
    value: str


@dataclass(frozen=True)
class BoolLit(Node):
    value: bool


@dataclass(frozen=True)
class NameRef(Node):
    name: str


@dataclass(frozen=True)
class ListLit(Node):
    items: tuple


@dataclass(frozen=True)
class Call(Node):
    func: str
    args: tuple


@dataclass(frozen=True)
class PresentationLit(Node):
    value: Presentation


@dataclass(frozen=True)
class GlueLit(Node):
    value: GluingMap


@dataclass(frozen=True)
class RecordLit(Node):
    entries: tuple  # of (name, expr)


@dataclass(frozen=True)
class Let(Node):
    name: str
    expr: object
    text: str = field(default="", compare=False)


@dataclass(frozen=True)
class Assert(Node):
    expr: object
    expected: object | None = None
    budget: int | None = None
    cite: str | None = None
    text: str = field(default="", compare=False)


@dataclass(frozen=True)
class Script:
    statements: tuple
    source_name: str = field(default="<script>", compare=False)


# -- parser ---------------------------------------------------------------------

_KEYWORDS = {"let", "assert", "budget", "cite", "true", "false", "presentation",
             "glue", "invariants"}


class _Parser:
    def __init__(self, tokens: list[Token], source: str, source_name: str):
        self.tokens = tokens
        self.source = source
        self.source_name = source_name
        self.at = 0
        self.defined: set[str] = set()
        self.known = set(bundled_names())

    def peek(self) -> Token:
        return self.tokens[self.at]

    def advance(self) -> Token:
        tok = self.tokens[self.at]
        self.at += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind}, found {tok.kind}", tok.line, tok.col)
        return self.advance()

    def skip_newlines(self) -> None:
        while self.peek().kind == "NEWLINE":
            self.advance()

    def statement_text(self, start: Token, end_at: int | None = None) -> str:
        """Source slice of the current statement, whitespace-collapsed."""
        last = self.tokens[(end_at if end_at is not None else self.at) - 1]
        return " ".join(self.source[start.start : last.end].split())

    def parse(self) -> Script:
        statements = []
        self.skip_newlines()
        while self.peek().kind != "EOF":
            tok = self.peek()
            if tok.kind != "NAME" or tok.value not in ("let", "assert"):
                raise ParseError(
                    f"expected `let` or `assert`, found {tok.value or tok.kind}",
                    tok.line, tok.col,
                )
            if tok.value == "let":
                statements.append(self.parse_let())
            else:
                statements.append(self.parse_assert())
            tok2 = self.peek()
            if tok2.kind not in ("NEWLINE", "EOF"):
                raise ParseError(
                    f"expected end of statement, found {tok2.value or tok2.kind}",
                    tok2.line, tok2.col,
                )
            self.skip_newlines()
        return Script(tuple(statements), self.source_name)

    def parse_let(self) -> Let:
        start = self.advance()  # let
        name_tok = self.expect("NAME")
        name = name_tok.value
        if name in _KEYWORDS:
            raise ParseError(f"{name!r} is a keyword", name_tok.line, name_tok.col)
        if name in self.defined:
            raise ParseError(f"duplicate name {name!r}", name_tok.line, name_tok.col)
        self.expect("=")
        expr = self.parse_expr()
        self.defined.add(name)
        return Let(name, expr, self.statement_text(start), line=start.line, col=start.col)

    def parse_assert(self) -> Assert:
        start = self.advance()  # assert
        expr = self.parse_expr()
        expected = None
        budget = None
        cite = None
        if self.peek().kind == "==":
            self.advance()
            expected = self.parse_expr()
        if self.peek().kind == "NAME" and self.peek().value == "budget":
            self.advance()
            tok = self.expect("INT")
            budget = tok.value
        before_cite = self.at  # the cite clause is metadata, not assertion text
        if self.peek().kind == "NAME" and self.peek().value == "cite":
            self.advance()
            tok = self.expect("STRING")
            cite = tok.value
        return Assert(
            expr, expected, budget, cite, self.statement_text(start, before_cite),
            line=start.line, col=start.col,
        )

    def parse_expr(self):
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            return IntLit(tok.value, line=tok.line, col=tok.col)
        if tok.kind == "STRING":
            self.advance()
            return StrLit(tok.value, line=tok.line, col=tok.col)
        if tok.kind == "[":
            self.advance()
            items = []
            while self.peek().kind != "]":
                items.append(self.parse_expr())
                if self.peek().kind == ",":
                    self.advance()
            self.expect("]")
            return ListLit(tuple(items), line=tok.line, col=tok.col)
        if tok.kind == "NAME":
            if tok.value == "true":
                self.advance()
                return BoolLit(True, line=tok.line, col=tok.col)
            if tok.value == "false":
                self.advance()
                return BoolLit(False, line=tok.line, col=tok.col)
            if tok.value == "presentation":
                self.advance()
                block = self.expect("BLOCK")
                try:
                    value = parse_presentation(block.value)
                except TextFormError as exc:
                    raise ParseError(str(exc), block.line, block.col)
                return PresentationLit(value, line=tok.line, col=tok.col)
            if tok.value == "glue":
                self.advance()
                block = self.expect("BLOCK")
                try:
                    value = parse_gluing(block.value)
                except TextFormError as exc:
                    raise ParseError(str(exc), block.line, block.col)
                return GlueLit(value, line=tok.line, col=tok.col)
            if tok.value == "invariants":
                self.advance()
                return self.parse_record(tok)
            return self.parse_name_or_call()
        raise ParseError(f"expected an expression, found {tok.value or tok.kind}",
                         tok.line, tok.col)

    def parse_name_or_call(self):
        tok = self.advance()
        name = tok.value
        if self.peek().kind == "(":
            self.advance()
            args = []
            while self.peek().kind != ")":
                self.skip_newlines()
                args.append(self.parse_expr())
                self.skip_newlines()
                if self.peek().kind == ",":
                    self.advance()
            self.expect(")")
            return Call(name, tuple(args), line=tok.line, col=tok.col)
        if name not in self.defined and name not in self.known:
            raise ParseError(f"unresolved reference {name!r}", tok.line, tok.col)
        return NameRef(name, line=tok.line, col=tok.col)

    def parse_record(self, head: Token) -> RecordLit:
        self.expect("{")
        entries = []
        seen = set()
        self.skip_newlines()
        while self.peek().kind != "}":
            key_tok = self.expect("NAME")
            if key_tok.value in seen:
                raise ParseError(f"duplicate record key {key_tok.value!r}",
                                 key_tok.line, key_tok.col)
            seen.add(key_tok.value)
            self.expect(":")
            if (
                self.peek().kind == "NAME" and self.peek().value not in ("true", "false")
            ) or self.peek().kind == "STRING":
                # bare identifiers in record values read as strings (odd, even, flags)
                value_tok = self.advance()
                value = StrLit(value_tok.value, line=value_tok.line, col=value_tok.col)
            elif self.peek().kind == "[":
                open_tok = self.advance()
                items = []
                while self.peek().kind != "]":
                    item_tok = self.peek()
                    if item_tok.kind not in ("NAME", "STRING"):
                        raise ParseError("expected a flag name", item_tok.line, item_tok.col)
                    self.advance()
                    items.append(StrLit(item_tok.value, line=item_tok.line, col=item_tok.col))
                    if self.peek().kind == ",":
                        self.advance()
                self.expect("]")
                value = ListLit(tuple(items), line=open_tok.line, col=open_tok.col)
            else:
                value = self.parse_expr()
            entries.append((key_tok.value, value))
            self.skip_newlines()
            if self.peek().kind == ",":
                self.advance()
                self.skip_newlines()
        self.expect("}")
        return RecordLit(tuple(entries), line=head.line, col=head.col)


def parse(text: str, source_name: str = "<script>") -> Script:
    tokens = tokenize(text)
    return _Parser(tokens, text, source_name).parse()


# -- serializer -------------------------------------------------------------------


def render_expr(node) -> str:
    if isinstance(node, IntLit):
        return str(node.value)
    if isinstance(node, StrLit):
        return f'"{node.value}"'
    if isinstance(node, BoolLit):
        return "true" if node.value else "false"
    if isinstance(node, NameRef):
        return node.name
    if isinstance(node, ListLit):
        return "[" + ", ".join(render_expr(i) for i in node.items) + "]"
    if isinstance(node, Call):
        return f"{node.func}(" + ", ".join(render_expr(a) for a in node.args) + ")"
    if isinstance(node, PresentationLit):
        return f"presentation {{ {format_presentation(node.value)} }}"
    if isinstance(node, GlueLit):
        return f"glue {{ {format_gluing(node.value)} }}"
    if isinstance(node, RecordLit):
        inner = ", ".join(f"{k}: {render_expr(v)}" for k, v in node.entries)
        return f"invariants {{ {inner} }}"
    raise TypeError(f"cannot render {type(node).__name__}")


def serialize(script: Script) -> str:
    lines = []
    for st in script.statements:
        if isinstance(st, Let):
            lines.append(f"let {st.name} = {render_expr(st.expr)}")
        elif isinstance(st, Assert):
            line = f"assert {render_expr(st.expr)}"
            if st.expected is not None:
                line += f" == {render_expr(st.expected)}"
            if st.budget is not None:
                line += f" budget {st.budget}"
            if st.cite is not None:
                line += f' cite "{st.cite}"'
            lines.append(line)
        else:
            raise TypeError(f"cannot render statement {type(st).__name__}")
    return "\n".join(lines) + "\n"
