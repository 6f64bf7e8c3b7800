"""Parser and renderer for the ``.qrm`` system-description format.

A ``.qrm`` file declares systems of degrees of freedom, growth laws, and
analysis requests, in any order::

    # three continuous DOFs at two action quanta each
    system "three-by-2h" {
      continuous action_h = 2.0 count = 3;
    }

    law "qubit-per-slot" {
      c = 1.0;
      alpha = 1.0;
      beta = 0.0;
    }

    analyze "three-by-2h";
    curve "qubit-per-slot" n = 2 .. 1024;
    hydrogen n_qubits = 100;
    tile [2, 2, 2];

Grammar (LL(1); parsed by hand with single-token lookahead)::

    document   := { statement }
    statement  := system | law | directive
    system     := "system" STRING "{" { dofline } "}"
    dofline    := dof ["count" "=" INT] ";"
    dof        := "qudit" "levels" "=" INT
                | "continuous" ("action_h" "=" NUM
                               | "dq" "=" NUM "dp" "=" NUM "h" "=" NUM)
                | "angular" "dj_hbar" "=" NUM
    law        := "law" STRING "{" "c" "=" NUM ";"
                                   "alpha" "=" NUM ";"
                                   "beta" "=" NUM ";" "}"
    directive  := ("analyze" STRING
                | "curve" STRING "n" "=" INT ".." INT
                | "hydrogen" "n_qubits" "=" INT
                | "tile" "[" INT {"," INT} "]") ";"

``#`` starts a comment that runs to end of line.  Whitespace is
insignificant; LF and CRLF both work.  Strings are double-quoted with no
escape sequences and may not span lines.  INT is a decimal integer; NUM
additionally allows a fraction and exponent.  The ``dq``/``dp``/``h`` form
is a convenience that stores the action dq*dp/h.

System and law names share one namespace (an ``analyze`` directive
addresses either by bare name) and must be unique within a document.

``render`` emits canonical source that parses back to a structurally equal
document; floats are written in shortest round-tripping form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isfinite
from typing import NamedTuple

from .errors import DomainError
from .phase_space import ActionBudget, AngularMomentum, Continuous, DegreeOfFreedom, Qudit, SystemModel
from .scaling import GrowthLaw

__all__ = [
    "ParseError",
    "AnalyzeDirective",
    "CurveDirective",
    "HydrogenDirective",
    "TileDirective",
    "Directive",
    "ModelDocument",
    "parse",
    "render",
]


class ParseError(Exception):
    """A syntax or validity error in ``.qrm`` source, with its position.

    ``line`` and ``column`` are 1-based and point into the source text;
    ``snippet`` is the offending source line.
    """

    def __init__(self, line: int, column: int, message: str, snippet: str = ""):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message
        self.snippet = snippet


@dataclass(frozen=True)
class AnalyzeDirective:
    target: str


@dataclass(frozen=True)
class CurveDirective:
    target: str
    n_start: int
    n_end: int


@dataclass(frozen=True)
class HydrogenDirective:
    n_qubits: int


@dataclass(frozen=True)
class TileDirective:
    dims: tuple[int, ...]


Directive = AnalyzeDirective | CurveDirective | HydrogenDirective | TileDirective


@dataclass(frozen=True)
class ModelDocument:
    """Parsed contents of one ``.qrm`` source: systems, laws, and requests."""

    systems: tuple[SystemModel, ...] = field(default=())
    laws: tuple[tuple[str, GrowthLaw], ...] = field(default=())
    directives: tuple[Directive, ...] = field(default=())

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for name in [system.name for system in self.systems] + [name for name, _ in self.laws]:
            if '"' in name or "\n" in name or "\r" in name:
                raise DomainError(f"name {name!r} cannot be written as a quoted string")
            if name in seen:
                raise DomainError(f"duplicate name {name!r}")
            seen.add(name)


class _Token(NamedTuple):
    kind: str  # ident | string | int | num | punct | eof
    text: str
    value: object
    line: int
    column: int


def _snippet(lines: list[str], line: int) -> str:
    if 1 <= line <= len(lines):
        return lines[line - 1].rstrip("\r")
    return ""


class _Tokenizer:
    def __init__(self, source: str):
        self.source = source
        self.lines = source.split("\n")
        self.pos = 0
        self.line = 1
        self.column = 1

    def error(self, message: str, line: int | None = None, column: int | None = None) -> ParseError:
        line = self.line if line is None else line
        column = self.column if column is None else column
        return ParseError(line, column, message, _snippet(self.lines, line))

    def _advance(self, count: int = 1) -> None:
        for _ in range(count):
            if self.source[self.pos] == "\n":
                self.line += 1
                self.column = 1
            else:
                self.column += 1
            self.pos += 1

    def _peek(self, offset: int = 0) -> str:
        index = self.pos + offset
        return self.source[index] if index < len(self.source) else ""

    def tokens(self) -> list[_Token]:
        out = []
        while self.pos < len(self.source):
            ch = self.source[self.pos]
            if ch in " \t\r\n":
                self._advance()
            elif ch == "#":
                while self.pos < len(self.source) and self.source[self.pos] != "\n":
                    self._advance()
            elif ch == '"':
                out.append(self._string())
            elif ch.isdigit() or (ch == "-" and self._peek(1).isdigit()):
                out.append(self._number())
            elif ch.isalpha() or ch == "_":
                out.append(self._ident())
            elif ch in "{}[]=;,":
                out.append(_Token("punct", ch, ch, self.line, self.column))
                self._advance()
            elif ch == "." and self._peek(1) == ".":
                out.append(_Token("punct", "..", "..", self.line, self.column))
                self._advance(2)
            else:
                raise self.error(f"unexpected character {ch!r}")
        out.append(_Token("eof", "", None, self.line, self.column))
        return out

    def _string(self) -> _Token:
        line, column = self.line, self.column
        self._advance()  # opening quote
        start = self.pos
        while True:
            ch = self._peek()
            if ch == '"':
                text = self.source[start : self.pos]
                self._advance()
                return _Token("string", text, text, line, column)
            if ch in ("", "\n", "\r"):
                raise self.error("unterminated string", line, column)
            self._advance()

    def _number(self) -> _Token:
        line, column = self.line, self.column
        start = self.pos
        if self._peek() == "-":
            self._advance()
        while self._peek().isdigit():
            self._advance()
        is_int = True
        if self._peek() == "." and self._peek(1).isdigit():
            is_int = False
            self._advance()
            while self._peek().isdigit():
                self._advance()
        if self._peek() in "eE":
            after_sign = 2 if self._peek(1) in "+-" else 1
            if self._peek(after_sign).isdigit():
                is_int = False
                self._advance(after_sign)
                while self._peek().isdigit():
                    self._advance()
        text = self.source[start : self.pos]
        if is_int:
            return _Token("int", text, int(text), line, column)
        value = float(text)
        if not isfinite(value):
            raise self.error(f"number {text} out of range", line, column)
        return _Token("num", text, value, line, column)

    def _ident(self) -> _Token:
        line, column = self.line, self.column
        start = self.pos
        while self._peek().isalnum() or self._peek() == "_":
            self._advance()
        text = self.source[start : self.pos]
        return _Token("ident", text, text, line, column)


def _describe(token: _Token) -> str:
    if token.kind == "eof":
        return "end of input"
    if token.kind == "string":
        return f'string "{token.text}"'
    if token.kind in ("int", "num"):
        return f"number {token.text}"
    return f"'{token.text}'"


class _Parser:
    def __init__(self, source: str):
        tokenizer = _Tokenizer(source)
        self.lines = tokenizer.lines
        self.tokens = tokenizer.tokens()
        self.index = 0
        self.names: set[str] = set()

    def error(self, token: _Token, message: str) -> ParseError:
        return ParseError(token.line, token.column, message, _snippet(self.lines, token.line))

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def take(self) -> _Token:
        token = self.tokens[self.index]
        if token.kind != "eof":
            self.index += 1
        return token

    def expect_punct(self, text: str) -> _Token:
        token = self.peek()
        if token.kind != "punct" or token.text != text:
            raise self.error(token, f"expected '{text}', found {_describe(token)}")
        return self.take()

    def expect_keyword(self, word: str) -> _Token:
        token = self.peek()
        if token.kind != "ident" or token.text != word:
            raise self.error(token, f"expected '{word}', found {_describe(token)}")
        return self.take()

    def expect_string(self, what: str) -> _Token:
        token = self.peek()
        if token.kind != "string":
            raise self.error(token, f"expected quoted {what}, found {_describe(token)}")
        return self.take()

    def expect_int(self, what: str) -> _Token:
        token = self.peek()
        if token.kind != "int":
            raise self.error(token, f"expected integer {what}, found {_describe(token)}")
        return self.take()

    def expect_number(self, what: str) -> _Token:
        token = self.peek()
        if token.kind not in ("int", "num"):
            raise self.error(token, f"expected number {what}, found {_describe(token)}")
        return self.take()

    def declare(self, token: _Token) -> str:
        if token.text in self.names:
            raise self.error(token, f"duplicate name \"{token.text}\"")
        self.names.add(token.text)
        return token.text

    def document(self) -> ModelDocument:
        systems: list[SystemModel] = []
        laws: list[tuple[str, GrowthLaw]] = []
        directives: list[Directive] = []
        while True:
            token = self.peek()
            if token.kind == "eof":
                break
            if token.kind != "ident":
                raise self.error(
                    token,
                    "expected 'system', 'law', 'analyze', 'curve', 'hydrogen', or 'tile', "
                    f"found {_describe(token)}",
                )
            if token.text == "system":
                systems.append(self.system())
            elif token.text == "law":
                laws.append(self.law())
            elif token.text in ("analyze", "curve", "hydrogen", "tile"):
                directives.append(self.directive())
            else:
                raise self.error(
                    token,
                    "expected 'system', 'law', 'analyze', 'curve', 'hydrogen', or 'tile', "
                    f"found {_describe(token)}",
                )
        return ModelDocument(tuple(systems), tuple(laws), tuple(directives))

    def system(self) -> SystemModel:
        self.expect_keyword("system")
        name = self.declare(self.expect_string("system name"))
        self.expect_punct("{")
        entries: list[tuple[DegreeOfFreedom, int]] = []
        while True:
            token = self.peek()
            if token.kind == "punct" and token.text == "}":
                self.take()
                break
            entries.append(self.dofline())
        return SystemModel(name, tuple(entries))

    def dofline(self) -> tuple[DegreeOfFreedom, int]:
        token = self.peek()
        if token.kind != "ident" or token.text not in ("qudit", "continuous", "angular"):
            raise self.error(
                token, f"expected 'qudit', 'continuous', 'angular', or '}}', found {_describe(token)}"
            )
        dof = self.dof()
        count = 1
        if self.peek().kind == "ident" and self.peek().text == "count":
            self.take()
            self.expect_punct("=")
            count_token = self.expect_int("count")
            count = count_token.value
            if count < 1:
                raise self.error(count_token, f"count must be >= 1, got {count}")
        self.expect_punct(";")
        return dof, count

    def dof(self) -> DegreeOfFreedom:
        keyword = self.take()
        if keyword.text == "qudit":
            self.expect_keyword("levels")
            self.expect_punct("=")
            levels_token = self.expect_int("level count")
            if levels_token.value < 1:
                raise self.error(levels_token, f"levels must be >= 1, got {levels_token.value}")
            return Qudit(levels_token.value)
        if keyword.text == "angular":
            self.expect_keyword("dj_hbar")
            self.expect_punct("=")
            value_token = self.expect_number("for dj_hbar")
            if value_token.value < 0:
                raise self.error(value_token, f"dj_hbar must be >= 0, got {value_token.text}")
            return AngularMomentum(float(value_token.value))
        # continuous
        selector = self.peek()
        if selector.kind == "ident" and selector.text == "action_h":
            self.take()
            self.expect_punct("=")
            value_token = self.expect_number("for action_h")
            if value_token.value < 0:
                raise self.error(value_token, f"action must be >= 0, got {value_token.text}")
            return Continuous(ActionBudget(float(value_token.value)))
        if selector.kind == "ident" and selector.text == "dq":
            self.take()
            self.expect_punct("=")
            dq = float(self.expect_number("for dq").value)
            self.expect_keyword("dp")
            self.expect_punct("=")
            dp = float(self.expect_number("for dp").value)
            self.expect_keyword("h")
            self.expect_punct("=")
            h_token = self.expect_number("for h")
            if not h_token.value > 0:
                raise self.error(h_token, f"h must be > 0, got {h_token.text}")
            action = dq * dp / float(h_token.value)
            if action < 0:
                raise self.error(keyword, f"action dq*dp/h must be >= 0, got {action!r}")
            return Continuous(ActionBudget(action))
        raise self.error(selector, f"expected 'action_h' or 'dq', found {_describe(selector)}")

    def law(self) -> tuple[str, GrowthLaw]:
        self.expect_keyword("law")
        name = self.declare(self.expect_string("law name"))
        self.expect_punct("{")
        values = {}
        positions = {}
        for parameter in ("c", "alpha", "beta"):
            self.expect_keyword(parameter)
            self.expect_punct("=")
            token = self.expect_number(f"for {parameter}")
            values[parameter] = float(token.value)
            positions[parameter] = token
            self.expect_punct(";")
        self.expect_punct("}")
        if not values["c"] > 0:
            raise self.error(positions["c"], f"c must be > 0, got {positions['c'].text}")
        for parameter in ("alpha", "beta"):
            if values[parameter] < 0:
                raise self.error(
                    positions[parameter], f"{parameter} must be >= 0, got {positions[parameter].text}"
                )
        return name, GrowthLaw(values["c"], values["alpha"], values["beta"])

    def directive(self) -> Directive:
        keyword = self.take()
        result: Directive
        if keyword.text == "analyze":
            result = AnalyzeDirective(self.expect_string("system or law name").value)
        elif keyword.text == "curve":
            target = self.expect_string("law name").value
            self.expect_keyword("n")
            self.expect_punct("=")
            n_start = self.expect_int("range start").value
            self.expect_punct("..")
            n_end = self.expect_int("range end").value
            result = CurveDirective(target, n_start, n_end)
        elif keyword.text == "hydrogen":
            self.expect_keyword("n_qubits")
            self.expect_punct("=")
            result = HydrogenDirective(self.expect_int("qubit count").value)
        else:  # tile
            self.expect_punct("[")
            dims = [self.expect_int("dimension").value]
            while self.peek().kind == "punct" and self.peek().text == ",":
                self.take()
                dims.append(self.expect_int("dimension").value)
            self.expect_punct("]")
            result = TileDirective(tuple(dims))
        self.expect_punct(";")
        return result


def parse(source: str) -> ModelDocument:
    """Parse ``.qrm`` source into a document, or raise :class:`ParseError`."""
    return _Parser(source).document()


def _render_number(value: float) -> str:
    return repr(float(value))


def _render_dofline(dof: DegreeOfFreedom, count: int) -> str:
    if isinstance(dof, Qudit):
        body = f"qudit levels = {dof.levels}"
    elif isinstance(dof, AngularMomentum):
        body = f"angular dj_hbar = {_render_number(dof.delta_j_over_hbar)}"
    else:
        body = f"continuous action_h = {_render_number(dof.action.in_units_of_h)}"
    suffix = f" count = {count}" if count != 1 else ""
    return f"{body}{suffix};"


def _render_directive(directive: Directive) -> str:
    if isinstance(directive, AnalyzeDirective):
        return f'analyze "{directive.target}";'
    if isinstance(directive, CurveDirective):
        return f'curve "{directive.target}" n = {directive.n_start} .. {directive.n_end};'
    if isinstance(directive, HydrogenDirective):
        return f"hydrogen n_qubits = {directive.n_qubits};"
    return f"tile [{', '.join(str(dim) for dim in directive.dims)}];"


def render(doc: ModelDocument) -> str:
    """Canonical source for a document; ``parse(render(doc))`` equals ``doc``.

    Continuous DOFs always render in ``action_h`` form (the ``dq``/``dp``
    input convenience is folded into the stored action at parse time).
    """
    blocks = []
    for system in doc.systems:
        lines = [f'system "{system.name}" {{']
        lines.extend(f"  {_render_dofline(dof, count)}" for dof, count in system.entries)
        lines.append("}")
        blocks.append("\n".join(lines))
    for name, law in doc.laws:
        blocks.append(
            f'law "{name}" {{\n'
            f"  c = {_render_number(law.c)};\n"
            f"  alpha = {_render_number(law.alpha)};\n"
            f"  beta = {_render_number(law.beta)};\n"
            f"}}"
        )
    blocks.extend(_render_directive(directive) for directive in doc.directives)
    return "\n\n".join(blocks) + "\n" if blocks else ""
