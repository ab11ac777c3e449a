"""A small expression language for building graphs.

Grammar::

    expr := term { "+" term }        join, left-associative
    term := atom { "u" atom }        disjoint union, left-associative
    atom := "K(" int ")" | "K(" int "," int ")" | "C(" int ")" | "petersen"
          | "T(" int "," int ")" | "c5(" int "," int ")"
          | "g7(" int "," int "," int ")"
          | "line(" expr ")" | "cart(" expr "," expr ")" | "dir(" expr "," expr ")"
          | "file(" path ")" | "(" expr ")"

Union binds tighter than join, so ``K(1) u K(2) + H`` reads as
``(K(1) u K(2)) + H``. Whitespace is ignored outside ``file(...)`` paths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from . import graphs
from .graphs import Graph, GraphError

MAX_PARAM = 512


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        self.message = message
        self.offset = offset
        self.expected = tuple(expected)
        detail = f" (expected {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")


class EvalError(GraphError):
    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} (expression at offset {offset})")


# AST nodes. ``pos`` is the source offset and takes no part in equality.

@dataclass(frozen=True)
class Complete:
    n: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class CompleteBipartite:
    m: int
    n: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Cycle:
    n: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Petersen:
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Turan:
    n: int
    r: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class C5Fam:
    i: int
    j: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class G7Fam:
    i: int
    j: int
    k: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Line:
    e: "GraphExpr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Cartesian:
    left: "GraphExpr"
    right: "GraphExpr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Direct:
    left: "GraphExpr"
    right: "GraphExpr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Join:
    left: "GraphExpr"
    right: "GraphExpr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Union_:
    left: "GraphExpr"
    right: "GraphExpr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class File:
    path: str
    pos: int = field(default=0, compare=False)


GraphExpr = Union[
    Complete, CompleteBipartite, Cycle, Petersen, Turan, C5Fam, G7Fam,
    Line, Cartesian, Direct, Join, Union_, File,
]

# smallest allowed value of each integer argument, and accepted arities
_INT_ATOMS = {
    "K": ((1, 1), (1, 2)),
    "C": ((3,), (1,)),
    "T": ((0, 1), (2,)),
    "c5": ((0, 0), (2,)),
    "g7": ((0, 0, 0), (3,)),
}
KEYWORDS = ("K", "C", "T", "c5", "g7", "petersen", "line", "cart", "dir", "file")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"unexpected {self._describe()}", self.i, (repr(ch),))
        self.i += 1

    def _describe(self) -> str:
        if self.i >= len(self.text):
            return "end of input"
        return repr(self.text[self.i])

    def ident(self) -> tuple[str, int]:
        self.skip()
        start = self.i
        while self.i < len(self.text) and (self.text[self.i].isalnum() or self.text[self.i] == "_"):
            self.i += 1
        return self.text[start:self.i], start

    def integer(self, minimum: int) -> int:
        self.skip()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if start == self.i:
            raise ParseError(f"unexpected {self._describe()}", start, ("integer",))
        value = int(self.text[start:self.i])
        if not minimum <= value <= MAX_PARAM:
            raise ParseError(f"integer {value} out of range [{minimum}, {MAX_PARAM}]", start)
        return value

    # expr := term { "+" term }
    def expr(self):
        left = self.term()
        while self.peek() == "+":
            pos = self.i
            self.i += 1
            left = Join(left, self.term(), pos=pos)
        return left

    # term := atom { "u" atom }
    def term(self):
        left = self.atom()
        while True:
            save = self.i
            word, pos = self.ident()
            if word == "u":
                left = Union_(left, self.atom(), pos=pos)
            else:
                self.i = save
                return left

    def atom(self):
        if self.peek() == "(":
            self.i += 1
            inner = self.expr()
            self.expect(")")
            return inner
        word, pos = self.ident()
        if not word:
            raise ParseError(f"unexpected {self._describe()}", self.i, ("graph expression",))
        if word == "petersen":
            return Petersen(pos=pos)
        if word == "file":
            return self.file_atom(pos)
        if word in ("line", "cart", "dir"):
            self.expect("(")
            first = self.expr()
            if word == "line":
                self.expect(")")
                return Line(first, pos=pos)
            self.expect(",")
            second = self.expr()
            self.expect(")")
            return (Cartesian if word == "cart" else Direct)(first, second, pos=pos)
        if word in _INT_ATOMS:
            return self.int_atom(word, pos)
        raise ParseError(f"unknown identifier {word!r}", pos, KEYWORDS)

    def int_atom(self, word: str, pos: int):
        self.expect("(")
        mins, arity = _INT_ATOMS[word]
        args = [self.integer(mins[0])]
        while self.peek() == ",":
            self.i += 1
            if len(args) >= len(mins):
                raise ParseError(f"too many arguments for {word}", self.i - 1, ("')'",))
            args.append(self.integer(mins[len(args)]))
        self.expect(")")
        if len(args) not in arity:
            raise ParseError(f"{word} takes {' or '.join(map(str, arity))} argument(s), got {len(args)}", pos)
        if word == "K":
            return Complete(args[0], pos=pos) if len(args) == 1 else CompleteBipartite(*args, pos=pos)
        return {"C": Cycle, "T": Turan, "c5": C5Fam, "g7": G7Fam}[word](*args, pos=pos)

    def file_atom(self, pos: int):
        self.expect("(")
        start = self.i
        depth = 0
        while self.i < len(self.text):
            ch = self.text[self.i]
            if ch == "(":
                depth += 1
            elif ch == ")":
                if depth == 0:
                    break
                depth -= 1
            self.i += 1
        if self.i >= len(self.text):
            raise ParseError("unterminated file(...)", self.i, ("')'",))
        path = self.text[start:self.i].strip()
        if not path:
            raise ParseError("empty file path", start, ("path",))
        self.i += 1
        return File(path, pos=pos)


def parse_spec(text: str) -> GraphExpr:
    if not text.isascii():
        bad = next(i for i, ch in enumerate(text) if not ch.isascii())
        raise ParseError("non-ASCII character", bad)
    parser = _Parser(text)
    tree = parser.expr()
    parser.skip()
    if parser.i != len(text):
        raise ParseError(f"unexpected {parser._describe()}", parser.i, ("'+'", "'u'", "end of input"))
    return tree


def to_text(e: GraphExpr) -> str:
    """Print an AST back in the concrete syntax (fully parenthesised)."""
    if isinstance(e, Complete):
        return f"K({e.n})"
    if isinstance(e, CompleteBipartite):
        return f"K({e.m},{e.n})"
    if isinstance(e, Cycle):
        return f"C({e.n})"
    if isinstance(e, Petersen):
        return "petersen"
    if isinstance(e, Turan):
        return f"T({e.n},{e.r})"
    if isinstance(e, C5Fam):
        return f"c5({e.i},{e.j})"
    if isinstance(e, G7Fam):
        return f"g7({e.i},{e.j},{e.k})"
    if isinstance(e, Line):
        return f"line({to_text(e.e)})"
    if isinstance(e, Cartesian):
        return f"cart({to_text(e.left)},{to_text(e.right)})"
    if isinstance(e, Direct):
        return f"dir({to_text(e.left)},{to_text(e.right)})"
    if isinstance(e, Join):
        return f"({to_text(e.left)} + {to_text(e.right)})"
    if isinstance(e, Union_):
        return f"({to_text(e.left)} u {to_text(e.right)})"
    if isinstance(e, File):
        return f"file({e.path})"
    raise TypeError(f"not a graph expression: {e!r}")


def evaluate(e: GraphExpr) -> Graph:
    try:
        return _eval(e)
    except EvalError:
        raise
    except GraphError as exc:
        raise EvalError(str(exc), e.pos) from None


def _eval(e: GraphExpr) -> Graph:
    def sub(child):
        try:
            return _eval(child)
        except EvalError:
            raise
        except GraphError as exc:
            raise EvalError(str(exc), child.pos) from None

    if isinstance(e, Complete):
        return graphs.complete(e.n)
    if isinstance(e, CompleteBipartite):
        return graphs.complete_bipartite(e.m, e.n)
    if isinstance(e, Cycle):
        return graphs.cycle(e.n)
    if isinstance(e, Petersen):
        return graphs.petersen()
    if isinstance(e, Turan):
        return graphs.turan_graph(e.n, e.r)
    if isinstance(e, C5Fam):
        return graphs.c5_family(e.i, e.j)
    if isinstance(e, G7Fam):
        return graphs.g7_family(e.i, e.j, e.k)
    if isinstance(e, Line):
        return graphs.line_graph(sub(e.e))[0]
    if isinstance(e, Cartesian):
        return graphs.cartesian_product(sub(e.left), sub(e.right))
    if isinstance(e, Direct):
        return graphs.direct_product(sub(e.left), sub(e.right))
    if isinstance(e, Join):
        return graphs.join(sub(e.left), sub(e.right))
    if isinstance(e, Union_):
        return graphs.disjoint_union(sub(e.left), sub(e.right))
    if isinstance(e, File):
        from .io import read_graph

        return read_graph(e.path)
    raise TypeError(f"not a graph expression: {e!r}")


# ``eval`` mirrors the operation name used elsewhere; ``evaluate`` avoids the builtin.
eval = evaluate  # noqa: A001


def build(text: str) -> Graph:
    return evaluate(parse_spec(text))
