"""AST for the mini-C subset.

Statements carry a Location whose ordinal is strictly increasing in source
order; analysis results are keyed by these ordinals. Expressions are plain
immutable dataclasses and carry no locations.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from typing import Iterator, Optional, Union


@dataclass(frozen=True)
class Location:
    ordinal: int
    line: int
    col: int

    def __repr__(self):
        return f"@{self.ordinal}(L{self.line})"


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------

INT = "int"
BOOL = "bool"
VOID = "void"


@dataclass(frozen=True)
class ScalarType:
    kind: str  # "int" | "bool"

    def __str__(self):
        return self.kind


@dataclass(frozen=True)
class ArrayType:
    elem: str            # "int" | "bool"
    dims: tuple          # tuple of Expr (declared sizes) or None (unsized param)

    @property
    def ndim(self) -> int:
        return len(self.dims)

    def __str__(self):
        return self.elem + "[]" * self.ndim


Type = Union[ScalarType, ArrayType]


# ---------------------------------------------------------------------------
# Expressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class BoolLit:
    value: bool


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class ArrayAccess:
    base: "Expr"         # Var or ArrayAccess (2D access chains)
    index: "Expr"


@dataclass(frozen=True)
class Binary:
    op: str              # + - * / % < <= > >= == != && ||
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Unary:
    op: str              # "-" | "!"
    operand: "Expr"


@dataclass(frozen=True)
class Ternary:
    cond: "Expr"
    then: "Expr"
    els: "Expr"


@dataclass(frozen=True)
class CallExpr:
    name: str
    args: tuple


@dataclass(frozen=True)
class PostOp:
    """`x--` / `x++` used as a whole while-condition (testcase-loop idiom).

    Only produced in that position; preprocess desugars any that survive
    testcase-loop stripping.
    """
    op: str              # "--" | "++"
    var: str


Expr = Union[IntLit, BoolLit, Var, ArrayAccess, Binary, Unary, Ternary, CallExpr, PostOp]


# ---------------------------------------------------------------------------
# Statements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DeclItem:
    name: str
    typ: Type
    init: Optional[Expr] = None


@dataclass(frozen=True)
class Decl:
    loc: Location
    items: tuple         # tuple[DeclItem]


@dataclass(frozen=True)
class Assign:
    loc: Location
    target: Expr         # Var or ArrayAccess
    value: Expr
    op: str = "="        # "=", or compound "+=" etc. until preprocess removes them


@dataclass(frozen=True)
class If:
    loc: Location
    cond: Expr
    then: tuple          # tuple[Stmt]
    els: tuple = ()


@dataclass(frozen=True)
class For:
    loc: Location
    init: Optional["Assign"]
    cond: Optional[Expr]
    update: Optional["Assign"]
    body: tuple


@dataclass(frozen=True)
class While:
    loc: Location
    cond: Expr
    body: tuple


@dataclass(frozen=True)
class Read:
    loc: Location
    fmt: str
    target: Expr         # Var or ArrayAccess lvalue


@dataclass(frozen=True)
class Write:
    loc: Location
    fmt: str
    args: tuple


@dataclass(frozen=True)
class Call:
    loc: Location
    name: str
    args: tuple


@dataclass(frozen=True)
class Return:
    loc: Location
    value: Optional[Expr]


@dataclass(frozen=True)
class Block:
    loc: Location
    body: tuple


Stmt = Union[Decl, Assign, If, For, While, Read, Write, Call, Return, Block]


@dataclass(frozen=True)
class Param:
    name: str
    typ: Type


@dataclass(frozen=True)
class FunctionDef:
    name: str
    ret: str             # "int" | "bool" | "void"
    params: tuple
    body: tuple


@dataclass(frozen=True)
class Program:
    functions: tuple
    notes: tuple = ()    # explanatory notes attached by preprocessing

    def function(self, name: str) -> FunctionDef:
        for f in self.functions:
            if f.name == name:
                return f
        raise KeyError(name)

    @property
    def main(self) -> FunctionDef:
        return self.function("main")


# ---------------------------------------------------------------------------
# Traversal helpers
# ---------------------------------------------------------------------------

def walk_stmts(stmts) -> Iterator[Stmt]:
    """Yield every statement in `stmts`, depth first, pre-order."""
    for s in stmts:
        yield s
        if isinstance(s, If):
            yield from walk_stmts(s.then)
            yield from walk_stmts(s.els)
        elif isinstance(s, For):
            if s.init is not None:
                yield s.init
            if s.update is not None:
                yield s.update
            yield from walk_stmts(s.body)
        elif isinstance(s, While):
            yield from walk_stmts(s.body)
        elif isinstance(s, Block):
            yield from walk_stmts(s.body)


def stmt_exprs(s: Stmt) -> Iterator[Expr]:
    """Yield the expressions directly held by a statement (not recursive into
    child statements)."""
    if isinstance(s, Decl):
        for it in s.items:
            if isinstance(it.typ, ArrayType):
                for d in it.typ.dims:
                    if d is not None:
                        yield d
            if it.init is not None:
                yield it.init
    elif isinstance(s, Assign):
        yield s.target
        yield s.value
    elif isinstance(s, (If, While)):
        yield s.cond
    elif isinstance(s, For):
        if s.cond is not None:
            yield s.cond
    elif isinstance(s, Read):
        yield s.target
    elif isinstance(s, Write):
        yield from s.args
    elif isinstance(s, Call):
        yield from s.args
    elif isinstance(s, Return):
        if s.value is not None:
            yield s.value


def walk_exprs(e: Expr) -> Iterator[Expr]:
    yield e
    if isinstance(e, ArrayAccess):
        yield from walk_exprs(e.base)
        yield from walk_exprs(e.index)
    elif isinstance(e, Binary):
        yield from walk_exprs(e.left)
        yield from walk_exprs(e.right)
    elif isinstance(e, Unary):
        yield from walk_exprs(e.operand)
    elif isinstance(e, Ternary):
        yield from walk_exprs(e.cond)
        yield from walk_exprs(e.then)
        yield from walk_exprs(e.els)
    elif isinstance(e, CallExpr):
        for a in e.args:
            yield from walk_exprs(a)


def expr_vars(e: Expr) -> set:
    """All variable names mentioned in `e` (array base names included)."""
    out = set()
    for sub in walk_exprs(e):
        if isinstance(sub, Var):
            out.add(sub.name)
        elif isinstance(sub, PostOp):
            out.add(sub.var)
    return out


def access_path(e: Expr):
    """Decompose an lvalue into (base name, [index exprs]); None if not an lvalue."""
    idxs = []
    while isinstance(e, ArrayAccess):
        idxs.append(e.index)
        e = e.base
    if isinstance(e, Var):
        return e.name, list(reversed(idxs))
    return None


def substitute_vars(e: Expr, mapping: dict) -> Expr:
    """Substitute Var nodes by name; values are Exprs."""
    if isinstance(e, Var):
        return mapping.get(e.name, e)
    if isinstance(e, ArrayAccess):
        return ArrayAccess(substitute_vars(e.base, mapping), substitute_vars(e.index, mapping))
    if isinstance(e, Binary):
        return Binary(e.op, substitute_vars(e.left, mapping), substitute_vars(e.right, mapping))
    if isinstance(e, Unary):
        return Unary(e.op, substitute_vars(e.operand, mapping))
    if isinstance(e, Ternary):
        return Ternary(substitute_vars(e.cond, mapping),
                       substitute_vars(e.then, mapping),
                       substitute_vars(e.els, mapping))
    if isinstance(e, CallExpr):
        return CallExpr(e.name, tuple(substitute_vars(a, mapping) for a in e.args))
    return e


_LOC_FIELDS = {"loc"}


def structurally_equal(a, b) -> bool:
    """Structural AST equality ignoring Locations."""
    if type(a) is not type(b):
        return False
    if isinstance(a, Location):
        return True
    if isinstance(a, (list, tuple)):
        return len(a) == len(b) and all(structurally_equal(x, y) for x, y in zip(a, b))
    if hasattr(a, "__dataclass_fields__"):
        for f in fields(a):
            if f.name in _LOC_FIELDS:
                continue
            if not structurally_equal(getattr(a, f.name), getattr(b, f.name)):
                return False
        return True
    return a == b


def assigned_names(stmts) -> set:
    """Names assigned (scalar or array base) anywhere in `stmts`, including
    read targets and for-headers."""
    out = set()
    for s in walk_stmts(stmts):
        if isinstance(s, Assign):
            path = access_path(s.target)
            if path:
                out.add(path[0])
        elif isinstance(s, Read):
            path = access_path(s.target)
            if path:
                out.add(path[0])
    return out
