"""Recursive-descent parser for the mini-C subset.

Grammar (informal):
    program  := funcdef+
    funcdef  := ('int'|'bool'|'void') ident '(' params? ')' block
    stmt     := decl | assign ';' | call ';' | if | for | while
              | read ';' | write ';' | return ';' | block
    decl     := ('int'|'bool') declarator (',' declarator)* ';'
    declarator := ident ('[' expr ']'){0,2} ('=' expr)?
    read     := 'scanf' '(' string ',' '&' lvalue ')'
    write    := 'printf' '(' string (',' expr)* ')'

`x++;` / `x--;` statements and compound assignments are accepted and kept as
sugared Assign nodes for the preprocessor to rewrite. `x--`/`x++` as a whole
while-condition is kept as a PostOp node (testcase-loop idiom); anywhere else
increment/decrement is rejected.
"""

from __future__ import annotations

from ..errors import ParseError, UnsupportedConstruct
from . import ast
from .lexer import Token, tokenize

# precedence climbing table: op -> (binding power, right-assoc?)
_BINARY_PREC = {
    "||": 1, "&&": 2,
    "==": 3, "!=": 3,
    "<": 4, "<=": 4, ">": 4, ">=": 4,
    "+": 5, "-": 5,
    "*": 6, "/": 6, "%": 6,
}

_COMPOUND_OPS = {"+=", "-=", "*=", "/=", "%="}


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.pos = 0
        self.next_ordinal = 0

    # -- token plumbing -----------------------------------------------------

    def peek(self, ahead=0) -> Token:
        return self.toks[min(self.pos + ahead, len(self.toks) - 1)]

    def at(self, kind, text=None, ahead=0) -> bool:
        t = self.peek(ahead)
        return t.kind == kind and (text is None or t.text == text)

    def take(self) -> Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind, text=None) -> Token:
        t = self.peek()
        if t.kind != kind or (text is not None and t.text != text):
            want = text if text is not None else kind
            raise ParseError(f"expected {want!r}, found {t.text!r}", t.line, t.col)
        return self.take()

    def fresh_loc(self, tok: Token) -> ast.Location:
        loc = ast.Location(self.next_ordinal, tok.line, tok.col)
        self.next_ordinal += 1
        return loc

    # -- program ------------------------------------------------------------

    def parse_program(self) -> ast.Program:
        funcs = []
        while not self.at("eof"):
            funcs.append(self.parse_funcdef())
        return ast.Program(tuple(funcs))

    def parse_funcdef(self) -> ast.FunctionDef:
        t = self.peek()
        if not (t.kind == "kw" and t.text in ("int", "bool", "void")):
            raise ParseError(f"expected function return type, found {t.text!r}", t.line, t.col)
        ret = self.take().text
        name = self.expect("ident").text
        self.expect("op", "(")
        params = []
        if not self.at("op", ")"):
            while True:
                params.append(self.parse_param())
                if self.at("op", ","):
                    self.take()
                else:
                    break
        self.expect("op", ")")
        self.expect("op", "{")
        body = self.parse_stmt_list()
        self.expect("op", "}")
        return ast.FunctionDef(name, ret, tuple(params), tuple(body))

    def parse_param(self) -> ast.Param:
        t = self.peek()
        if not (t.kind == "kw" and t.text in ("int", "bool")):
            raise ParseError(f"expected parameter type, found {t.text!r}", t.line, t.col)
        elem = self.take().text
        if self.at("op", "*"):
            t = self.peek()
            raise UnsupportedConstruct("pointer parameters are not supported", t.line, t.col)
        name = self.expect("ident").text
        dims = []
        while self.at("op", "["):
            self.take()
            if self.at("op", "]"):
                dims.append(None)
            else:
                dims.append(self.parse_expr())
            self.expect("op", "]")
        if len(dims) > 2:
            raise ParseError("arrays are limited to 2 dimensions", t.line, t.col)
        typ = ast.ArrayType(elem, tuple(dims)) if dims else ast.ScalarType(elem)
        return ast.Param(name, typ)

    # -- statements ----------------------------------------------------------

    def parse_stmt_list(self) -> list:
        out = []
        while not self.at("op", "}") and not self.at("eof"):
            out.append(self.parse_stmt())
        return out

    def parse_stmt(self) -> ast.Stmt:
        t = self.peek()
        if t.kind == "kw":
            if t.text in ("int", "bool"):
                return self.parse_decl()
            if t.text == "void":
                raise ParseError("void is only valid as a function return type", t.line, t.col)
            if t.text == "if":
                return self.parse_if()
            if t.text == "for":
                return self.parse_for()
            if t.text == "while":
                return self.parse_while()
            if t.text == "scanf":
                s = self.parse_read()
                self.expect("op", ";")
                return s
            if t.text == "printf":
                s = self.parse_write()
                self.expect("op", ";")
                return s
            if t.text == "return":
                loc = self.fresh_loc(self.take())
                value = None if self.at("op", ";") else self.parse_expr()
                self.expect("op", ";")
                return ast.Return(loc, value)
        if t.kind == "op" and t.text == "{":
            loc = self.fresh_loc(self.take())
            body = self.parse_stmt_list()
            self.expect("op", "}")
            return ast.Block(loc, tuple(body))
        if t.kind == "op" and t.text == ";":
            loc = self.fresh_loc(self.take())
            return ast.Block(loc, ())
        if t.kind == "op" and t.text in ("++", "--"):
            # prefix ++x; --x;
            op = self.take().text
            s = self.parse_incdec_stmt(op)
            self.expect("op", ";")
            return s
        if t.kind == "ident":
            if self.at("op", "(", ahead=1):
                loc = self.fresh_loc(t)
                name = self.take().text
                args = self.parse_call_args()
                self.expect("op", ";")
                return ast.Call(loc, name, tuple(args))
            s = self.parse_assign()
            self.expect("op", ";")
            return s
        if t.kind == "op" and t.text == "*":
            raise UnsupportedConstruct("pointer arithmetic is not supported", t.line, t.col)
        raise ParseError(f"unexpected token {t.text!r}", t.line, t.col)

    def parse_decl(self) -> ast.Decl:
        head = self.take()
        loc = self.fresh_loc(head)
        elem = head.text
        items = []
        while True:
            if self.at("op", "*"):
                t = self.peek()
                raise UnsupportedConstruct("pointer declarations are not supported", t.line, t.col)
            name = self.expect("ident").text
            dims = []
            while self.at("op", "["):
                self.take()
                dims.append(self.parse_expr())
                self.expect("op", "]")
            if len(dims) > 2:
                raise ParseError("arrays are limited to 2 dimensions", head.line, head.col)
            init = None
            if self.at("op", "="):
                self.take()
                if self.at("op", "&"):
                    t = self.peek()
                    raise UnsupportedConstruct("address-of outside scanf is not supported",
                                               t.line, t.col)
                init = self.parse_expr()
            typ = ast.ArrayType(elem, tuple(dims)) if dims else ast.ScalarType(elem)
            items.append(ast.DeclItem(name, typ, init))
            if self.at("op", ","):
                self.take()
            else:
                break
        self.expect("op", ";")
        return ast.Decl(loc, tuple(items))

    def parse_assign(self) -> ast.Assign:
        t = self.peek()
        loc = self.fresh_loc(t)
        target = self.parse_lvalue()
        nt = self.peek()
        if nt.kind == "op" and nt.text in ("++", "--"):
            self.take()
            if not isinstance(target, (ast.Var, ast.ArrayAccess)):
                raise ParseError("invalid increment target", nt.line, nt.col)
            op = "+" if nt.text == "++" else "-"
            return ast.Assign(loc, target, ast.Binary(op, target, ast.IntLit(1)))
        if nt.kind == "op" and nt.text in _COMPOUND_OPS:
            self.take()
            value = self.parse_expr()
            return ast.Assign(loc, target, value, op=nt.text)
        self.expect("op", "=")
        value = self.parse_expr()
        return ast.Assign(loc, target, value)

    def parse_incdec_stmt(self, op: str) -> ast.Assign:
        t = self.peek()
        loc = self.fresh_loc(t)
        target = self.parse_lvalue()
        binop = "+" if op == "++" else "-"
        return ast.Assign(loc, target, ast.Binary(binop, target, ast.IntLit(1)))

    def parse_lvalue(self) -> ast.Expr:
        name = self.expect("ident").text
        e: ast.Expr = ast.Var(name)
        while self.at("op", "["):
            self.take()
            idx = self.parse_expr()
            self.expect("op", "]")
            e = ast.ArrayAccess(e, idx)
        return e

    def parse_if(self) -> ast.If:
        loc = self.fresh_loc(self.expect("kw", "if"))
        self.expect("op", "(")
        cond = self.parse_expr()
        self.expect("op", ")")
        then = self.parse_body()
        els = ()
        if self.at("kw", "else"):
            self.take()
            els = self.parse_body()
        return ast.If(loc, cond, then, els)

    def parse_body(self) -> tuple:
        """A braced block or a single statement, flattened to a stmt tuple."""
        if self.at("op", "{"):
            self.take()
            body = self.parse_stmt_list()
            self.expect("op", "}")
            return tuple(body)
        return (self.parse_stmt(),)

    def parse_for(self) -> ast.For:
        loc = self.fresh_loc(self.expect("kw", "for"))
        self.expect("op", "(")
        init = None
        if not self.at("op", ";"):
            init = self.parse_assign()
        self.expect("op", ";")
        cond = None
        if not self.at("op", ";"):
            cond = self.parse_expr()
        self.expect("op", ";")
        update = None
        if not self.at("op", ")"):
            if self.at("op", "++") or self.at("op", "--"):
                op = self.take().text
                update = self.parse_incdec_stmt(op)
            else:
                update = self.parse_assign()
        self.expect("op", ")")
        body = self.parse_body()
        return ast.For(loc, init, cond, update, body)

    def parse_while(self) -> ast.While:
        loc = self.fresh_loc(self.expect("kw", "while"))
        self.expect("op", "(")
        # `while (t--)` / `while (t++)` testcase idiom
        if self.at("ident") and self.peek(1).kind == "op" and \
                self.peek(1).text in ("--", "++") and self.at("op", ")", ahead=2):
            name = self.take().text
            op = self.take().text
            cond: ast.Expr = ast.PostOp(op, name)
        else:
            cond = self.parse_expr()
        self.expect("op", ")")
        body = self.parse_body()
        return ast.While(loc, cond, body)

    def parse_read(self) -> ast.Read:
        loc = self.fresh_loc(self.expect("kw", "scanf"))
        self.expect("op", "(")
        fmt = self.expect("string").text
        self.expect("op", ",")
        self.expect("op", "&")
        target = self.parse_lvalue()
        if self.at("op", ","):
            t = self.peek()
            raise UnsupportedConstruct("one lvalue per scanf", t.line, t.col)
        self.expect("op", ")")
        return ast.Read(loc, fmt, target)

    def parse_write(self) -> ast.Write:
        loc = self.fresh_loc(self.expect("kw", "printf"))
        self.expect("op", "(")
        fmt = self.expect("string").text
        args = []
        while self.at("op", ","):
            self.take()
            args.append(self.parse_expr())
        self.expect("op", ")")
        return ast.Write(loc, fmt, tuple(args))

    def parse_call_args(self) -> list:
        self.expect("op", "(")
        args = []
        if not self.at("op", ")"):
            while True:
                args.append(self.parse_expr())
                if self.at("op", ","):
                    self.take()
                else:
                    break
        self.expect("op", ")")
        return args

    # -- expressions ---------------------------------------------------------

    def parse_expr(self) -> ast.Expr:
        return self.parse_ternary()

    def parse_ternary(self) -> ast.Expr:
        cond = self.parse_binary(0)
        if self.at("op", "?"):
            self.take()
            then = self.parse_expr()
            self.expect("op", ":")
            els = self.parse_ternary()
            return ast.Ternary(cond, then, els)
        return cond

    def parse_binary(self, min_prec: int) -> ast.Expr:
        left = self.parse_unary()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text in ("<<", ">>"):
                raise UnsupportedConstruct("bit shifts are not supported", t.line, t.col)
            if t.kind != "op" or t.text not in _BINARY_PREC:
                return left
            prec = _BINARY_PREC[t.text]
            if prec < min_prec:
                return left
            self.take()
            right = self.parse_binary(prec + 1)
            left = ast.Binary(t.text, left, right)

    def parse_unary(self) -> ast.Expr:
        t = self.peek()
        if t.kind == "op" and t.text == "-":
            self.take()
            operand = self.parse_unary()
            if isinstance(operand, ast.IntLit):
                return ast.IntLit(-operand.value)
            return ast.Unary("-", operand)
        if t.kind == "op" and t.text == "!":
            self.take()
            return ast.Unary("!", self.parse_unary())
        if t.kind == "op" and t.text in ("*", "&"):
            raise UnsupportedConstruct("pointer arithmetic is not supported", t.line, t.col)
        if t.kind == "op" and t.text in ("++", "--"):
            raise UnsupportedConstruct(
                "increment/decrement in expressions is not supported", t.line, t.col)
        return self.parse_postfix()

    def parse_postfix(self) -> ast.Expr:
        e = self.parse_primary()
        while True:
            if self.at("op", "["):
                self.take()
                idx = self.parse_expr()
                self.expect("op", "]")
                e = ast.ArrayAccess(e, idx)
            elif self.at("op", "++") or self.at("op", "--"):
                t = self.peek()
                raise UnsupportedConstruct(
                    "increment/decrement in expressions is not supported", t.line, t.col)
            else:
                return e

    def parse_primary(self) -> ast.Expr:
        t = self.peek()
        if t.kind == "int":
            self.take()
            return ast.IntLit(int(t.text))
        if t.kind == "kw" and t.text in ("true", "false"):
            self.take()
            return ast.BoolLit(t.text == "true")
        if t.kind == "ident":
            name = self.take().text
            if self.at("op", "("):
                args = self.parse_call_args()
                return ast.CallExpr(name, tuple(args))
            return ast.Var(name)
        if t.kind == "op" and t.text == "(":
            self.take()
            e = self.parse_expr()
            self.expect("op", ")")
            return e
        raise ParseError(f"unexpected token {t.text!r} in expression", t.line, t.col)


def parse(source: str) -> ast.Program:
    """Parse and type-check mini-C source into a Program."""
    from .typecheck import check_program

    toks = tokenize(source)
    program = _Parser(toks).parse_program()
    check_program(program)
    return program


def parse_unchecked(source: str) -> ast.Program:
    return _Parser(tokenize(source)).parse_program()
