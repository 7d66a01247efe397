"""Lexer and recursive-descent parser for the supported Java subset.

The parser recognizes class declarations, method declarations, if/else,
while, for, do, enhanced-for, try/catch, local variable declarations,
method invocations, field access, returns, assignments, literals and
unary/binary expressions.  Statements outside the subset (switch,
synchronized, ...) are retained as opaque nodes: they produce no facts but
do not abort parsing.  Expressions are not kept as full trees; only the
nodes that later bear facts (calls, declarations, control structures) are
materialized, each with its source span.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import JavaParseError

KEYWORDS = {
    "abstract", "assert", "boolean", "break", "byte", "case", "catch",
    "char", "class", "const", "continue", "default", "do", "double",
    "else", "enum", "extends", "final", "finally", "float", "for", "goto",
    "if", "implements", "import", "instanceof", "int", "interface", "long",
    "native", "new", "package", "private", "protected", "public", "return",
    "short", "static", "strictfp", "super", "switch", "synchronized",
    "this", "throw", "throws", "transient", "try", "void", "volatile",
    "while", "true", "false", "null",
}

MODIFIERS = {
    "public", "private", "protected", "static", "final", "abstract",
    "synchronized", "native", "transient", "volatile", "strictfp", "default",
}

PRIMITIVES = {"boolean", "byte", "char", "short", "int", "long", "float",
              "double", "void"}

_MULTI_OPS = [
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "==", "!=", "<=", ">=",
    "&&", "||", "++", "--", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
    "<<", ">>",
]

_SINGLE_OPS = set("+-*/%=<>!~?:;,.(){}[]@&|^")


@dataclass
class Token:
    kind: str          # ident, keyword, number, string, char, op, eof
    text: str
    line: int          # 1-based
    col: int           # 1-based
    offset: int        # character offset into the source


def tokenize(text: str, path: str | None = None) -> list[Token]:
    toks: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if c in " \t\r\f":
            i += 1
            col += 1
            continue
        if c == "/" and i + 1 < n and text[i + 1] == "/":
            while i < n and text[i] != "\n":
                i += 1
                col += 1
            continue
        if c == "/" and i + 1 < n and text[i + 1] == "*":
            end = text.find("*/", i + 2)
            if end < 0:
                raise JavaParseError("unterminated comment", line, col, path)
            for ch in text[i:end + 2]:
                if ch == "\n":
                    line += 1
                    col = 1
                else:
                    col += 1
            i = end + 2
            continue
        start_line, start_col, start_off = line, col, i
        if c.isalpha() or c in "_$":
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_$"):
                j += 1
            word = text[i:j]
            kind = "keyword" if word in KEYWORDS else "ident"
            toks.append(Token(kind, word, start_line, start_col, start_off))
            col += j - i
            i = j
            continue
        if c.isdigit() or (c == "." and i + 1 < n and text[i + 1].isdigit()):
            j = i
            if text[j] == "0" and j + 1 < n and text[j + 1] in "xXbB":
                j += 2
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
            else:
                seen_dot = False
                while j < n:
                    ch = text[j]
                    if ch.isdigit() or ch == "_":
                        j += 1
                    elif ch == "." and not seen_dot and j + 1 < n and text[j + 1].isdigit():
                        seen_dot = True
                        j += 1
                    elif ch in "eE" and j + 1 < n and (text[j + 1].isdigit() or text[j + 1] in "+-"):
                        j += 2
                    elif ch in "lLfFdD":
                        j += 1
                        break
                    else:
                        break
            toks.append(Token("number", text[i:j], start_line, start_col, start_off))
            col += j - i
            i = j
            continue
        if c == '"' or c == "'":
            quote = c
            j = i + 1
            while j < n and text[j] != quote:
                if text[j] == "\\":
                    j += 1
                if text[j] == "\n":
                    raise JavaParseError("unterminated literal", line, col, path)
                j += 1
            if j >= n:
                raise JavaParseError("unterminated literal", line, col, path)
            j += 1
            kind = "string" if quote == '"' else "char"
            toks.append(Token(kind, text[i:j], start_line, start_col, start_off))
            col += j - i
            i = j
            continue
        matched = None
        for op in _MULTI_OPS:
            if text.startswith(op, i):
                matched = op
                break
        if matched is None and c in _SINGLE_OPS:
            matched = c
        if matched is None:
            raise JavaParseError(f"unexpected character {c!r}", line, col, path)
        toks.append(Token("op", matched, start_line, start_col, start_off))
        col += len(matched)
        i += len(matched)
    toks.append(Token("eof", "", line, col, n))
    return toks


@dataclass
class Node:
    """A syntax-tree node.

    kind is one of: class, method, param, if, while, do, for, foreach,
    try, catch, vardecl, call, return, exprstmt, throw, break, continue,
    block, opaque, empty.  Spans are (start_line, start_col, end_line,
    end_col) with 1-based lines and columns; end is inclusive of the last
    token's first column plus its length.
    """

    kind: str
    span: tuple[int, int, int, int]
    children: list["Node"] = field(default_factory=list)
    name: str = ""        # method name, callee name, declared variable name
    cond: str = ""        # condition / loop header text, whitespace-normalized
    type_text: str = ""   # declared type (vardecl, param, catch)
    signature: str = ""   # methods only: name(T1,T2)


def normalize_text(s: str) -> str:
    """Collapse whitespace runs to single spaces and trim."""
    return " ".join(s.split())


class _Parser:
    def __init__(self, text: str, path: str | None = None):
        self.text = text
        self.path = path
        self.toks = tokenize(text, path)
        self.pos = 0

    # --- token helpers -------------------------------------------------

    def peek(self, ahead: int = 0) -> Token:
        return self.toks[min(self.pos + ahead, len(self.toks) - 1)]

    def at(self, text: str) -> bool:
        return self.peek().text == text and self.peek().kind in ("op", "keyword")

    def accept(self, text: str) -> Token | None:
        if self.at(text):
            return self.advance()
        return None

    def advance(self) -> Token:
        tok = self.toks[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def require(self, text: str) -> Token:
        if not self.at(text):
            tok = self.peek()
            raise JavaParseError(
                f"expected {text!r}, found {tok.text or 'end of input'!r}",
                tok.line, tok.col, self.path)
        return self.advance()

    def error(self, message: str) -> JavaParseError:
        tok = self.peek()
        return JavaParseError(message, tok.line, tok.col, self.path)

    def slice_text(self, start_tok: Token, end_tok: Token) -> str:
        """Source text from start_tok up to and including end_tok."""
        return normalize_text(
            self.text[start_tok.offset:end_tok.offset + len(end_tok.text)])

    def span_from(self, start_tok: Token, end_tok: Token) -> tuple[int, int, int, int]:
        return (start_tok.line, start_tok.col,
                end_tok.line, end_tok.col + max(len(end_tok.text), 1))

    def prev(self) -> Token:
        return self.toks[self.pos - 1]

    # --- types ---------------------------------------------------------

    def try_type(self) -> tuple[str, Token, Token] | None:
        """Attempt to parse a type; on failure restore position.

        Returns (normalized text, first token, last token).
        """
        mark = self.pos
        first = self.peek()
        if first.text in PRIMITIVES:
            self.advance()
        elif first.kind == "ident":
            self.advance()
            while self.at(".") and self.peek(1).kind == "ident":
                self.advance()
                self.advance()
            if self.at("<") and not self._skip_type_args():
                self.pos = mark
                return None
        else:
            return None
        while self.at("[") and self.peek(1).text == "]":
            self.advance()
            self.advance()
        if self.at("..."):
            self.advance()
        last = self.prev()
        return self.slice_text(first, last), first, last

    def _skip_type_args(self) -> bool:
        """Consume a balanced <...> that looks like type arguments."""
        mark = self.pos
        depth = 0
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                self.pos = mark
                return False
            if tok.text == "<":
                depth += 1
            elif tok.text == ">":
                depth -= 1
                if depth == 0:
                    self.advance()
                    return True
            elif tok.text == ">>":
                depth -= 2
                if depth <= 0:
                    self.advance()
                    if depth < 0:
                        self.pos = mark
                        return False
                    return True
            elif tok.kind in ("ident", "keyword") or tok.text in (",", ".", "[", "]", "?"):
                if tok.kind == "keyword" and tok.text not in PRIMITIVES and tok.text not in ("extends", "super"):
                    self.pos = mark
                    return False
            else:
                self.pos = mark
                return False
            self.advance()

    # --- compilation unit ----------------------------------------------

    def parse_unit(self) -> list[Node]:
        classes: list[Node] = []
        while self.peek().kind != "eof":
            if self.at("package") or self.at("import"):
                while not self.at(";") and self.peek().kind != "eof":
                    self.advance()
                self.accept(";")
                continue
            node = self.parse_type_decl()
            if node is not None:
                classes.append(node)
        return classes

    def parse_type_decl(self) -> Node | None:
        start = self.peek()
        self._skip_modifiers()
        if self.at("class"):
            self.advance()
            name_tok = self.advance()
            while not self.at("{") and self.peek().kind != "eof":
                self.advance()
            body = self.parse_class_body(name_tok.text)
            end = self.prev()
            return Node("class", self.span_from(start, end),
                        children=body, name=name_tok.text)
        if self.at("interface") or self.at("enum") or self.at("@"):
            self._skip_balanced_decl()
            return None
        # bare method fragment (snippet input without a class wrapper)
        ty = self.try_type()
        if ty is not None and self.peek().kind == "ident" and self.peek(1).text == "(":
            name_tok = self.advance()
            return self.finish_method(start, name_tok.text)
        raise self.error(f"expected a type declaration, found {self.peek().text!r}")

    def _skip_modifiers(self) -> None:
        while True:
            tok = self.peek()
            if tok.text in MODIFIERS:
                self.advance()
            elif tok.text == "@" and self.peek(1).kind in ("ident", "keyword"):
                if self.peek(1).text == "interface":
                    return
                self.advance()
                self.advance()
                while self.at(".") and self.peek(1).kind == "ident":
                    self.advance()
                    self.advance()
                if self.at("("):
                    self._skip_parens()
            else:
                return

    def _skip_parens(self) -> None:
        self.require("(")
        depth = 1
        while depth and self.peek().kind != "eof":
            if self.at("("):
                depth += 1
            elif self.at(")"):
                depth -= 1
            self.advance()

    def _skip_balanced_decl(self) -> None:
        """Skip a declaration up to ';' or through its balanced braces."""
        depth = 0
        while self.peek().kind != "eof":
            if self.at("{"):
                depth += 1
            elif self.at("}"):
                depth -= 1
                self.advance()
                if depth == 0:
                    return
                continue
            elif self.at(";") and depth == 0:
                self.advance()
                return
            self.advance()

    def parse_class_body(self, class_name: str) -> list[Node]:
        self.require("{")
        members: list[Node] = []
        while not self.at("}"):
            if self.peek().kind == "eof":
                raise self.error("unterminated class body")
            member = self.parse_member(class_name)
            if member is not None:
                members.append(member)
        self.require("}")
        return members

    def parse_member(self, class_name: str) -> Node | None:
        if self.accept(";"):
            return None
        start = self.peek()
        self._skip_modifiers()
        if self.at("class"):
            self.advance()
            name_tok = self.advance()
            while not self.at("{") and self.peek().kind != "eof":
                self.advance()
            body = self.parse_class_body(name_tok.text)
            end = self.prev()
            return Node("class", self.span_from(start, end),
                        children=body, name=name_tok.text)
        if self.at("interface") or self.at("enum"):
            self._skip_balanced_decl()
            return None
        if self.at("{"):
            self._skip_balanced_decl()   # static / instance initializer
            return None
        # constructor: Name ( ...
        if (self.peek().kind == "ident" and self.peek().text == class_name
                and self.peek(1).text == "("):
            name_tok = self.advance()
            return self.finish_method(start, name_tok.text)
        ty = self.try_type()
        if ty is not None and self.peek().kind == "ident" and self.peek(1).text == "(":
            name_tok = self.advance()
            return self.finish_method(start, name_tok.text)
        # field or anything else: skip to ';' at top level
        self._skip_field()
        return None

    def _skip_field(self) -> None:
        depth = 0
        while self.peek().kind != "eof":
            if self.peek().text in "([{":
                depth += 1
            elif self.peek().text in ")]}":
                depth -= 1
            elif self.at(";") and depth == 0:
                self.advance()
                return
            self.advance()

    def finish_method(self, start: Token, name: str) -> Node:
        self.require("(")
        params: list[Node] = []
        sig_types: list[str] = []
        if not self.at(")"):
            while True:
                p_start = self.peek()
                self.accept("final")
                while self.at("@") and self.peek(1).kind == "ident":
                    self.advance()
                    self.advance()
                ty = self.try_type()
                if ty is None:
                    raise self.error("expected a parameter type")
                type_text, _, _ = ty
                p_name = self.advance()
                if p_name.kind != "ident":
                    raise self.error("expected a parameter name")
                while self.at("[") and self.peek(1).text == "]":
                    self.advance()
                    self.advance()
                    type_text += "[]"
                params.append(Node("param", self.span_from(p_start, self.prev()),
                                   name=p_name.text, type_text=type_text))
                sig_types.append(type_text.replace(" ", ""))
                if not self.accept(","):
                    break
        self.require(")")
        if self.at("throws"):
            self.advance()
            while self.peek().kind == "ident" or self.at(","):
                self.advance()
                while self.at(".") and self.peek(1).kind == "ident":
                    self.advance()
                    self.advance()
        signature = f"{name}({','.join(sig_types)})"
        children: list[Node] = list(params)
        if self.accept(";") is None:
            self.require("{")
            while not self.at("}"):
                if self.peek().kind == "eof":
                    raise self.error("unterminated method body")
                children.extend(self.parse_statement())
        end = self.advance() if self.at("}") else self.prev()
        return Node("method", self.span_from(start, end), children=children,
                    name=name, signature=signature)

    # --- statements ------------------------------------------------------

    def parse_block_into(self) -> list[Node]:
        """Parse either a braced block or a single statement."""
        if self.at("{"):
            self.advance()
            out: list[Node] = []
            while not self.at("}"):
                if self.peek().kind == "eof":
                    raise self.error("unterminated block")
                out.extend(self.parse_statement())
            self.require("}")
            return out
        return self.parse_statement()

    def parse_statement(self) -> list[Node]:
        tok = self.peek()
        if self.at(";"):
            self.advance()
            return []
        if self.at("{"):
            return self.parse_block_into()
        if self.at("if"):
            return [self.parse_if()]
        if self.at("while"):
            return [self.parse_while()]
        if self.at("do"):
            return [self.parse_do()]
        if self.at("for"):
            return [self.parse_for()]
        if self.at("try"):
            return self.parse_try()
        if self.at("return"):
            start = self.advance()
            calls: list[Node] = []
            if not self.at(";"):
                self.parse_expression(calls)
            end = self.require(";")
            return [Node("return", self.span_from(start, end), children=calls)]
        if self.at("throw"):
            start = self.advance()
            calls = []
            self.parse_expression(calls)
            end = self.require(";")
            return [Node("throw", self.span_from(start, end), children=calls)]
        if self.at("break") or self.at("continue"):
            start = self.advance()
            if self.peek().kind == "ident":
                self.advance()
            end = self.require(";")
            return [Node(start.text, self.span_from(start, end))]
        if tok.kind == "keyword" and tok.text in ("switch", "synchronized",
                                                  "assert", "case", "default"):
            return [self.parse_opaque()]
        if tok.kind == "ident" and self.peek(1).text == ":" and self.peek(1).kind == "op":
            self.advance()
            self.advance()
            return self.parse_statement()
        decl = self.try_vardecl()
        if decl is not None:
            return decl
        # plain expression statement
        start = self.peek()
        calls = []
        self.parse_expression(calls)
        end = self.require(";")
        return [Node("exprstmt", self.span_from(start, end), children=calls)]

    def parse_opaque(self) -> Node:
        start = self.peek()
        depth = 0
        while self.peek().kind != "eof":
            if self.at("{"):
                depth += 1
            elif self.at("}"):
                depth -= 1
                self.advance()
                if depth == 0:
                    return Node("opaque", self.span_from(start, self.prev()))
                continue
            elif self.at(";") and depth == 0:
                self.advance()
                return Node("opaque", self.span_from(start, self.prev()))
            self.advance()
        raise self.error("unterminated statement")

    def parse_if(self) -> Node:
        start = self.require("if")
        self.require("(")
        cond_start = self.peek()
        calls: list[Node] = []
        self.parse_expression(calls)
        cond_end = self.prev()
        self.require(")")
        children = calls + self.parse_block_into()
        if self.at("else"):
            self.advance()
            # contents of the else branch attach to the governing if
            children.extend(self.parse_block_into())
        return Node("if", self.span_from(start, self.prev()),
                    children=children,
                    cond=self.slice_text(cond_start, cond_end))

    def parse_while(self) -> Node:
        start = self.require("while")
        self.require("(")
        cond_start = self.peek()
        calls: list[Node] = []
        self.parse_expression(calls)
        cond_end = self.prev()
        self.require(")")
        children = calls + self.parse_block_into()
        return Node("while", self.span_from(start, self.prev()),
                    children=children,
                    cond=self.slice_text(cond_start, cond_end))

    def parse_do(self) -> Node:
        start = self.require("do")
        body = self.parse_block_into()
        self.require("while")
        self.require("(")
        cond_start = self.peek()
        calls: list[Node] = []
        self.parse_expression(calls)
        cond_end = self.prev()
        self.require(")")
        end = self.require(";")
        return Node("do", self.span_from(start, end),
                    children=calls + body,
                    cond=self.slice_text(cond_start, cond_end))

    def parse_for(self) -> Node:
        start = self.require("for")
        self.require("(")
        header_start = self.peek()
        # enhanced for: [final] Type name : expr
        mark = self.pos
        self.accept("final")
        ty = self.try_type()
        if ty is not None and self.peek().kind == "ident" and self.peek(1).text == ":":
            type_text, ty_first, _ = ty
            name_tok = self.advance()
            self.advance()  # ':'
            calls: list[Node] = []
            self.parse_expression(calls)
            header_end = self.prev()
            self.require(")")
            var = Node("vardecl", self.span_from(ty_first, name_tok),
                       name=name_tok.text, type_text=type_text)
            children = [var] + calls + self.parse_block_into()
            return Node("foreach", self.span_from(start, self.prev()),
                        children=children,
                        cond=self.slice_text(header_start, header_end))
        self.pos = mark
        children = []
        if not self.at(";"):
            decl = self.try_vardecl(stop_at_semicolon=True)
            if decl is not None:
                children.extend(decl)
            else:
                calls = []
                self.parse_expression(calls)
                while self.accept(","):
                    self.parse_expression(calls)
                children.extend(calls)
        self.require(";")
        if not self.at(";"):
            calls = []
            self.parse_expression(calls)
            children.extend(calls)
        self.require(";")
        if not self.at(")"):
            calls = []
            self.parse_expression(calls)
            while self.accept(","):
                self.parse_expression(calls)
            children.extend(calls)
        header_end = self.prev()
        self.require(")")
        body = self.parse_block_into()
        return Node("for", self.span_from(start, self.prev()),
                    children=children + body,
                    cond=self.slice_text(header_start, header_end))

    def parse_try(self) -> list[Node]:
        start = self.require("try")
        resource_calls: list[Node] = []
        if self.at("("):
            # try-with-resources is outside the subset; consume the header
            self._skip_parens()
        body = self.parse_block_into()
        nodes = resource_calls + body
        while self.at("catch"):
            c_start = self.advance()
            self.require("(")
            self.accept("final")
            ty = self.try_type()
            if ty is None:
                raise self.error("expected an exception type")
            type_text, _, ty_last = ty
            while self.at("|"):
                self.advance()
                more = self.try_type()
                if more is None:
                    raise self.error("expected an exception type")
                type_text += " | " + more[0]
                ty_last = more[2]
            if self.peek().kind == "ident":
                self.advance()
            self.require(")")
            c_children = self.parse_block_into()
            nodes.append(Node("catch", self.span_from(c_start, self.prev()),
                              children=c_children, type_text=type_text))
        if self.at("finally"):
            self.advance()
            nodes.extend(self.parse_block_into())
        del start
        return nodes

    def try_vardecl(self, stop_at_semicolon: bool = False) -> list[Node] | None:
        mark = self.pos
        start = self.peek()
        self.accept("final")
        ty = self.try_type()
        if ty is None or self.peek().kind != "ident":
            self.pos = mark
            return None
        nxt = self.peek(1).text
        if nxt not in ("=", ";", ",", "["):
            self.pos = mark
            return None
        type_text, _, _ = ty
        out: list[Node] = []
        while True:
            name_tok = self.advance()
            decl_type = type_text
            while self.at("[") and self.peek(1).text == "]":
                self.advance()
                self.advance()
                decl_type += "[]"
            calls: list[Node] = []
            if self.accept("="):
                if self.at("{"):
                    self._skip_array_init(calls)
                else:
                    self.parse_expression(calls)
            node_start = start if not out else name_tok
            out.append(Node("vardecl", self.span_from(node_start, self.prev()),
                            children=calls, name=name_tok.text,
                            type_text=decl_type))
            if not self.accept(","):
                break
        if not stop_at_semicolon:
            self.require(";")
        return out

    def _skip_array_init(self, calls: list[Node]) -> None:
        self.require("{")
        depth = 1
        while depth and self.peek().kind != "eof":
            if self.at("{"):
                depth += 1
                self.advance()
            elif self.at("}"):
                depth -= 1
                self.advance()
            elif self.peek().kind == "ident" and self.peek(1).text == "(":
                self.parse_expression(calls)
            else:
                self.advance()

    # --- expressions -----------------------------------------------------

    def parse_expression(self, calls: list[Node]) -> None:
        self.parse_assignment(calls)

    def parse_assignment(self, calls: list[Node]) -> None:
        self.parse_ternary(calls)
        if self.peek().text in ("=", "+=", "-=", "*=", "/=", "%=", "&=",
                                "|=", "^=", "<<=", ">>=", ">>>="):
            self.advance()
            self.parse_assignment(calls)

    def parse_ternary(self, calls: list[Node]) -> None:
        self.parse_binary(calls, 0)
        if self.at("?"):
            self.advance()
            self.parse_assignment(calls)
            self.require(":")
            self.parse_ternary(calls)

    _BINARY_LEVELS = [
        ("||",),
        ("&&",),
        ("|",),
        ("^",),
        ("&",),
        ("==", "!="),
        ("<", ">", "<=", ">=", "instanceof"),
        ("<<", ">>", ">>>"),
        ("+", "-"),
        ("*", "/", "%"),
    ]

    def parse_binary(self, calls: list[Node], level: int) -> None:
        if level >= len(self._BINARY_LEVELS):
            self.parse_unary(calls)
            return
        ops = self._BINARY_LEVELS[level]
        self.parse_binary(calls, level + 1)
        while self.peek().text in ops:
            if self.accept("instanceof"):
                if self.try_type() is None:
                    raise self.error("expected a type after instanceof")
                continue
            self.advance()
            self.parse_binary(calls, level + 1)

    def parse_unary(self, calls: list[Node]) -> None:
        if self.peek().text in ("+", "-", "!", "~", "++", "--"):
            self.advance()
            self.parse_unary(calls)
            return
        if self.at("("):
            # possible cast: ( Type ) operand
            mark = self.pos
            self.advance()
            ty = self.try_type()
            if ty is not None and self.at(")"):
                self.advance()
                nxt = self.peek()
                is_primitive = ty[0].split("[")[0] in PRIMITIVES
                operand_follows = (
                    nxt.kind in ("ident", "number", "string", "char")
                    or nxt.text in ("(", "this", "super", "new", "!", "~"))
                if is_primitive or (operand_follows and ty[0][0].isupper()):
                    self.parse_unary(calls)
                    return
            self.pos = mark
        self.parse_postfix(calls)

    def parse_postfix(self, calls: list[Node]) -> None:
        self.parse_primary(calls)
        while True:
            if self.at(".") and self.peek(1).kind in ("ident", "keyword"):
                name_tok = self.peek(1)
                if self.peek(2).text == "(":
                    self.advance()
                    self.advance()
                    self._finish_call(name_tok, calls)
                else:
                    self.advance()
                    self.advance()
                continue
            if self.at("["):
                self.advance()
                self.parse_expression(calls)
                self.require("]")
                continue
            if self.peek().text in ("++", "--"):
                self.advance()
                continue
            return

    def _finish_call(self, name_tok: Token, calls: list[Node]) -> None:
        """Parse '(' args ')' after a callee name and record the call node."""
        self.require("(")
        inner: list[Node] = []
        if not self.at(")"):
            self.parse_assignment(inner)
            while self.accept(","):
                self.parse_assignment(inner)
        end = self.require(")")
        calls.append(Node("call", self.span_from(name_tok, end),
                          children=inner, name=name_tok.text))

    def parse_primary(self, calls: list[Node]) -> None:
        tok = self.peek()
        if tok.kind in ("number", "string", "char"):
            self.advance()
            return
        if tok.text in ("true", "false", "null", "this", "super"):
            self.advance()
            if tok.text in ("this", "super") and self.at("("):
                # constructor delegation; arguments may contain calls
                self._skip_call_args(calls)
            return
        if self.at("new"):
            self.advance()
            if self.try_type() is None:
                raise self.error("expected a type after new")
            if self.at("("):
                self._skip_call_args(calls)
                if self.at("{"):
                    self._skip_balanced_decl()   # anonymous class body
            while self.at("["):
                self.advance()
                if not self.at("]"):
                    self.parse_expression(calls)
                self.require("]")
            if self.at("{"):
                self._skip_array_init(calls)
            return
        if self.at("("):
            self.advance()
            self.parse_expression(calls)
            self.require(")")
            return
        if tok.kind == "ident":
            if self.peek(1).text == "(":
                self.advance()
                self._finish_call(tok, calls)
            else:
                self.advance()
            return
        raise self.error(f"unexpected token {tok.text!r} in expression")

    def _skip_call_args(self, calls: list[Node]) -> None:
        self.require("(")
        if not self.at(")"):
            self.parse_assignment(calls)
            while self.accept(","):
                self.parse_assignment(calls)
        self.require(")")


def parse_source(text: str, path: str | None = None) -> list[Node]:
    """Parse a compilation unit; returns its top-level class nodes."""
    return _Parser(text, path).parse_unit()
