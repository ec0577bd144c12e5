"""Recursive-descent parser shared by scalars, free-algebra and double elements.

Grammar (whitespace insignificant)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' exponent)?
    exponent := ['-'] INT | '(' ['-'] INT ')'
    atom   := INT | 'v' | '(' expr ')' | NAME '[' arg (',' arg)* ']'

Values are combined with Python operators, so any type implementing
``+ - * /`` and ``**`` can be produced.  Bracketed atoms are delegated to a
callback.
"""
import re


class ParseError(ValueError):
    """Malformed expression; carries a 1-based line and column."""

    def __init__(self, message, text="", pos=0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.line = line
        self.column = col
        super().__init__(f"{message} at line {line}, column {col}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class Parser:
    def __init__(self, text, const, atom=None):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.const = const
        self.atom_cb = atom

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value or tok[0] == "end":
            self.fail(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok)
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        val = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return val

    def expr(self):
        val = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            tok = self.take()
            rhs = self.unary()
            if tok[1] == "*":
                val = val * rhs
            else:
                try:
                    val = val / rhs
                except ZeroDivisionError:
                    self.fail("division by zero", tok)
                except TypeError:
                    self.fail("division by a non-scalar", tok)
        return val

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            val = self.unary()
            return -val if tok[1] == "-" else val
        return self.power()

    def exponent(self):
        paren = False
        if self.peek()[1] == "(":
            self.take()
            paren = True
        sign = 1
        if self.peek()[1] in ("-", "+"):
            sign = -1 if self.take()[1] == "-" else 1
        tok = self.take()
        if tok[0] != "int":
            self.fail("expected an integer exponent", tok)
        if paren:
            self.expect(")")
        return sign * int(tok[1])

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            tok = self.take()
            e = self.exponent()
            try:
                return base ** e
            except ZeroDivisionError:
                self.fail("negative power of zero", tok)
            except (TypeError, ValueError) as exc:
                self.fail(str(exc), tok)
        return base

    def atom(self):
        tok = self.take()
        kind, value, _ = tok
        if kind == "int":
            return self.const(int(value))
        if kind == "op" and value == "(":
            val = self.expr()
            self.expect(")")
            return val
        if kind == "name":
            if value == "v":
                return self.const("v")
            if self.peek()[1] == "[":
                self.take()
                args = [self.arg()]
                while self.peek()[1] == ",":
                    self.take()
                    args.append(self.arg())
                self.expect("]")
                if self.atom_cb is None:
                    self.fail(f"unexpected generator {value!r}", tok)
                try:
                    return self.atom_cb(value, args)
                except (KeyError, ValueError) as exc:
                    if isinstance(exc, ParseError):
                        raise
                    self.fail(f"bad generator {value}[{','.join(map(str, args))}]: {exc}", tok)
            self.fail(f"unknown symbol {value!r}", tok)
        self.fail(f"unexpected {value or 'end of input'!r}", tok)

    def arg(self):
        tok = self.take()
        if tok[0] == "name":
            return tok[1]
        sign = 1
        if tok[1] == "-":
            sign = -1
            tok = self.take()
        if tok[0] == "int":
            return sign * int(tok[1])
        self.fail("expected a name or integer", tok)
