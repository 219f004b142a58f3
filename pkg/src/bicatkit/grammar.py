"""Concrete syntax for 1-/2-cell terms.

1-cell terms: ``id[A]``, bare generator names, ``(t*u)``; unparenthesized
``*``-chains are accepted and associate to the left, so ``h*g*f`` reads as
``((h*g)*f)``.  2-cell terms: ``1[t]``, generator names, ``a[h;g;f]``,
``l[f]``, ``r[f]``, ``inv(c)`` for the three structural leaves only,
``(v:b.a)`` for vertical and ``(h:b*a)`` for horizontal composition.
Whitespace is insignificant; names match ``[A-Za-z][A-Za-z0-9_]*``.
Printers emit no whitespace and parenthesize every composite, and printing
then parsing is the identity on terms.
"""
from __future__ import annotations

from .errors import ParseError
from .freebicat import (Assoc, Comp, Gen, GenTwo, HComp, Id, IdTwo, InvAssoc,
                        InvLUnit, InvRUnit, LUnit, OneTerm, RUnit, TwoTerm,
                        VComp)

_PUNCT = "()[];*.:"


def _tokens(text: str) -> list[tuple[str, str]]:
    out = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _PUNCT:
            out.append((ch, ch))
            i += 1
            continue
        if ch == "1":
            out.append(("one", "1"))
            i += 1
            continue
        if ("a" <= ch <= "z") or ("A" <= ch <= "Z"):
            j = i + 1
            while j < n and (("a" <= text[j] <= "z") or ("A" <= text[j] <= "Z")
                             or ("0" <= text[j] <= "9") or text[j] == "_"):
                j += 1
            out.append(("name", text[i:j]))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r} at offset {i}")
    out.append(("eof", ""))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self, ahead: int = 0) -> tuple[str, str]:
        k = min(self.i + ahead, len(self.toks) - 1)
        return self.toks[k]

    def take(self) -> tuple[str, str]:
        tok = self.toks[self.i]
        if tok[0] != "eof":
            self.i += 1
        return tok

    def expect(self, kind: str) -> str:
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}")
        return tok[1]

    def done(self) -> None:
        if self.peek()[0] != "eof":
            raise ParseError(f"trailing input at {self.peek()[1]!r}")

    # 1-cell terms

    def one_term(self) -> OneTerm:
        t = self.one_atom()
        while self.peek()[0] == "*":
            self.take()
            t = Comp(t, self.one_atom())
        return t

    def one_atom(self) -> OneTerm:
        kind, value = self.peek()
        if kind == "name":
            if value == "id" and self.peek(1)[0] == "[":
                self.take()
                self.expect("[")
                zero = self.expect("name")
                self.expect("]")
                return Id(zero)
            self.take()
            return Gen(value)
        if kind == "(":
            self.take()
            t = self.one_term()
            self.expect(")")
            return t
        raise ParseError(f"expected a 1-cell term, found {value!r}")

    # 2-cell terms

    def two_term(self) -> TwoTerm:
        kind, value = self.peek()
        if kind == "one":
            self.take()
            self.expect("[")
            t = self.one_term()
            self.expect("]")
            return IdTwo(t)
        if kind == "name":
            if value == "a" and self.peek(1)[0] == "[":
                self.take()
                self.expect("[")
                h = self.one_term()
                self.expect(";")
                g = self.one_term()
                self.expect(";")
                f = self.one_term()
                self.expect("]")
                return Assoc(h, g, f)
            if value == "l" and self.peek(1)[0] == "[":
                self.take()
                self.expect("[")
                f = self.one_term()
                self.expect("]")
                return LUnit(f)
            if value == "r" and self.peek(1)[0] == "[":
                self.take()
                self.expect("[")
                f = self.one_term()
                self.expect("]")
                return RUnit(f)
            if value == "inv" and self.peek(1)[0] == "(":
                self.take()
                self.expect("(")
                inner = self.two_term()
                self.expect(")")
                if isinstance(inner, Assoc):
                    return InvAssoc(inner.h, inner.g, inner.f)
                if isinstance(inner, LUnit):
                    return InvLUnit(inner.f)
                if isinstance(inner, RUnit):
                    return InvRUnit(inner.f)
                raise ParseError(
                    "inv(...) applies only to the structural leaves a, l, r")
            self.take()
            return GenTwo(value)
        if kind == "(":
            head, hval = self.peek(1)
            if head == "name" and hval == "v" and self.peek(2)[0] == ":":
                self.take()
                self.take()
                self.take()
                after = self.two_term()
                self.expect(".")
                before = self.two_term()
                self.expect(")")
                return VComp(after, before)
            if head == "name" and hval == "h" and self.peek(2)[0] == ":":
                self.take()
                self.take()
                self.take()
                left = self.two_term()
                self.expect("*")
                right = self.two_term()
                self.expect(")")
                return HComp(left, right)
            raise ParseError(
                "expected (v:...) or (h:...) after '(' in a 2-cell term")
        raise ParseError(f"expected a 2-cell term, found {value!r}")


def parse_one_term(text: str) -> OneTerm:
    p = _Parser(text)
    t = p.one_term()
    p.done()
    return t


def parse_two_term(text: str) -> TwoTerm:
    p = _Parser(text)
    t = p.two_term()
    p.done()
    return t


def print_one_term(t: OneTerm) -> str:
    if isinstance(t, Id):
        return f"id[{t.zero}]"
    if isinstance(t, Gen):
        return t.name
    if isinstance(t, Comp):
        return f"({print_one_term(t.left)}*{print_one_term(t.right)})"
    raise ParseError(f"not a 1-cell term: {t!r}")


def print_two_term(u: TwoTerm) -> str:
    if isinstance(u, IdTwo):
        return f"1[{print_one_term(u.one)}]"
    if isinstance(u, GenTwo):
        return u.name
    if isinstance(u, Assoc):
        return (f"a[{print_one_term(u.h)};{print_one_term(u.g)};"
                f"{print_one_term(u.f)}]")
    if isinstance(u, LUnit):
        return f"l[{print_one_term(u.f)}]"
    if isinstance(u, RUnit):
        return f"r[{print_one_term(u.f)}]"
    if isinstance(u, InvAssoc):
        return f"inv({print_two_term(Assoc(u.h, u.g, u.f))})"
    if isinstance(u, InvLUnit):
        return f"inv({print_two_term(LUnit(u.f))})"
    if isinstance(u, InvRUnit):
        return f"inv({print_two_term(RUnit(u.f))})"
    if isinstance(u, VComp):
        return f"(v:{print_two_term(u.after)}.{print_two_term(u.before)})"
    if isinstance(u, HComp):
        return f"(h:{print_two_term(u.left)}*{print_two_term(u.right)})"
    raise ParseError(f"not a 2-cell term: {u!r}")
