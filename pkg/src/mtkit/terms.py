"""Logic terms: representation, concrete syntax, and sound unification.

Every other module speaks in terms of these four immutable node types.
Lists are sugar over ``$cons/2`` and ``$nil``; the two infix operators
``=`` and ``+`` exist only so that resource files can write ``key=Value``
and ``keep+"en"`` naturally.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

__all__ = [
    "Atom", "Var", "Int", "Compound", "Term", "Subst",
    "TermSyntaxError", "parse_term", "parse_clauses", "print_term",
    "unify", "apply_subst", "rename_apart", "fresh_salt", "match",
    "term_vars", "is_ground", "canonical", "variant_key",
    "mk", "make_list", "list_items", "NIL", "atoms_and_functors",
]


@dataclass(frozen=True, slots=True)
class Atom:
    name: str

    def __str__(self) -> str:
        return print_term(self)


@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Int:
    value: int

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True, slots=True)
class Compound:
    functor: str
    args: Tuple["Term", ...]

    def __post_init__(self) -> None:
        if not self.args:
            raise ValueError(f"compound {self.functor!r} needs at least one argument")
        if not self.functor:
            raise ValueError("empty functor")

    @property
    def arity(self) -> int:
        return len(self.args)

    def __str__(self) -> str:
        return print_term(self)


Term = Union[Atom, Var, Int, Compound]
Subst = Dict[str, Term]

NIL = Atom("$nil")
CONS = "$cons"


def mk(functor: str, *args: Term) -> Term:
    """Build an atom (no args) or a compound."""
    if not args:
        return Atom(functor)
    return Compound(functor, tuple(args))


def make_list(items: Iterable[Term], tail: Term = NIL) -> Term:
    out = tail
    for item in reversed(list(items)):
        out = Compound(CONS, (item, out))
    return out


def list_items(t: Term) -> List[Term]:
    """Elements of a proper list term; ValueError otherwise."""
    items = []
    while isinstance(t, Compound) and t.functor == CONS and t.arity == 2:
        items.append(t.args[0])
        t = t.args[1]
    if t != NIL:
        raise ValueError(f"not a proper list: {print_term(t)}")
    return items


# ---------------------------------------------------------------------------
# Lexer / parser

class TermSyntaxError(ValueError):
    def __init__(self, message: str, line: int, col: int, source: str = "<string>"):
        super().__init__(f"{source}:{line}:{col}: {message}")
        self.line = line
        self.col = col
        self.source = source


_PUNCT = "()[],|=+"


@dataclass
class _Tok:
    kind: str  # atom, qatom, var, int, punct, end, eof
    text: str
    line: int
    col: int


def _is_ident_char(c: str) -> bool:
    return c.isalnum() or c == "_"


def _tokenize(text: str, source: str) -> List[_Tok]:
    toks: List[_Tok] = []
    i, line, col = 0, 1, 1
    n = len(text)

    def adv(k: int) -> None:
        nonlocal i, line, col
        for _ in range(k):
            if text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        c = text[i]
        if c.isspace():
            adv(1)
            continue
        if c == "%":
            while i < n and text[i] != "\n":
                adv(1)
            continue
        start_line, start_col = line, col
        if c == "." and (i + 1 == n or text[i + 1].isspace() or text[i + 1] == "%"):
            toks.append(_Tok("end", ".", start_line, start_col))
            adv(1)
            continue
        if c.isdigit() or (c == "-" and i + 1 < n and text[i + 1].isdigit()):
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j + 1 < n and text[j] == "." and text[j + 1].isdigit():
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
                # decimal literals become atoms; there is no float term type
                toks.append(_Tok("qatom", text[i:j], start_line, start_col))
            else:
                toks.append(_Tok("int", text[i:j], start_line, start_col))
            adv(j - i)
            continue
        if c.isalpha() or c == "_" or c == "$":
            j = i + 1
            while j < n and _is_ident_char(text[j]):
                j += 1
            word = text[i:j]
            if c == "$" and len(word) == 1:
                raise TermSyntaxError("bare '$'", start_line, start_col, source)
            kind = "var" if (c == "_" or c.isupper()) else "atom"
            toks.append(_Tok(kind, word, start_line, start_col))
            adv(j - i)
            continue
        if c in "'\"":
            quote = c
            j = i + 1
            buf = []
            while True:
                if j >= n:
                    raise TermSyntaxError("unterminated quoted text", start_line, start_col, source)
                ch = text[j]
                if ch == "\\" and j + 1 < n:
                    nxt = text[j + 1]
                    buf.append({"n": "\n", "t": "\t"}.get(nxt, nxt))
                    j += 2
                    continue
                if ch == quote:
                    if j + 1 < n and text[j + 1] == quote:
                        buf.append(quote)
                        j += 2
                        continue
                    break
                buf.append(ch)
                j += 1
            toks.append(_Tok("qatom", "".join(buf), start_line, start_col))
            adv(j + 1 - i)
            continue
        if c in _PUNCT:
            toks.append(_Tok("punct", c, start_line, start_col))
            adv(1)
            continue
        raise TermSyntaxError(f"unexpected character {c!r}", start_line, start_col, source)
    toks.append(_Tok("eof", "", line, col))
    return toks


class _Parser:
    def __init__(self, text: str, source: str):
        self.toks = _tokenize(text, source)
        self.pos = 0
        self.source = source
        self.anon = itertools.count(1)

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def next(self) -> _Tok:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def error(self, msg: str, tok: Optional[_Tok] = None) -> TermSyntaxError:
        tok = tok or self.peek()
        return TermSyntaxError(msg, tok.line, tok.col, self.source)

    def expect(self, text: str) -> None:
        tok = self.next()
        if tok.kind != "punct" or tok.text != text:
            raise self.error(f"expected {text!r}, found {tok.text or tok.kind!r}", tok)

    def at_punct(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind == "punct" and tok.text == text

    # expr := sum ['=' sum]
    def expr(self) -> Term:
        left = self.sum()
        if self.at_punct("="):
            self.next()
            right = self.sum()
            return Compound("=", (left, right))
        return left

    def sum(self) -> Term:
        left = self.primary()
        while self.at_punct("+"):
            self.next()
            left = Compound("+", (left, self.primary()))
        return left

    def primary(self) -> Term:
        tok = self.next()
        if tok.kind == "var":
            if tok.text == "_":
                return Var(f"_G{next(self.anon)}")
            return Var(tok.text)
        if tok.kind == "int":
            return Int(int(tok.text))
        if tok.kind in ("atom", "qatom"):
            if self.at_punct("("):
                self.next()
                args = [self.expr()]
                while self.at_punct(","):
                    self.next()
                    args.append(self.expr())
                self.expect(")")
                if not tok.text:
                    raise self.error("empty functor", tok)
                return Compound(tok.text, tuple(args))
            return Atom(tok.text)
        if tok.kind == "punct" and tok.text == "[":
            if self.at_punct("]"):
                self.next()
                return NIL
            items = [self.expr()]
            while self.at_punct(","):
                self.next()
                items.append(self.expr())
            tail: Term = NIL
            if self.at_punct("|"):
                self.next()
                tail = self.expr()
            self.expect("]")
            return make_list(items, tail)
        if tok.kind == "punct" and tok.text == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise self.error(f"unexpected {tok.text or tok.kind!r}", tok)


def parse_term(text: str, source: str = "<string>") -> Term:
    """Parse a single term; a trailing clause terminator is tolerated."""
    p = _Parser(text, source)
    t = p.expr()
    if p.peek().kind == "end":
        p.next()
    if p.peek().kind != "eof":
        raise p.error(f"trailing input {p.peek().text!r}")
    return t


def parse_clauses(text: str, source: str = "<string>") -> List[Tuple[Term, int]]:
    """Parse a clause file. Returns ``(term, line)`` pairs in file order."""
    p = _Parser(text, source)
    out = []
    while p.peek().kind != "eof":
        line = p.peek().line
        p.anon = itertools.count(1)
        t = p.expr()
        if p.peek().kind != "end":
            raise p.error("expected '.' at end of clause")
        p.next()
        out.append((t, line))
    return out


# ---------------------------------------------------------------------------
# Printing

_OPS = {"=": 700, "+": 500}


def _atom_text(name: str) -> str:
    if name == "$nil":
        return "[]"
    body = name[1:] if name.startswith("$") else name
    if body and body[0].isalpha() and body[0].islower() and all(_is_ident_char(c) for c in body):
        return name
    escaped = name.replace("\\", "\\\\").replace("'", "\\'").replace("\n", "\\n").replace("\t", "\\t")
    return f"'{escaped}'"


def print_term(t: Term) -> str:
    parts: List[str] = []
    _emit(t, 999, parts)
    return "".join(parts)


def _emit(t: Term, maxprec: int, out: List[str]) -> None:
    if isinstance(t, Var):
        out.append(t.name)
    elif isinstance(t, Int):
        out.append(str(t.value))
    elif isinstance(t, Atom):
        out.append(_atom_text(t.name))
    elif t.functor == CONS and t.arity == 2:
        out.append("[")
        _emit(t.args[0], 999, out)
        rest = t.args[1]
        while isinstance(rest, Compound) and rest.functor == CONS and rest.arity == 2:
            out.append(", ")
            _emit(rest.args[0], 999, out)
            rest = rest.args[1]
        if rest != NIL:
            out.append("|")
            _emit(rest, 999, out)
        out.append("]")
    elif t.functor in _OPS and t.arity == 2:
        prec = _OPS[t.functor]
        if prec > maxprec:
            out.append("(")
        if t.functor == "=":
            _emit(t.args[0], prec - 1, out)
            out.append("=")
            _emit(t.args[1], prec - 1, out)
        else:
            _emit(t.args[0], prec, out)
            out.append("+")
            _emit(t.args[1], prec - 1, out)
        if prec > maxprec:
            out.append(")")
    else:
        out.append(_atom_text(t.functor))
        out.append("(")
        for k, a in enumerate(t.args):
            if k:
                out.append(", ")
            _emit(a, 999, out)
        out.append(")")


# ---------------------------------------------------------------------------
# Substitution and unification

def _walk(t: Term, b: Subst) -> Term:
    while isinstance(t, Var) and t.name in b:
        t = b[t.name]
    return t


def _occurs(name: str, t: Term, b: Subst) -> bool:
    stack = [t]
    while stack:
        x = _walk(stack.pop(), b)
        if isinstance(x, Var):
            if x.name == name:
                return True
        elif isinstance(x, Compound):
            stack.extend(x.args)
    return False


def _resolve(t: Term, b: Subst) -> Term:
    t = _walk(t, b)
    if isinstance(t, Compound):
        return Compound(t.functor, tuple(_resolve(a, b) for a in t.args))
    return t


def unify(t1: Term, t2: Term, subst: Optional[Subst] = None) -> Optional[Subst]:
    """Most general unifier of ``t1`` and ``t2`` (extending ``subst``), or None.

    The occurs-check is always on. The result is idempotent: no variable it
    binds appears in any of its range terms.
    """
    b: Subst = dict(subst) if subst else {}
    stack = [(t1, t2)]
    while stack:
        a, c = stack.pop()
        a = _walk(a, b)
        c = _walk(c, b)
        if a == c:
            continue
        if isinstance(a, Var):
            if _occurs(a.name, c, b):
                return None
            b[a.name] = c
        elif isinstance(c, Var):
            if _occurs(c.name, a, b):
                return None
            b[c.name] = a
        elif isinstance(a, Compound) and isinstance(c, Compound):
            if a.functor != c.functor or a.arity != c.arity:
                return None
            stack.extend(zip(a.args, c.args))
        else:
            return None
    return {k: _resolve(v, b) for k, v in b.items()}


def apply_subst(subst: Subst, t: Term) -> Term:
    if not subst:
        return t
    if isinstance(t, Var):
        return subst.get(t.name, t)
    if isinstance(t, Compound):
        return Compound(t.functor, tuple(apply_subst(subst, a) for a in t.args))
    return t


def match(pattern: Term, t: Term, subst: Optional[Subst] = None) -> Optional[Subst]:
    """One-way matching: bind only ``pattern`` variables so that it equals ``t``.

    Variables of ``t`` are treated as constants. Assumes the two terms share
    no variables (rename the pattern apart first).
    """
    b: Subst = dict(subst) if subst else {}
    stack = [(pattern, t)]
    while stack:
        p, x = stack.pop()
        if isinstance(p, Var):
            bound = b.get(p.name)
            if bound is None:
                b[p.name] = x
            elif bound != x:
                return None
        elif isinstance(p, Compound):
            if not isinstance(x, Compound) or p.functor != x.functor or p.arity != x.arity:
                return None
            stack.extend(zip(p.args, x.args))
        elif p != x:
            return None
    return b


_salts = itertools.count(1)


def fresh_salt() -> int:
    """Session-unique integer for :func:`rename_apart`."""
    return next(_salts)


def rename_apart(t: Term, salt: int) -> Term:
    if isinstance(t, Var):
        return Var(f"{t.name}_{salt}")
    if isinstance(t, Compound):
        return Compound(t.functor, tuple(rename_apart(a, salt) for a in t.args))
    return t


def term_vars(t: Term) -> List[str]:
    """Variable names in first-occurrence (left-to-right) order."""
    seen: Dict[str, None] = {}
    _collect_vars(t, seen)
    return list(seen)


def _collect_vars(t: Term, seen: Dict[str, None]) -> None:
    if isinstance(t, Var):
        seen.setdefault(t.name, None)
    elif isinstance(t, Compound):
        for a in t.args:
            _collect_vars(a, seen)


def is_ground(t: Term) -> bool:
    if isinstance(t, Var):
        return False
    if isinstance(t, Compound):
        return all(is_ground(a) for a in t.args)
    return True


def canonical(t: Term, prefix: str = "V") -> Term:
    """Rename variables to ``V0, V1, ...`` by first occurrence."""
    names = term_vars(t)
    if not names:
        return t
    return apply_subst({n: Var(f"{prefix}{k}") for k, n in enumerate(names)}, t)


def variant_key(t: Term) -> str:
    return print_term(canonical(t))


def atoms_and_functors(t: Term) -> Iterator[str]:
    """Every atom name and compound functor occurring in ``t``."""
    if isinstance(t, Atom):
        yield t.name
    elif isinstance(t, Compound):
        yield t.functor
        for a in t.args:
            yield from atoms_and_functors(a)
