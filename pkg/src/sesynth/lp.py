"""AST, parser and printer for disjunctive logic programs with negation in heads.

A rule has the shape

    a1 ; ... ; ak ; not a(k+1) ; ... ; not al :-
        a(l+1), ..., am, not a(m+1), ..., not an.

with four components: positive head, negative head, positive body,
negative body.  Programs compare as sets of rules; the printer keeps
input order so round trips are stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

# Names reserved for machine-generated symbols (Skolem constants, primed
# predicate copies).  The parser rejects them so that decoded output can
# never be captured by user vocabulary.
RESERVED_PREFIX = "sk_"
RESERVED_SUFFIX = "_pr"


class ParseError(Exception):
    """Syntax or well-formedness error, with 1-based line/column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


# ---------------------------------------------------------------------------
# Terms

@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Compound:
    functor: str
    args: tuple = ()

    def __str__(self) -> str:
        if not self.args:
            return self.functor
        return "%s(%s)" % (self.functor, ",".join(str(a) for a in self.args))


Term = Var | Compound


def const(name: str) -> Compound:
    return Compound(name, ())


def term_vars(t: Term, acc: list | None = None) -> list:
    """Variables of a term in first-occurrence order, without duplicates."""
    if acc is None:
        acc = []
    if isinstance(t, Var):
        if t not in acc:
            acc.append(t)
    else:
        for a in t.args:
            term_vars(a, acc)
    return acc


def term_functions(t: Term) -> set:
    """All (functor, arity) pairs of a term, constants included."""
    out = set()
    if isinstance(t, Compound):
        out.add((t.functor, len(t.args)))
        for a in t.args:
            out |= term_functions(a)
    return out


# ---------------------------------------------------------------------------
# Atoms, rules, programs

@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple = ()

    @property
    def arity(self) -> int:
        return len(self.args)

    def __str__(self) -> str:
        if not self.args:
            return self.pred
        return "%s(%s)" % (self.pred, ",".join(str(a) for a in self.args))


def _dedup(atoms: Iterable[Atom]) -> tuple:
    seen = []
    for a in atoms:
        if a not in seen:
            seen.append(a)
    return tuple(seen)


@dataclass(frozen=True)
class Rule:
    pos_head: tuple = ()
    neg_head: tuple = ()
    pos_body: tuple = ()
    neg_body: tuple = ()

    @staticmethod
    def make(pos_head=(), neg_head=(), pos_body=(), neg_body=()) -> "Rule":
        """Normalizing constructor: drops duplicate atoms per component."""
        return Rule(_dedup(pos_head), _dedup(neg_head),
                    _dedup(pos_body), _dedup(neg_body))

    def atoms(self) -> Iterator[Atom]:
        yield from self.pos_head
        yield from self.neg_head
        yield from self.pos_body
        yield from self.neg_body

    def variables(self) -> list:
        """Rule variables in first-occurrence order (heads before bodies)."""
        acc: list = []
        for a in self.atoms():
            for t in a.args:
                term_vars(t, acc)
        return acc

    def __str__(self) -> str:
        return print_rule(self)


@dataclass(frozen=True, eq=False)
class Program:
    rules: tuple = ()

    def __eq__(self, other) -> bool:
        # Set semantics: duplicate rules and rule order do not matter.
        if not isinstance(other, Program):
            return NotImplemented
        return frozenset(self.rules) == frozenset(other.rules)

    def __hash__(self) -> int:
        return hash(frozenset(self.rules))

    def union(self, other: "Program") -> "Program":
        return Program(self.rules + other.rules)

    def __str__(self) -> str:
        return print_program(self)


def program_predicates(p: Program) -> set:
    """All (name, arity) predicate pairs occurring in the program."""
    return {(a.pred, a.arity) for r in p.rules for a in r.atoms()}


def program_functions(p: Program) -> set:
    """All (functor, arity) pairs in any term, constants included."""
    out = set()
    for r in p.rules:
        for a in r.atoms():
            for t in a.args:
                out |= term_functions(t)
    return out


# ---------------------------------------------------------------------------
# Printer

def _print_lit(atom: Atom, negated: bool) -> str:
    return ("not " + str(atom)) if negated else str(atom)


def print_rule(r: Rule) -> str:
    head = [_print_lit(a, False) for a in r.pos_head]
    head += [_print_lit(a, True) for a in r.neg_head]
    body = [_print_lit(a, False) for a in r.pos_body]
    body += [_print_lit(a, True) for a in r.neg_body]
    if head and body:
        return "%s :- %s." % (" ; ".join(head), ", ".join(body))
    if head:
        return "%s." % " ; ".join(head)
    return ":- %s." % ", ".join(body)


def print_program(p: Program) -> str:
    if not p.rules:
        return ""
    return "\n".join(print_rule(r) for r in p.rules) + "\n"


# ---------------------------------------------------------------------------
# Parser

_PUNCT = (":-", ".", ",", ";", "(", ")")


class _Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col


def _tokenize(text: str) -> list:
    toks = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c == "%":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if text.startswith(":-", i):
            toks.append(_Token("punct", ":-", line, col))
            i += 2
            col += 2
            continue
        if c in ".,;()":
            toks.append(_Token("punct", c, line, col))
            i += 1
            col += 1
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if word == "not":
                toks.append(_Token("not", word, line, col))
            elif word[0].isupper() or word[0] == "_":
                toks.append(_Token("var", word, line, col))
            else:
                toks.append(_Token("name", word, line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", line, col)
    toks.append(_Token("eof", "", line, col))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0
        self.pred_arity: dict = {}

    def peek(self) -> _Token:
        return self.toks[self.pos]

    def next(self) -> _Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def error(self, message: str, tok: _Token | None = None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.col)

    def expect(self, value: str) -> _Token:
        t = self.peek()
        if t.kind != "punct" or t.value != value:
            shown = t.value if t.value else "end of input"
            self.error(f"expected {value!r}, found {shown!r}")
        return self.next()

    def at(self, value: str) -> bool:
        t = self.peek()
        return t.kind == "punct" and t.value == value

    def _check_name(self, tok: _Token):
        if tok.value.startswith(RESERVED_PREFIX) or tok.value.endswith(RESERVED_SUFFIX):
            self.error(f"identifier {tok.value!r} uses a reserved namespace", tok)

    def term(self) -> Term:
        t = self.peek()
        if t.kind == "var":
            self.next()
            return Var(t.value)
        if t.kind != "name":
            shown = t.value if t.value else "end of input"
            self.error(f"expected a term, found {shown!r}")
        self.next()
        self._check_name(t)
        args: list = []
        if self.at("("):
            self.next()
            args.append(self.term())
            while self.at(","):
                self.next()
                args.append(self.term())
            self.expect(")")
        return Compound(t.value, tuple(args))

    def atom(self) -> Atom:
        t = self.peek()
        if t.kind != "name":
            shown = t.value if t.value else "end of input"
            self.error(f"expected a predicate name, found {shown!r}")
        self.next()
        self._check_name(t)
        args: list = []
        if self.at("("):
            self.next()
            args.append(self.term())
            while self.at(","):
                self.next()
                args.append(self.term())
            self.expect(")")
        atom = Atom(t.value, tuple(args))
        known = self.pred_arity.get(atom.pred)
        if known is None:
            self.pred_arity[atom.pred] = atom.arity
        elif known != atom.arity:
            self.error(
                f"predicate {atom.pred!r} used with arities {known} and {atom.arity}",
                t)
        return atom

    def literal(self) -> tuple:
        if self.peek().kind == "not":
            self.next()
            return (True, self.atom())
        return (False, self.atom())

    def rule(self) -> Rule:
        start = self.peek()
        pos_head: list = []
        neg_head: list = []
        pos_body: list = []
        neg_body: list = []
        if not self.at(":-") and not self.at("."):
            neg, a = self.literal()
            (neg_head if neg else pos_head).append(a)
            while self.at(";"):
                self.next()
                neg, a = self.literal()
                (neg_head if neg else pos_head).append(a)
        if self.at(":-"):
            self.next()
            neg, a = self.literal()
            (neg_body if neg else pos_body).append(a)
            while self.at(","):
                self.next()
                neg, a = self.literal()
                (neg_body if neg else pos_body).append(a)
        self.expect(".")
        if not (pos_head or neg_head or pos_body or neg_body):
            self.error("a rule needs a head or a body", start)
        return Rule.make(pos_head, neg_head, pos_body, neg_body)

    def program(self) -> Program:
        rules: list = []
        while self.peek().kind != "eof":
            rules.append(self.rule())
        return Program(tuple(rules))


def parse_program(text: str) -> Program:
    """Parse program text; raises ParseError with line/column on bad input."""
    return _Parser(text).program()


def parse_rule(text: str) -> Rule:
    p = parse_program(text)
    if len(p.rules) != 1:
        raise ParseError("expected exactly one rule", 1, 1)
    return p.rules[0]
