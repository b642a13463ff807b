"""TPTP-style (fof subset) serialization and parsing of formulas.

A superscripted predicate p^0 renders as p__0, p^1 as p__1; primed
copies get a _pr suffix (p__0_pr).  Only the connectives the pipeline
produces are supported: ~ & | => <=> ! ? $true $false.
"""

from __future__ import annotations

import re

from .fol import (FALSE, TRUE, And, Exists, FolAtom, Forall, Formula, Iff,
                  Implies, Not, Or, SuperPred, Truth, conj, disj, exists,
                  forall, neg)
from .lp import Compound, ParseError, Term, Var

_PRED_RE = re.compile(r"^([a-z][A-Za-z0-9_]*?)__([01])(_pr)?$")


def pred_name(p: SuperPred) -> str:
    return "%s__%d%s" % (p.base, p.sup, "_pr" if p.primed else "")


def term_text(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if not t.args:
        return t.functor
    return "%s(%s)" % (t.functor, ",".join(term_text(a) for a in t.args))


def formula_text(f: Formula) -> str:
    if isinstance(f, Truth):
        return "$true" if f.positive else "$false"
    if isinstance(f, FolAtom):
        if not f.args:
            return pred_name(f.pred)
        return "%s(%s)" % (pred_name(f.pred),
                           ",".join(term_text(a) for a in f.args))
    if isinstance(f, Not):
        return "~ %s" % _unit(f.body)
    if isinstance(f, And):
        return " & ".join(_unit(p) for p in f.parts)
    if isinstance(f, Or):
        return " | ".join(_unit(p) for p in f.parts)
    if isinstance(f, Implies):
        return "%s => %s" % (_unit(f.lhs), _unit(f.rhs))
    if isinstance(f, Iff):
        return "%s <=> %s" % (_unit(f.lhs), _unit(f.rhs))
    if isinstance(f, Forall):
        return "! [%s] : %s" % (",".join(v.name for v in f.vars), _unit(f.body))
    if isinstance(f, Exists):
        return "? [%s] : %s" % (",".join(v.name for v in f.vars), _unit(f.body))
    raise TypeError(f"not a formula: {f!r}")


def _unit(f: Formula) -> str:
    if isinstance(f, (Truth, FolAtom)):
        return formula_text(f)
    return "(%s)" % formula_text(f)


def fof_line(name: str, role: str, f: Formula) -> str:
    return "fof(%s, %s, %s)." % (name, role, formula_text(f))


def fof_lines(pairs) -> str:
    """pairs: iterable of (name, role, formula)."""
    return "\n".join(fof_line(n, r, f) for n, r, f in pairs) + "\n"


# ---------------------------------------------------------------------------
# Parsing

_TOK_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<comment>%[^\n]*)
  | (?P<lpar>\()
  | (?P<rpar>\))
  | (?P<lbr>\[)
  | (?P<rbr>\])
  | (?P<comma>,)
  | (?P<dot>\.)
  | (?P<colon>:)
  | (?P<iff><=>)
  | (?P<imp>=>)
  | (?P<and>&)
  | (?P<or>\|)
  | (?P<not>~)
  | (?P<all>!)
  | (?P<ex>\?)
  | (?P<const>\$(true|false))
  | (?P<var>[A-Z_][A-Za-z0-9_]*)
  | (?P<name>[a-z][A-Za-z0-9_]*)
""", re.VERBOSE)


def _tokenize(text: str) -> list:
    toks = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOK_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind not in ("ws", "comment"):
            toks.append((kind, value, line, col))
        nl = value.count("\n")
        if nl:
            line += nl
            col = len(value) - value.rfind("\n")
        else:
            col += len(value)
        pos = m.end()
    toks.append(("eof", "", line, col))
    return toks


class _TptpParser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0
        self.arities: dict = {}

    def peek(self):
        return self.toks[self.pos]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def error(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], tok[3])

    def expect(self, kind):
        t = self.peek()
        if t[0] != kind:
            self.error(f"expected {kind!r}, found {t[1]!r}")
        return self.next()

    def units(self) -> list:
        out = []
        while self.peek()[0] != "eof":
            out.append(self.fof())
        return out

    def fof(self):
        t = self.expect("name")
        if t[1] != "fof":
            self.error("expected 'fof'", t)
        self.expect("lpar")
        name = self.expect("name")[1]
        self.expect("comma")
        role = self.expect("name")[1]
        self.expect("comma")
        f = self.formula()
        self.expect("rpar")
        self.expect("dot")
        return (name, role, f)

    def formula(self) -> Formula:
        lhs = self.assoc()
        t = self.peek()
        if t[0] == "imp":
            self.next()
            return Implies(lhs, self.formula())
        if t[0] == "iff":
            self.next()
            return Iff(lhs, self.formula())
        return lhs

    def assoc(self) -> Formula:
        first = self.unitary()
        t = self.peek()
        if t[0] == "and":
            parts = [first]
            while self.peek()[0] == "and":
                self.next()
                parts.append(self.unitary())
            return conj(parts)
        if t[0] == "or":
            parts = [first]
            while self.peek()[0] == "or":
                self.next()
                parts.append(self.unitary())
            return disj(parts)
        return first

    def unitary(self) -> Formula:
        t = self.peek()
        if t[0] == "not":
            self.next()
            return neg(self.unitary())
        if t[0] in ("all", "ex"):
            self.next()
            self.expect("lbr")
            vs = [Var(self.expect("var")[1])]
            while self.peek()[0] == "comma":
                self.next()
                vs.append(Var(self.expect("var")[1]))
            self.expect("rbr")
            self.expect("colon")
            body = self.unitary()
            return forall(vs, body) if t[0] == "all" else exists(vs, body)
        if t[0] == "lpar":
            self.next()
            f = self.formula()
            self.expect("rpar")
            return f
        if t[0] == "const":
            self.next()
            return TRUE if t[1] == "$true" else FALSE
        if t[0] == "name":
            return self.atom()
        self.error(f"expected a formula, found {t[1]!r}")

    def atom(self) -> Formula:
        t = self.expect("name")
        m = _PRED_RE.match(t[1])
        if not m:
            self.error(f"predicate {t[1]!r} lacks a __0/__1 superscript", t)
        args: list = []
        if self.peek()[0] == "lpar":
            self.next()
            args.append(self.term())
            while self.peek()[0] == "comma":
                self.next()
                args.append(self.term())
            self.expect("rpar")
        base, sup, primed = m.group(1), int(m.group(2)), bool(m.group(3))
        key = (base, primed)
        known = self.arities.get(key)
        if known is None:
            self.arities[key] = len(args)
        elif known != len(args):
            self.error(f"predicate {t[1]!r} used with arities {known} and {len(args)}", t)
        return FolAtom(SuperPred(base, sup, len(args), primed), tuple(args))

    def term(self) -> Term:
        t = self.peek()
        if t[0] == "var":
            self.next()
            return Var(t[1])
        if t[0] != "name":
            self.error(f"expected a term, found {t[1]!r}")
        self.next()
        args: list = []
        if self.peek()[0] == "lpar":
            self.next()
            args.append(self.term())
            while self.peek()[0] == "comma":
                self.next()
                args.append(self.term())
            self.expect("rpar")
        return Compound(t[1], tuple(args))


def parse_tptp(text: str) -> list:
    """Parse fof units; returns a list of (name, role, formula)."""
    return _TptpParser(text).units()


def parse_tptp_formula(text: str) -> Formula:
    """Conjunction of all fof units in the text."""
    units = parse_tptp(text)
    return conj(f for _, _, f in units)
