"""Extraction of a logic program from a formula that encodes one.

The clausal form splits into clauses with at least one 0-superscripted
literal (each of which maps to a rule directly) and all-superscript-1
clauses, of which those already entailed by the renamed 0-part can be
dropped.  Simplification steps are valid modulo the persistence axioms.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fol import (Clause, Formula, Lit, clausify, formula_preds, is_universal,
                  match_term)
from .lp import Atom, Program, Rule, Var


class NotAnEncoding(Exception):
    """The formula cannot be read back as a logic program."""


def _rename_apart(c: Clause, tag: str) -> Clause:
    ren = {v: Var(v.name + tag) for v in c.variables()}
    return c.subst(ren)


def _covers(dl: Lit, cl: Lit) -> bool:
    """May literal dl stand in for cl modulo persistence?  A positive
    0-literal also covers its 1-copy, a negative 1-literal its 0-copy."""
    if dl.pos != cl.pos:
        return False
    dp, cp = dl.pred, cl.pred
    if (dp.base, dp.arity, dp.primed) != (cp.base, cp.arity, cp.primed):
        return False
    if dp.sup == cp.sup:
        return True
    if dl.pos:
        return dp.sup == 0 and cp.sup == 1
    return dp.sup == 1 and cp.sup == 0


def s_subsumes(d: Clause, c: Clause) -> bool:
    """True iff some instance of d entails c given the persistence axioms."""
    d = _rename_apart(d, "@s")

    def search(pending, s):
        if not pending:
            return True
        dl = pending[0]
        for cl in c.lits:
            if not _covers(dl, cl):
                continue
            trial = dict(s)
            if all(match_term(a, b, trial) for a, b in zip(dl.args, cl.args)):
                if search(pending[1:], trial):
                    return True
        return False

    return search(list(d.lits), {})


def _dedup_lits(c: Clause) -> Clause:
    out: list = []
    for l in c.lits:
        if l not in out:
            out.append(l)
    return Clause(tuple(out))


def simplify_modulo_s(clauses: list) -> list:
    """Drop duplicate literals, tautologies, and S-subsumed clauses.

    The result conjoined with the persistence axioms is equivalent to the
    input conjoined with them.  Of mutually subsuming clauses the first
    one survives.
    """
    cleaned = []
    for c in clauses:
        c = _dedup_lits(c)
        if c.is_tautology():
            continue
        cleaned.append(c)
    out = []
    for i, c in enumerate(cleaned):
        dropped = False
        for j, d in enumerate(cleaned):
            if i == j:
                continue
            if s_subsumes(d, c) and (j < i or not s_subsumes(c, d)):
                dropped = True
                break
        if not dropped:
            out.append(c)
    return out


@dataclass
class DecodePartition:
    m0: list
    m1_keep: list
    m1_drop: list
    # (dropped clause, clause of m0 whose renaming subsumes it)
    witnesses: list = field(default_factory=list)


def _rename_clause(c: Clause) -> Clause:
    return Clause(tuple(Lit(l.pos, l.pred.with_sup(1), l.args) for l in c.lits))


def partition_m1(m0: list, m1: list) -> DecodePartition:
    """Keep only the all-1 clauses not subsumed by a renamed 0-clause."""
    keep, drop, witnesses = [], [], []
    renamed = [(_rename_clause(d), d) for d in m0]
    for c in m1:
        witness = None
        for rd, d in renamed:
            if _plain_subsumes(rd, c):
                witness = d
                break
        if witness is None:
            keep.append(c)
        else:
            drop.append(c)
            witnesses.append((c, witness))
    return DecodePartition(list(m0), keep, drop, witnesses)


def _plain_subsumes(d: Clause, c: Clause) -> bool:
    d = _rename_apart(d, "@s")

    def search(pending, s):
        if not pending:
            return True
        dl = pending[0]
        for cl in c.lits:
            if dl.pos != cl.pos or dl.pred != cl.pred:
                continue
            trial = dict(s)
            if all(match_term(a, b, trial) for a, b in zip(dl.args, cl.args)):
                if search(pending[1:], trial):
                    return True
        return False

    return search(list(d.lits), {})


def _atom_key(a: Atom):
    return (a.pred, a.arity, tuple(str(t) for t in a.args))


def clause_to_rule(c: Clause) -> Rule:
    """Read a clause as a rule: positive 0-literals are the positive head,
    negative 1-literals the negative head, negative 0-literals the positive
    body, positive 1-literals the negative body."""
    pos_head, neg_head, pos_body, neg_body = [], [], [], []
    for l in c.lits:
        atom = Atom(l.pred.base, l.args)
        if l.pos and l.pred.sup == 0:
            pos_head.append(atom)
        elif not l.pos and l.pred.sup == 1:
            neg_head.append(atom)
        elif not l.pos and l.pred.sup == 0:
            pos_body.append(atom)
        else:
            neg_body.append(atom)
    return Rule.make(sorted(pos_head, key=_atom_key),
                     sorted(neg_head, key=_atom_key),
                     sorted(pos_body, key=_atom_key),
                     sorted(neg_body, key=_atom_key))


def decode(f: Formula, *, partition: str = "subsumption",
           simplify: bool = True) -> Program:
    """Extract a program from a formula that encodes one.

    Whether f really encodes a program (the semantic condition) is the
    caller's concern; this checks only that the clausal form has the
    required 0/1 shape.  partition is "subsumption" (drop redundant all-1
    clauses, usually smaller output) or "trivial" (keep them all).
    """
    if partition not in ("subsumption", "trivial"):
        raise ValueError(f"unknown partition strategy {partition!r}")
    if not is_universal(f):
        raise NotAnEncoding("formula is not universal")
    for p in formula_preds(f):
        if p.primed:
            raise NotAnEncoding(f"primed predicate {p} cannot occur in a program")
    clauses = clausify(f)
    if simplify:
        clauses = simplify_modulo_s(clauses)
    if any(not c.lits for c in clauses):
        raise NotAnEncoding("clausal form contains the empty clause")
    m0 = [c for c in clauses if any(l.pred.sup == 0 for l in c.lits)]
    m1 = [c for c in clauses if all(l.pred.sup == 1 for l in c.lits)]
    if partition == "subsumption":
        part = partition_m1(m0, m1)
    else:
        part = DecodePartition(m0, list(m1), [])
    rules = [clause_to_rule(c) for c in part.m0 + part.m1_keep]
    return Program(tuple(rules))
