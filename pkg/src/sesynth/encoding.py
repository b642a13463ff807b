"""Translation of logic programs into 0/1-superscripted first-order logic.

Each rule becomes two clause-shaped implications (superscript-0 and
superscript-1 reading); negated atoms always use superscript 1.  The
persistence axioms pair every predicate's 0-copy with its 1-copy.  The
same machinery also answers whether an arbitrary formula encodes a
logic program.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .fol import (FolAtom, Formula, Implies, SuperPred, conj, disj, forall,
                  is_universal, lp_bases, map_atoms, neg)
from .lp import Atom, Program, Rule, Var, program_predicates


def atom_to_fol(atom: Atom, sup: int, primed: bool = False) -> FolAtom:
    return FolAtom(SuperPred(atom.pred, sup, atom.arity, primed), atom.args)


def gamma_rule(rule: Rule, sup: int) -> Formula:
    """The superscript-0 or superscript-1 reading of one rule.

    Positive head/body atoms take the given superscript; atoms under
    negation take superscript 1 in both readings.
    """
    body = [atom_to_fol(a, sup) for a in rule.pos_body]
    body += [neg(atom_to_fol(a, 1)) for a in rule.neg_body]
    head = [atom_to_fol(a, sup) for a in rule.pos_head]
    head += [neg(atom_to_fol(a, 1)) for a in rule.neg_head]
    matrix = disj(head) if not body else Implies(conj(body), disj(head))
    return forall(rule.variables(), matrix)


def gamma(p: Program) -> Formula:
    """Conjunction of both readings of every rule, duplicates removed."""
    parts = [gamma_rule(r, 0) for r in p.rules]
    parts += [gamma_rule(r, 1) for r in p.rules]
    return conj(parts)


def s_formula(preds: Iterable[tuple]) -> Formula:
    """Persistence axioms for a set of (name, arity) predicate pairs."""
    parts = []
    for name, arity in sorted(preds):
        vs = tuple(Var(f"X{i + 1}") for i in range(arity))
        parts.append(forall(vs, Implies(FolAtom(SuperPred(name, 0, arity), vs),
                                        FolAtom(SuperPred(name, 1, arity), vs))))
    return conj(parts)


def s_formula_for(f: Formula) -> Formula:
    """Persistence axioms over the predicates of a formula, primed copies
    getting their own axioms."""
    parts = []
    for base, arity, primed in sorted(lp_bases(f)):
        vs = tuple(Var(f"X{i + 1}") for i in range(arity))
        parts.append(forall(vs, Implies(FolAtom(SuperPred(base, 0, arity, primed), vs),
                                        FolAtom(SuperPred(base, 1, arity, primed), vs))))
    return conj(parts)


def rename_0_to_1(f: Formula) -> Formula:
    """Replace every 0-superscripted predicate by its 1-superscripted copy."""
    return map_atoms(f, lambda a: FolAtom(a.pred.with_sup(1), a.args))


@dataclass(frozen=True)
class EncodedProgram:
    gamma: Formula
    s: Formula
    source: Program


def encode_program(p: Program) -> EncodedProgram:
    return EncodedProgram(gamma(p), s_formula(program_predicates(p)), p)


# A decider takes (left, right) formulas and reports whether left entails
# right: True, False, or None for unknown.
Decider = Callable[[Formula, Formula], bool | None]


def encodes_program_check(f: Formula, decider: Decider) -> bool | None:
    """Whether f encodes a logic program: f universal and the renamed copy
    follows from f plus its persistence axioms."""
    if not is_universal(f):
        return False
    left = conj([s_formula_for(f), f])
    return decider(left, rename_0_to_1(f))
