"""Shared fixtures: the worked-example corpus and proof collection."""

from __future__ import annotations

import pytest

from sesynth import parse_program
from sesynth.fol import FALSE, TRUE, Clause, FolAtom, Lit, Not, SuperPred
from sesynth.prover import set_proof_hook


def sp(name, sup, arity=0, primed=False):
    return SuperPred(name, sup, arity, primed)


def atom(name, sup, *args, primed=False):
    return FolAtom(sp(name, sup, len(args), primed), tuple(args))


def lit(pos, name, sup, *args, primed=False):
    return Lit(pos, sp(name, sup, len(args), primed), tuple(args))


def clause(*lits):
    return Clause(tuple(lits))


# Example 1a: three propositional clauses and the two programs they decode to.
C1 = clause(lit(False, "p", 0), lit(True, "q", 1), lit(True, "r", 0))
C2 = clause(lit(False, "s", 1), lit(True, "t", 1), lit(True, "u", 1))
C3 = clause(lit(False, "p", 1), lit(True, "q", 1), lit(True, "r", 1))

EX1A_P = "r :- p, not q.\nnot s :- not t, not u.\nnot p :- not q, not r.\n"
EX1A_P_PRIME = "r :- p, not q.\nnot s :- not t, not u.\n"

# Example 2: S-subsumption eliminates the middle clause.
EX2_C1 = C1
EX2_C2 = clause(lit(False, "p", 0), lit(True, "q", 1), lit(True, "r", 1))
EX2_C3 = C3

# Synthesis examples: context P, target Q, vocabulary V, reference result R.
SYNTH_PLAIN = {
    "3a": ("",
           "p :- q, r.\np ; q :- r.\nq :- q, s.",
           {"p", "r"},
           "p :- r."),
    "3b": ("p(X) :- q(X).",
           "r(X) :- p(X).\nr(X) :- q(X).",
           {"p", "r"},
           "r(X) :- p(X)."),
    "3c": (":- p(X), q(X).",
           "r(X) :- p(X), not q(X).",
           {"p", "r"},
           "r(X) :- p(X)."),
    "3d": ("p(X) :- q(X), not r(X).\np(X) :- s(X).\n"
           "not r(X) ; s(X) :- p(X).\nq(X) ; s(X) :- p(X).",
           "t(X) :- p(X).",
           {"q", "r", "s", "t"},
           "t(X) :- q(X), not r(X).\nt(X) :- s(X)."),
    "3e": ("p(X) :- q(X), not r(X).\np(X) :- s(X).\n"
           "not r(X) ; s(X) :- p(X).\nq(X) ; s(X) :- p(X).",
           "t(X) :- q(X), not r(X).\nt(X) :- s(X).",
           {"p", "t"},
           "t(X) :- p(X)."),
    "3f": ("n(X) :- z(X).\nn(X) :- n(Y), s(Y,X).",
           "not n(X2) :- z(X0), s(X0,X1), s(X1,X2).",
           {"z", "s"},
           ":- z(X0), s(X0,X1), s(X1,X2)."),
    "3g": ("c(X,Y,Z) :- r(X,Y), r(Y,Z).\n:- c(X,Y,Z), not r(X,Y).\n"
           ":- c(X,Y,Z), not r(Y,Z).",
           "r(X,Y) ; not r(X,Y).\n:- c(X,Y,Z), not r(X,Z).",
           {"r"},
           "r(X,Y) ; not r(X,Y).\n:- r(X,Y), r(Y,Z), not r(X,Z)."),
}

# Position-constrained examples: (P, Q, (V+, V+1, V-), reference R).
SYNTH_POSITIONAL = {
    "4a": ("p :- q.",
           "r :- p.\nr :- q.\nq :- s.",
           ({"p", "q", "r", "s"}, set(), {"p", "r", "s"}),
           "r :- p.\nq :- s."),
    "4b": ("p :- q.",
           ":- q, not p.\nr :- q.\ns :- p.",
           ({"q", "r", "s"}, set(), {"p", "q", "r", "s"}),
           "r :- q.\ns :- p."),
    "4c": ("p :- q.\nr :- p.",
           "s :- not r.\nr :- q.",
           ({"s"}, {"r"}, {"p", "q", "r", "s"}),
           "s :- not r."),
}


@pytest.fixture
def ex1a_p():
    return parse_program(EX1A_P)


@pytest.fixture
def ex1a_p_prime():
    return parse_program(EX1A_P_PRIME)


@pytest.fixture
def collected_proofs():
    """Collect every proof the prover emits while the fixture is active."""
    proofs = []
    set_proof_hook(proofs.append)
    try:
        yield proofs
    finally:
        set_proof_hook(None)
