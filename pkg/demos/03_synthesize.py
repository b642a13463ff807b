#!/usr/bin/env python3
"""Synthesizing a vocabulary-restricted strongly equivalent program.

Given a context program P, a target Q, and a set of allowed predicates,
the pipeline proves the characterizing entailment, extracts an
interpolant from the closed tableau, and decodes it into a program R
with P + R strongly equivalent to P + Q.
"""

from sesynth import (PlainVocab, parse_program, print_program,
                     se_oracle_ground, synthesize)
from sesynth.lp import Program
from sesynth.tptp import formula_text

# Eliminating redundant predicates with an empty context: q and s turn
# out to be superfluous for describing what Q says about p and r.
q = parse_program("""
    p :- q, r.
    p ; q :- r.
    q :- q, s.
""")
report = synthesize(Program(), q, PlainVocab.of({"p", "r"}))
print("restricted to {p, r}:")
print(print_program(report.program))
print("interpolant:", formula_text(report.interpolant))
print()

# Rewriting relative to a context: the constraint in P makes the negated
# q in Q's body redundant.
p = parse_program(":- p(X), q(X).")
q = parse_program("r(X) :- p(X), not q(X).")
report = synthesize(p, q, PlainVocab.of({"p", "r"}))
print("relative to the exclusion constraint, restricted to {p, r}:")
print(print_program(report.program))
print("verified by:", report.verification)

# Folding: with only p and t allowed, the two t-rules collapse into one
# rule through p's definition in the context.
p = parse_program("""
    p(X) :- q(X), not r(X).
    p(X) :- s(X).
    not r(X) ; s(X) :- p(X).
    q(X) ; s(X) :- p(X).
""")
q = parse_program("""
    t(X) :- q(X), not r(X).
    t(X) :- s(X).
""")
report = synthesize(p, q, PlainVocab.of({"p", "t"}))
print()
print("folding into p:")
print(print_program(report.program))
check = se_oracle_ground(p.union(report.program), p.union(q))
print("oracle certificate:", check.holds)
