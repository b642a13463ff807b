#!/usr/bin/env python3
"""Checking strong equivalence of answer set programs.

Two programs are strongly equivalent when they can replace each other
inside any larger program without changing the answer sets.  The check
reduces to a classical equivalence between the encodings, decided here
exactly by the ground oracle.
"""

from sesynth import parse_program, se_oracle_ground, strongly_equivalent

p = parse_program("""
    r :- p, not q.
    not s :- not t, not u.
    not p :- not q, not r.
""")
p_short = parse_program("""
    r :- p, not q.
    not s :- not t, not u.
""")

print("three-rule program vs its two-rule version:",
      strongly_equivalent(p, p_short))

# A fact is not the same as a default: adding "q." to both sides
# separates them, and the oracle certifies that with a countermodel.
fact = parse_program("p.")
default = parse_program("p :- not q.")
verdict = se_oracle_ground(fact, default)
print("fact vs default:", verdict.holds)
print("countermodel (an assignment to the superscripted atoms):")
for atom, value in verdict.countermodel.items():
    print(f"  {atom} = {value}")
