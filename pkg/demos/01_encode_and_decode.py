#!/usr/bin/env python3
"""Round trip between logic programs and their first-order encodings.

Every rule turns into two clause-shaped implications over predicates
carrying a 0 or 1 superscript; the reverse direction reads a clausal
formula back as a program, dropping clauses that the renamed 0-part
already covers.
"""

from sesynth import decode, gamma, parse_program, print_program, s_formula
from sesynth.lp import program_predicates
from sesynth.tptp import formula_text

program = parse_program("""
    r :- p, not q.
    not s :- not t, not u.
    not p :- not q, not r.
""")

print("program:")
print(print_program(program))

encoding = gamma(program)
print("encoding gamma(P):")
print(" ", formula_text(encoding))
print("persistence axioms S_P:")
print(" ", formula_text(s_formula(program_predicates(program))))
print()

# Decoding inverts the translation.  The third rule's encoding is the
# renaming of the first rule's, so the subsumption partition drops it and
# a strictly shorter strongly equivalent program comes back.
shorter = decode(encoding)
print("decoded with the subsumption partition (2 rules):")
print(print_program(shorter))

full = decode(encoding, partition="trivial")
print("decoded with the trivial partition (all 3 rules):")
print(print_program(full))
