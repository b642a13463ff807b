"""Strong-equivalence tooling for answer set programs.

Parse disjunctive logic programs, encode them into classical first-order
logic over 0/1-superscripted predicates, check strong equivalence, and
synthesize vocabulary-restricted strongly equivalent programs by proving
a characterizing entailment and decoding a Craig-Lyndon interpolant back
into rules.
"""

from .lp import (Atom, Compound, ParseError, Program, Rule, Term, Var,
                 parse_program, parse_rule, print_program, print_rule,
                 program_functions, program_predicates)
from .fol import (Clause, FolAtom, Formula, Lit, SuperPred, clausify, conj,
                  disj, formula_functions, is_universal, pred_lp, pred_signed,
                  unify)
from .encoding import (EncodedProgram, encode_program, encodes_program_check,
                       gamma, gamma_rule, rename_0_to_1, s_formula,
                       s_formula_for)
from .decode import NotAnEncoding, decode, partition_m1, simplify_modulo_s
from .prover import (LEFT, RIGHT, ColoredClause, Proof, SearchLimits,
                     SizeGuardError, entails_by_prover, ground_decider,
                     ground_entails, ground_proof, prove, prove_iter,
                     prover_decider, replay_proof)
from .interpolation import (InterpolationTask, craig_lyndon_interpolant,
                            craig_lyndon_interpolant_iter,
                            extract_ground_interpolant, lift_interpolant,
                            lp_interpolant)
from .synthesis import (PlainVocab, PositionalVocab, SynthesisReport,
                        VocabularyError, definability_entailment,
                        plain_vocab_from_hidden, positional_entailment,
                        se_oracle_ground, strongly_equivalent, synthesize)

__version__ = "0.1.0"
