"""Strong-equivalence checking and program synthesis.

Two programs are strongly equivalent exactly when their encodings agree
modulo the persistence axioms; that equivalence is decided here either
by an exact ground oracle (function-free inputs) or by the prover.

Synthesis asks for a program R over a restricted vocabulary such that
P + R is strongly equivalent to P + Q.  Existence reduces to a single
first-order entailment whose interpolant, after renaming-conjunction
and decoding, is such an R.  A positional variant constrains where
predicates may appear inside rules by priming per polarity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .decode import NotAnEncoding, decode
from .encoding import gamma, s_formula
from .fol import (FALSE, TRUE, FolAtom, Formula, SuperPred, conj, disj,
                  forall, formula_functions, map_atoms, neg, pred_signed,
                  subst_term)
from .interpolation import lp_interpolant_iter
from .lp import (RESERVED_PREFIX, RESERVED_SUFFIX, Atom, Compound, Program,
                 Rule, Var, program_functions, program_predicates)
from .prover import (GROUND_CONST, GroundResult, SearchLimits, SizeGuardError,
                     entails_by_prover, ground_entails)


class VocabularyError(ValueError):
    pass


@dataclass(frozen=True)
class PlainVocab:
    predicates: frozenset

    @staticmethod
    def of(names) -> "PlainVocab":
        return PlainVocab(frozenset(names))


@dataclass(frozen=True)
class PositionalVocab:
    plus: frozenset
    plus1: frozenset
    minus: frozenset

    @staticmethod
    def of(plus, plus1, minus) -> "PositionalVocab":
        return PositionalVocab(frozenset(plus), frozenset(plus1), frozenset(minus))


VocabSpec = PlainVocab | PositionalVocab


def plain_vocab_from_hidden(p: Program, q: Program, hidden) -> PlainVocab:
    """Complementary entry: allow everything except the hidden names."""
    names = {n for n, _ in program_predicates(p) | program_predicates(q)}
    unknown = set(hidden) - names
    if unknown:
        raise VocabularyError(f"hidden predicates not in the programs: {sorted(unknown)}")
    return PlainVocab(frozenset(names - set(hidden)))


@dataclass
class SynthesisReport:
    status: str                      # "found" | "not-found" | "unknown"
    program: Program | None = None
    alternatives: list = field(default_factory=list)
    interpolant: Formula | None = None
    left: Formula | None = None
    right: Formula | None = None
    aux: Formula | None = None
    verification: str | None = None  # "ground-oracle" | "prover"
    countermodel: dict | None = None
    notes: list = field(default_factory=list)


# ---------------------------------------------------------------------------
# Grounding programs and the strong-equivalence oracle

def _subst_atom(a: Atom, s: dict) -> Atom:
    return Atom(a.pred, tuple(subst_term(t, s) for t in a.args))


def ground_program(p: Program, constants) -> Program:
    """Instantiate every rule over the given constants, deduplicating."""
    rules: list = []
    for r in p.rules:
        vs = r.variables()
        for combo in itertools.product(constants, repeat=len(vs)):
            s = dict(zip(vs, combo))
            g = Rule.make([_subst_atom(a, s) for a in r.pos_head],
                          [_subst_atom(a, s) for a in r.neg_head],
                          [_subst_atom(a, s) for a in r.pos_body],
                          [_subst_atom(a, s) for a in r.neg_body])
            if g not in rules:
                rules.append(g)
    return Program(tuple(rules))


def _program_constants(*programs) -> list:
    names = set()
    for p in programs:
        for name, arity in program_functions(p):
            if arity > 0:
                raise ValueError(
                    f"ground oracle needs function-free programs, found {name}/{arity}")
            names.add(name)
    return [Compound(n, ()) for n in sorted(names)]


def _ground_s(preds, constants) -> Formula:
    """Persistence axioms instantiated over a constant universe."""
    parts = []
    for name, arity in sorted(preds):
        for combo in itertools.product(constants, repeat=arity):
            parts.append(disj([neg(FolAtom(SuperPred(name, 0, arity), combo)),
                               FolAtom(SuperPred(name, 1, arity), combo)]))
    return conj(parts)


def se_oracle_ground(p: Program, q: Program, *, max_atoms: int = 24) -> GroundResult:
    """Exact strong-equivalence verdict for function-free programs.

    Grounds both programs and the persistence axioms over their shared
    constants (one reserved constant when there are none) and checks the
    characterizing equivalence over all assignments.  The verdict is
    relative to that constant universe.
    """
    constants = _program_constants(p, q) or [GROUND_CONST]
    pg = ground_program(p, constants)
    qg = ground_program(q, constants)
    s = _ground_s(program_predicates(pg) | program_predicates(qg), constants)
    f1 = conj([s, gamma(pg)])
    f2 = conj([s, gamma(qg)])
    forward = ground_entails(f1, f2, max_atoms=max_atoms)
    if not forward.holds:
        return forward
    return ground_entails(f2, f1, max_atoms=max_atoms)


def _function_free(*programs) -> bool:
    return all(arity == 0
               for p in programs
               for _, arity in program_functions(p))


def strongly_equivalent(p: Program, q: Program,
                        limits: SearchLimits | None = None, *,
                        mode: str = "auto",
                        max_atoms: int = 24) -> bool | None:
    """Tri-state strong-equivalence check: True, False, or None (unknown).

    Function-free inputs get the exact ground verdict; otherwise both
    entailment directions go to the prover, which can only answer True
    or unknown.
    """
    if mode not in ("auto", "ground", "prover"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "ground" or (mode == "auto" and _function_free(p, q)):
        return se_oracle_ground(p, q, max_atoms=max_atoms).holds
    preds = program_predicates(p) | program_predicates(q)
    s = s_formula(preds)
    f1 = conj([s, gamma(p)])
    f2 = conj([s, gamma(q)])
    if (entails_by_prover(f1, f2, limits) is not None
            and entails_by_prover(f2, f1, limits) is not None):
        return True
    return None


# ---------------------------------------------------------------------------
# The characterizing entailments

def _all_names(p: Program, q: Program) -> set:
    return program_predicates(p) | program_predicates(q)


def _validate_names(names, all_preds):
    known = {n for n, _ in all_preds}
    unknown = set(names) - known
    if unknown:
        raise VocabularyError(
            f"vocabulary predicates not in the programs: {sorted(unknown)}")


def _prime(f: Formula, targets: set, constants: dict | None = None) -> Formula:
    constants = constants or {}

    def on_atom(a: FolAtom) -> Formula:
        if a.pred in constants:
            return constants[a.pred]
        if a.pred in targets:
            return FolAtom(a.pred.with_primed(), a.args)
        return a

    return map_atoms(f, on_atom)


def definability_entailment(p: Program, q: Program, vocab: PlainVocab):
    """Left and right side of the entailment that holds iff some program
    over the vocabulary completes P to the strong-equivalence class of
    P + Q.  Predicates outside the vocabulary are primed on the right,
    identically for both superscripts."""
    all_preds = _all_names(p, q)
    _validate_names(vocab.predicates, all_preds)
    targets = {SuperPred(n, s, a)
               for n, a in all_preds if n not in vocab.predicates
               for s in (0, 1)}
    s_p = s_formula(program_predicates(p))
    s_q = s_formula(program_predicates(q))
    g_p = gamma(p)
    g_q = gamma(q)
    left = conj([s_formula(all_preds), g_p, g_q])
    right = disj([neg(_prime(s_p, targets)), neg(_prime(s_q, targets)),
                  neg(_prime(g_p, targets)), _prime(g_q, targets)])
    return left, right


def positional_entailment(p: Program, q: Program, vocab: PositionalVocab):
    """Position-constrained variant: priming works per polarity on the
    superscripted predicates, linked by auxiliary inclusion axioms where
    one polarity stays allowed.  Predicates to be primed that occur with
    a single polarity are replaced by a truth constant instead."""
    all_preds = _all_names(p, q)
    for names in (vocab.plus, vocab.plus1, vocab.minus):
        _validate_names(names, all_preds)
    by_name: dict = {}
    for n, a in all_preds:
        by_name.setdefault(n, []).append(a)

    def sps(names, sup):
        return {SuperPred(n, sup, a) for n in names for a in by_name[n]}

    vpm = {(True, r) for r in sps(vocab.plus, 0)}
    vpm |= {(True, r) for r in sps(vocab.plus | vocab.plus1, 1)}
    vpm |= {(False, r) for r in sps(vocab.minus, 0)}
    vpm |= {(False, r) for r in sps(vocab.minus, 1)}

    s_p = s_formula(program_predicates(p))
    s_q = s_formula(program_predicates(q))
    g_p = gamma(p)
    g_q = gamma(q)
    left = conj([s_formula(all_preds), g_p, g_q])

    matrix = conj([s_p, s_q, g_p, neg(g_q)])
    w = pred_signed(disj([neg(s_p), neg(s_q), neg(g_p), g_q]))
    mpol = pred_signed(matrix)

    all_sps = {SuperPred(n, s, a) for n, a in all_preds for s in (0, 1)}
    to_prime = {r for r in all_sps
                if not ((True, r) in vpm and (False, r) in vpm)}

    aux_parts = []
    linked = set()
    for r in sorted(to_prime, key=lambda sp: (sp.base, sp.arity, sp.sup)):
        vs = tuple(Var(f"X{i + 1}") for i in range(r.arity))
        plain = FolAtom(r, vs)
        primed = FolAtom(r.with_primed(), vs)
        if (True, r) in vpm and (False, r) not in vpm and (True, r) in w:
            aux_parts.append(forall(vs, disj([neg(plain), primed])))
            linked.add(r)
        elif (False, r) in vpm and (True, r) not in vpm and (False, r) in w:
            aux_parts.append(forall(vs, disj([neg(primed), plain])))
            linked.add(r)
    aux = conj(aux_parts)

    targets = set()
    constants: dict = {}
    for r in to_prime:
        if r in linked:
            targets.add(r)
            continue
        pos_occ = (True, r) in mpol
        neg_occ = (False, r) in mpol
        if pos_occ and not neg_occ:
            constants[r] = TRUE
        elif neg_occ and not pos_occ:
            constants[r] = FALSE
        elif pos_occ and neg_occ:
            targets.add(r)
        # absent predicates need no treatment

    def pr(f):
        return _prime(f, targets, constants)

    right = disj([neg(pr(s_p)), neg(pr(s_q)), neg(pr(g_p)), pr(g_q), neg(aux)])
    return left, right, aux


# ---------------------------------------------------------------------------
# Gates on decoded programs

def _check_vocab(r: Program, vocab: VocabSpec):
    if isinstance(vocab, PlainVocab):
        bad = {n for n, _ in program_predicates(r)} - vocab.predicates
        if bad:
            raise RuntimeError(
                f"synthesized program leaks predicates {sorted(bad)}")
        return
    for rule in r.rules:
        checks = ((rule.pos_head, vocab.plus, "positive heads"),
                  (rule.neg_body, vocab.plus | vocab.plus1, "negative bodies"),
                  (rule.neg_head, vocab.minus, "negative heads"),
                  (rule.pos_body, vocab.minus, "positive bodies"))
        for atoms, allowed, what in checks:
            bad = {a.pred for a in atoms} - allowed
            if bad:
                raise RuntimeError(
                    f"synthesized program uses {sorted(bad)} in {what}")


def _check_functions(r: Program, p: Program, q: Program):
    allowed = program_functions(p) | program_functions(q)
    bad = program_functions(r) - allowed
    if bad:
        raise RuntimeError(f"synthesized program invents functions {sorted(bad)}")


def _check_clean_symbols(r: Program):
    names = [n for n, _ in program_predicates(r)]
    names += [n for n, _ in program_functions(r)]
    dirty = [n for n in names
             if n.startswith(RESERVED_PREFIX) or n.endswith(RESERVED_SUFFIX)]
    if dirty:
        raise RuntimeError(
            f"synthesized program contains reserved symbols {sorted(set(dirty))}")


# ---------------------------------------------------------------------------
# Synthesis

def synthesize(p: Program, q: Program, vocab: VocabSpec,
               limits: SearchLimits | None = None, *,
               count: int = 1,
               partition: str = "subsumption",
               max_atoms: int = 24) -> SynthesisReport:
    """Derive a program R over the vocabulary with P + R strongly
    equivalent to P + Q, or report that none exists / none was found.

    Every returned program passed strong-equivalence verification:
    by the ground oracle for function-free inputs, otherwise by prover
    proofs of both entailment directions.  Non-existence (not-found) is
    only ever reported with a ground countermodel of the characterizing
    entailment.
    """
    limits = limits or SearchLimits()
    aux = None
    if isinstance(vocab, PlainVocab):
        left, right = definability_entailment(p, q, vocab)
    else:
        left, right, aux = positional_entailment(p, q, vocab)
    report = SynthesisReport("unknown", left=left, right=right, aux=aux)
    function_free = _function_free(p, q)

    if function_free:
        try:
            verdict = ground_entails(left, right, max_atoms=max_atoms)
            if not verdict.holds:
                report.status = "not-found"
                report.countermodel = verdict.countermodel
                return report
        except SizeGuardError as e:
            report.notes.append(f"entailment pre-check skipped: {e}")

    shared = formula_functions(left)
    found: list = []
    for h in lp_interpolant_iter(left, right, shared, limits):
        try:
            r = decode(h, partition=partition)
        except NotAnEncoding as e:
            # Only reachable on degenerate inputs whose encodings are
            # unsatisfiable; the interpolation contract rules it out
            # otherwise.
            report.notes.append(f"interpolant not decodable: {e}")
            continue
        _check_clean_symbols(r)
        _check_vocab(r, vocab)
        _check_functions(r, p, q)
        combined_r = p.union(r)
        combined_q = p.union(q)
        if function_free:
            v = se_oracle_ground(combined_r, combined_q, max_atoms=max_atoms)
            if not v.holds:
                raise RuntimeError(
                    "synthesized program failed the oracle gate; "
                    f"countermodel {v.countermodel}")
            report.verification = "ground-oracle"
        else:
            if strongly_equivalent(combined_r, combined_q, limits,
                                   mode="prover") is not True:
                report.notes.append(
                    "prover could not verify a candidate within limits")
                continue
            report.verification = "prover"
        if report.interpolant is None:
            report.interpolant = h
        if r not in found:
            found.append(r)
        if len(found) >= count:
            break

    if found:
        report.status = "found"
        report.program = found[0]
        report.alternatives = found[1:]
    return report
