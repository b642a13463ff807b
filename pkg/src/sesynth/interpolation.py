"""Interpolant extraction from closed colored tableaux.

A ground closed tableau over left/right-colored clauses yields a ground
interpolant by structural induction; abstracting the right side's Skolem
terms and the grounding constant into universally quantified variables
lifts it to a universal interpolant.  Conjoining the lifted interpolant
with its 0-to-1 renaming produces a formula that again encodes a logic
program.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator

from .decode import simplify_modulo_s
from .encoding import rename_0_to_1, s_formula_for
from .fol import (FALSE, TRUE, FolAtom, Formula, FreshNamer, Truth, atoms_of,
                  clauses_to_formula, clausify, conj, disj, forall,
                  formula_functions, implies, map_atoms)
from .lp import Compound, Term, Var
from .prover import (LEFT, Proof, SearchLimits, ground_proof, prove_iter,
                     refutation_cases, replay_proof)
from .tptp import formula_text


class MalformedProofError(Exception):
    pass


@dataclass(frozen=True)
class InterpolationTask:
    left: Formula
    right: Formula
    shared_functions: frozenset

    @staticmethod
    def make(left: Formula, right: Formula) -> "InterpolationTask":
        # Functions of the left side are the ones an interpolant may keep.
        return InterpolationTask(left, right,
                                 frozenset(formula_functions(left)))


def extract_ground_interpolant(proof: Proof) -> Formula:
    """Ground interpolant of a ground closed colored tableau.

    Branch closures contribute the connection literal (from the left
    side's point of view); nodes expanded with a left clause join their
    children with or, right clauses with and.
    """
    problems = replay_proof(proof, require_ground=True, check_regularity=False)
    if problems:
        raise MalformedProofError("; ".join(problems))

    def walk(node) -> Formula:
        if node.children:
            side = node.children[0].clause.side
            parts = [walk(ch) for ch in node.children]
            return disj(parts) if side == LEFT else conj(parts)
        leaf_side = node.clause.side
        anc_side = node.closure.clause.side
        if leaf_side == LEFT and anc_side == LEFT:
            return FALSE
        if leaf_side != LEFT and anc_side != LEFT:
            return TRUE
        lit = proof.lit_of(node)
        if leaf_side == LEFT:
            return lit.to_formula()
        return lit.negated().to_formula()

    return walk(proof.root)


def lift_interpolant(h0: Formula, shared_functions,
                     namer: FreshNamer | None = None) -> Formula:
    """Close a ground interpolant under universal quantifiers.

    Maximal subterms headed by a functor outside shared_functions (right
    Skolem terms and the grounding constant) become fresh variables,
    innermost first, identical terms sharing one variable.
    """
    namer = namer or FreshNamer()
    shared = set(shared_functions)
    memo: dict = {}
    order: list = []

    def abstract(t: Term) -> Term:
        if isinstance(t, Var):
            raise ValueError(f"ground interpolant expected, found variable {t}")
        args = tuple(abstract(a) for a in t.args)
        t2 = Compound(t.functor, args)
        if (t.functor, len(t.args)) in shared:
            return t2
        if t2 not in memo:
            v = namer.fresh_var()
            memo[t2] = v
            order.append(v)
        return memo[t2]

    lifted = map_atoms(h0, lambda a: FolAtom(a.pred, tuple(abstract(t) for t in a.args)))
    used = set()
    for a in atoms_of(lifted):
        for t in a.args:
            _collect_vars(t, used)
    return forall([v for v in order if v in used], lifted)


def _collect_vars(t, acc: set):
    if isinstance(t, Var):
        acc.add(t)
    else:
        for a in t.args:
            _collect_vars(a, acc)


def simplify_interpolant(h: Formula) -> Formula:
    """Clause-level cleanup: constant folding, duplicate literals,
    tautologies, subsumption modulo the persistence axioms."""
    if isinstance(h, Truth):
        return h
    clauses = simplify_modulo_s(clausify(h))
    if not clauses:
        return TRUE
    if any(not c.lits for c in clauses):
        return FALSE
    return clauses_to_formula(clauses)


class _CaseProofs:
    """Lazily materialized proof alternatives for one refutation case."""

    def __init__(self, clauses, limits, deadline):
        self.clauses = clauses
        self.limits = limits
        self.deadline = deadline
        self.proofs: list = []
        self.stream = None
        self.exhausted = False

    def get(self, j: int):
        while len(self.proofs) <= j and not self.exhausted:
            if self.stream is None:
                remaining = self.deadline - time.monotonic()
                if remaining <= 0:
                    self.exhausted = True
                    break
                limits = SearchLimits(self.limits.max_depth,
                                      self.limits.max_inferences, remaining)
                self.stream = prove_iter(self.clauses, limits)
            nxt = next(self.stream, None)
            if nxt is None:
                self.exhausted = True
            else:
                self.proofs.append(nxt)
        return self.proofs[j] if j < len(self.proofs) else None


def _index_tuples(k: int, max_total: int) -> Iterator[tuple]:
    """(i1..ik) tuples in order of increasing sum; (0,...,0) first."""
    for total in range(max_total + 1):
        yield from _compositions(total, k)


def _compositions(total: int, k: int) -> Iterator[tuple]:
    if k == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, k - 1):
            yield (first,) + rest


_MAX_ENUM_SUM = 6


def craig_lyndon_interpolant_iter(task: InterpolationTask,
                                  limits: SearchLimits | None = None
                                  ) -> Iterator[Formula]:
    """Universal interpolants from successive proofs, deduplicated by
    normalized text, in proof-discovery order.

    The negated right side is refuted case by case along its top-level
    disjunction; the interpolant is the conjunction of the per-case
    extracts, which interpolates the original pair of sides.
    """
    limits = limits or SearchLimits()
    namer = FreshNamer()
    deadline = time.monotonic() + limits.wall_time
    fixed: list = []      # contributions of trivial cases
    searchable: list = []
    for case in refutation_cases(task.left, task.right, namer):
        if any(not cc.lits for cc in case if cc.side != LEFT):
            continue  # this case of the negated right is already false
        if any(not cc.lits for cc in case if cc.side == LEFT):
            fixed.append(FALSE)
            continue
        searchable.append(_CaseProofs(case, limits, deadline))
    seen = set()
    if not searchable:
        h = simplify_interpolant(conj(fixed))
        yield h
        return
    for combo in _index_tuples(len(searchable), _MAX_ENUM_SUM):
        if time.monotonic() > deadline:
            return
        proofs = []
        for case, j in zip(searchable, combo):
            proof = case.get(j)
            if proof is None:
                proofs = None
                break
            proofs.append(proof)
        if proofs is None:
            if any(c.exhausted and not c.proofs for c in searchable):
                return  # some case cannot be closed at all
            continue
        parts = list(fixed)
        for proof in proofs:
            parts.append(extract_ground_interpolant(ground_proof(proof)))
        h = lift_interpolant(conj(parts), task.shared_functions, namer)
        h = simplify_interpolant(h)
        key = formula_text(h)
        if key in seen:
            continue
        seen.add(key)
        yield h


def craig_lyndon_interpolant(task: InterpolationTask,
                             limits: SearchLimits | None = None
                             ) -> Formula | None:
    """First universal Craig-Lyndon interpolant found, or None."""
    return next(craig_lyndon_interpolant_iter(task, limits), None)


def lp_interpolant_iter(left: Formula, right: Formula, shared_functions,
                        limits: SearchLimits | None = None) -> Iterator[Formula]:
    """LP-interpolants H = H' and rename(H') for prepared task sides."""
    task = InterpolationTask(left, right, frozenset(shared_functions))
    for h in craig_lyndon_interpolant_iter(task, limits):
        yield conj([h, rename_0_to_1(h)])


def lp_interpolant(f: Formula, g: Formula,
                   limits: SearchLimits | None = None) -> Formula | None:
    """LP-interpolant of f (which must encode a logic program) and g.

    The underlying Craig-Lyndon interpolation runs between f with its
    persistence axioms and the axioms-imply-g side; the result encodes a
    logic program whenever the entailment is provable.
    """
    left = conj([s_formula_for(f), f])
    right = implies(s_formula_for(g), g)
    return next(lp_interpolant_iter(left, right, formula_functions(f), limits),
                None)
