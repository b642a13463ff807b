"""Refutation proving on colored clause sets.

Two engines: a connection-calculus prover that builds closed clausal
tableaux (inspectable, replayable, colored for interpolant extraction)
with iterative deepening over tableau depth, and an exact decision
procedure for function-free inputs that grounds over the constants in
play and searches assignments exhaustively.
"""

from __future__ import annotations

import itertools
import time
from collections import namedtuple
from dataclasses import dataclass

from .fol import (And, Formula, FreshNamer, Lit, Or, SuperPred, Var, _occurs,
                  formula_vars,
                  clausify, clausify_nnf, conj, matrix_clauses, neg,
                  prepare_nnf, resolve_term, skolemized_matrix, subsumes,
                  subst_term, walk_term)
from .lp import Compound, term_functions, term_vars

LEFT = "left"
RIGHT = "right"

# Reserved constant used to ground leftover proof variables and as the
# universe for constant-free problems.
GROUND_CONST = Compound("sk_g", ())


class SizeGuardError(Exception):
    """Ground problem exceeds the configured atom bound."""


@dataclass(frozen=True)
class ColoredClause:
    lits: tuple
    side: str
    origin: str = ""

    def variables(self) -> list:
        acc: list = []
        for l in self.lits:
            for t in l.args:
                term_vars(t, acc)
        return acc

    def __str__(self) -> str:
        body = " | ".join(str(l) for l in self.lits) or "$false"
        return f"[{self.side}] {body}"


@dataclass(frozen=True)
class SearchLimits:
    max_depth: int = 12
    max_inferences: int = 1_000_000
    wall_time: float = 10.0


class _OutOfBudget(Exception):
    pass


class _Budget:
    def __init__(self, limits: SearchLimits):
        self.limits = limits
        self.inferences = 0
        self.deadline = time.monotonic() + limits.wall_time

    def tick(self):
        self.inferences += 1
        if self.inferences > self.limits.max_inferences:
            raise _OutOfBudget
        if self.inferences % 256 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget


# ---------------------------------------------------------------------------
# Proof objects

@dataclass(repr=False)
class ProofNode:
    id: int
    lit: Lit | None
    clause: ColoredClause | None
    parent: "ProofNode | None"
    children: tuple = ()
    closure: "ProofNode | None" = None

    def __repr__(self):
        return f"ProofNode(id={self.id}, lit={self.lit})"


@dataclass
class Proof:
    root: ProofNode
    subst: dict
    clauses: list

    def nodes(self):
        stack = [self.root]
        while stack:
            n = stack.pop()
            yield n
            stack.extend(reversed(n.children))

    def lit_of(self, node: ProofNode) -> Lit:
        return node.lit.subst(self.subst)

    @property
    def depth(self) -> int:
        best = 0
        for n in self.nodes():
            d = 0
            m = n
            while m.parent is not None:
                d += 1
                m = m.parent
            best = max(best, d)
        return best


def replay_proof(proof: Proof, *, require_ground: bool = False,
                 check_regularity: bool = True) -> list:
    """Independent validation of a closed tableau.

    Checks tree shape, closure links pointing at proper ancestors carrying
    complementary literals under the global substitution, and regularity
    (no repeated literal on a branch).  Returns a list of violation
    messages; empty means the proof replays.  Grounding a proof may merge
    branch literals on purpose, so regularity can be waived."""
    problems: list = []

    def resolved(n):
        return n.lit.subst(proof.subst)

    def walk(n, path_lits):
        if n.lit is not None:
            lit = resolved(n)
            if require_ground:
                for t in lit.args:
                    if term_vars(t):
                        problems.append(f"node {n.id}: literal {lit} not ground")
                        break
            if check_regularity:
                for other in path_lits:
                    if other == lit:
                        problems.append(f"node {n.id}: literal {lit} repeats on branch")
            path_lits = path_lits + [lit]
        if n.children:
            cl = n.children[0].clause
            for ch in n.children:
                if ch.parent is not n:
                    problems.append(f"node {ch.id}: broken parent link")
                if ch.clause is not cl:
                    problems.append(f"node {ch.id}: children from different clauses")
                walk(ch, path_lits)
        else:
            if n.closure is None:
                problems.append(f"node {n.id}: open leaf")
                return
            anc = n.parent
            while anc is not None and anc is not n.closure:
                anc = anc.parent
            if anc is None:
                problems.append(f"node {n.id}: closure target is not an ancestor")
                return
            if n.closure.lit is None:
                problems.append(f"node {n.id}: closure against the root")
                return
            a = resolved(n.closure)
            l = resolved(n)
            if a.pos == l.pos or a.pred != l.pred or a.args != l.args:
                problems.append(
                    f"node {n.id}: closure {l} against {a} is not complementary")

    if not proof.root.children:
        problems.append("empty proof")
    walk(proof.root, [])
    return problems


def ground_proof(proof: Proof) -> Proof:
    """Extend the substitution so every node literal is ground; leftover
    variables all map to one reserved constant."""
    subst = dict(proof.subst)
    for n in proof.nodes():
        if n.lit is None:
            continue
        for t in n.lit.args:
            for v in term_vars(resolve_term(t, subst)):
                subst[v] = GROUND_CONST
    return Proof(proof.root, subst, proof.clauses)


def dump_proof(proof: Proof) -> str:
    """Line format: id, parent id, side, origin, literal, closure target."""
    lines = []
    for n in proof.nodes():
        if n.lit is None:
            lines.append(f"{n.id} - root")
            continue
        parent = n.parent.id if n.parent else "-"
        closing = f" closes={n.closure.id}" if n.closure is not None else ""
        lines.append(f"{n.id} {parent} {n.clause.side} {n.clause.origin} "
                     f"{proof.lit_of(n)}{closing}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Connection search

class _Bindings:
    __slots__ = ("map", "trail")

    def __init__(self):
        self.map: dict = {}
        self.trail: list = []

    def mark(self) -> int:
        return len(self.trail)

    def undo(self, mark: int):
        while len(self.trail) > mark:
            del self.map[self.trail.pop()]

    def bind(self, v, t):
        self.map[v] = t
        self.trail.append(v)


def _unify_trail(a, b, bnd: _Bindings) -> bool:
    a = walk_term(a, bnd.map)
    b = walk_term(b, bnd.map)
    if a == b:
        return True
    if isinstance(a, Var):
        if _occurs(a, b, bnd.map):
            return False
        bnd.bind(a, b)
        return True
    if isinstance(b, Var):
        if _occurs(b, a, bnd.map):
            return False
        bnd.bind(b, a)
        return True
    if a.functor != b.functor or len(a.args) != len(b.args):
        return False
    return all(_unify_trail(x, y, bnd) for x, y in zip(a.args, b.args))


def _unify_args(args1, args2, bnd: _Bindings) -> bool:
    return all(_unify_trail(a, b, bnd) for a, b in zip(args1, args2))


class _SNode:
    __slots__ = ("lit", "clause", "parent", "depth", "children", "closure")

    def __init__(self, lit, clause, parent, depth):
        self.lit = lit
        self.clause = clause
        self.parent = parent
        self.depth = depth
        self.children = ()
        self.closure = None


class _Search:
    def __init__(self, clauses, limits: SearchLimits):
        self.clauses = list(clauses)
        self.limits = limits
        self.budget = _Budget(limits)
        self.bnd = _Bindings()
        self._fresh = 0
        # extension candidates per (predicate, polarity of the goal literal)
        self.index: dict = {}
        for ci, cc in enumerate(self.clauses):
            for li, l in enumerate(cc.lits):
                self.index.setdefault((l.pred, not l.pos), []).append((ci, li))

    def _rename(self, clause: ColoredClause) -> tuple:
        vs = clause.variables()
        if not vs:
            return clause.lits
        self._fresh += 1
        ren = {v: Var(f"{v.name}~{self._fresh}") for v in vs}
        return tuple(Lit(l.pos, l.pred,
                         tuple(subst_term(t, ren) for t in l.args))
                     for l in clause.lits)

    def _resolved(self, lit: Lit) -> Lit:
        return lit.subst(self.bnd.map)

    def proofs(self):
        """Iterative deepening; yields every closed tableau whose depth is
        exactly the current bound, so proofs surface once each."""
        right = [c for c in self.clauses if c.side == RIGHT]
        primary = right if right else list(self.clauses)
        fallback = [c for c in self.clauses if c.side == LEFT] if right else []
        try:
            for depth in range(1, self.limits.max_depth + 1):
                for starts in (primary, fallback):
                    for start in starts:
                        yield from self._from_start(start, depth)
        except _OutOfBudget:
            return

    def _from_start(self, start: ColoredClause, depth_limit: int):
        root = _SNode(None, None, None, 0)
        lits = self._rename(start)
        children = tuple(_SNode(l, start, root, 1) for l in lits)
        root.children = children
        for _ in self._solve(list(children), depth_limit):
            proof = self._freeze(root)
            if proof.depth == depth_limit and not replay_proof(proof):
                yield proof
        root.children = ()

    def _solve(self, goals: list, depth_limit: int):
        if not goals:
            yield None
            return
        node = goals[0]
        rest = goals[1:]
        lit = node.lit
        # regularity pruning against the branch so far
        res = self._resolved(lit)
        anc = node.parent
        while anc is not None and anc.lit is not None:
            if self._resolved(anc.lit) == res:
                return
            anc = anc.parent
        # reduction steps
        anc = node.parent
        while anc is not None and anc.lit is not None:
            alit = anc.lit
            if alit.pos != lit.pos and alit.pred == lit.pred:
                self.budget.tick()
                mark = self.bnd.mark()
                if _unify_args(lit.args, alit.args, self.bnd):
                    node.closure = anc
                    yield from self._solve(rest, depth_limit)
                    node.closure = None
                self.bnd.undo(mark)
            anc = anc.parent
        # extension steps
        if node.depth >= depth_limit:
            return
        for ci, i in self.index.get((lit.pred, lit.pos), ()):
            cc = self.clauses[ci]
            self.budget.tick()
            fresh = self._rename(cc)
            mark = self.bnd.mark()
            if _unify_args(lit.args, fresh[i].args, self.bnd):
                children = tuple(_SNode(l, cc, node, node.depth + 1)
                                 for l in fresh)
                children[i].closure = node
                node.children = children
                subgoals = [ch for k, ch in enumerate(children) if k != i]
                yield from self._solve(subgoals + rest, depth_limit)
                node.children = ()
            self.bnd.undo(mark)

    def _freeze(self, root: _SNode) -> Proof:
        counter = itertools.count()
        copies: dict = {}

        def copy(n, parent):
            c = ProofNode(next(counter), n.lit, n.clause, parent)
            copies[id(n)] = c
            c.children = tuple(copy(ch, c) for ch in n.children)
            return c

        frozen = copy(root, None)

        def link(n, orig):
            if orig.closure is not None:
                n.closure = copies[id(orig.closure)]
            for c, o in zip(n.children, orig.children):
                link(c, o)

        link(frozen, root)
        return Proof(frozen, dict(self.bnd.map), list(self.clauses))


# Optional hook so test harnesses can collect every emitted proof.
_PROOF_HOOK = None


def set_proof_hook(fn):
    global _PROOF_HOOK
    _PROOF_HOOK = fn


def prove_iter(clauses, limits: SearchLimits | None = None):
    """Yield successive distinct proofs within the limits."""
    limits = limits or SearchLimits()
    for proof in _Search(clauses, limits).proofs():
        if _PROOF_HOOK is not None:
            _PROOF_HOOK(proof)
        yield proof


def prove(clauses, limits: SearchLimits | None = None) -> Proof | None:
    """First proof found, or None when the limits are exhausted."""
    return next(prove_iter(clauses, limits), None)


# ---------------------------------------------------------------------------
# Clause preparation helpers

def reduce_clauses(clauses: list) -> list:
    """Drop tautologies and subsumed clauses (plain subsumption, within one
    side of a problem)."""
    cleaned = [c for c in clauses if not c.is_tautology()]
    out = []
    for i, c in enumerate(cleaned):
        dropped = False
        for j, d in enumerate(cleaned):
            if i == j:
                continue
            if subsumes(d, c) and (j < i or not subsumes(c, d)):
                dropped = True
                break
        if not dropped:
            out.append(c)
    return out


def color_clauses(clauses, side: str, prefix: str) -> list:
    return [ColoredClause(c.lits, side, f"{prefix}_{i + 1}")
            for i, c in enumerate(clauses)]


def _prepare_problem(colored: list) -> list:
    # Units first: the search tries start clauses and extensions in the
    # order given, and short clauses keep it goal-directed.
    return sorted(colored, key=lambda cc: len(cc.lits))


def problem_clauses(left: Formula, right: Formula,
                    namer: FreshNamer | None = None) -> list:
    """Clauses of left AND NOT right, colored by origin.

    The left side must be universal and is clausified without Skolems;
    the negated right side is Skolemized.  Function-free problems are
    handed to the search fully grounded.  Short clauses come first,
    which keeps the goal-directed search focused on units.
    """
    namer = namer or FreshNamer()
    lc = reduce_clauses(clausify(left, namer=namer))
    rnnf = prepare_nnf(neg(right), namer)
    rc = reduce_clauses(clausify_nnf(rnnf, skolemize=True, namer=namer))
    colored = color_clauses(lc, LEFT, "left") + color_clauses(rc, RIGHT, "right")
    return _prepare_problem(colored)


_MAX_CASES = 64


def refutation_cases(left: Formula, right: Formula,
                     namer: FreshNamer | None = None) -> list:
    """Clause sets refuting left AND NOT right, one per disjunctive case.

    The negated right side is Skolemized once (Skolems shared), then each
    top-level disjunction splits the refutation into cases; refuting all
    of them refutes the conjunction with the disjunction intact.  Cases
    keep the negated right's parts as small clauses, mostly units, which
    spares the search the distributed cross-products.
    """
    namer = namer or FreshNamer()
    lc = reduce_clauses(clausify(left, namer=namer))
    left_colored = color_clauses(lc, LEFT, "left")
    matrix = skolemized_matrix(prepare_nnf(neg(right), namer), namer)
    conjuncts = list(matrix.parts) if isinstance(matrix, And) else [matrix]

    def splits(c):
        # Splitting a disjunction into cases is only sound when it has no
        # implicitly universal variables.
        return isinstance(c, Or) and not formula_vars(c)

    base = [c for c in conjuncts if not splits(c)]
    splittable = [c for c in conjuncts if splits(c)]
    choice_lists: list = [[c] for c in base]
    ncases = 1
    for c in splittable:
        if ncases * len(c.parts) > _MAX_CASES:
            choice_lists.append([c])  # too many cases: keep the disjunction
        else:
            ncases *= len(c.parts)
            choice_lists.append(list(c.parts))
    cases = []
    for combo in itertools.product(*choice_lists):
        rc = reduce_clauses(matrix_clauses(conj(combo)))
        colored = list(left_colored) + color_clauses(rc, RIGHT, "right")
        cases.append(_prepare_problem(colored))
    return cases


def entails_by_prover(left: Formula, right: Formula,
                      limits: SearchLimits | None = None) -> list | None:
    """Proofs of left |= right (one per refutation case), or None.

    An empty list means the entailment is vacuous (the negated right side
    simplified away)."""
    limits = limits or SearchLimits()
    deadline = time.monotonic() + limits.wall_time
    proofs = []
    for case in refutation_cases(left, right):
        if any(not cc.lits for cc in case if cc.side == RIGHT):
            continue  # negated right already refuted in this case
        if any(not cc.lits for cc in case if cc.side == LEFT):
            continue  # left side is itself contradictory
        remaining = deadline - time.monotonic()
        if remaining <= 0:
            return None
        case_limits = SearchLimits(limits.max_depth, limits.max_inferences,
                                   remaining)
        proof = prove(case, case_limits)
        if proof is None:
            return None
        proofs.append(proof)
    return proofs


# ---------------------------------------------------------------------------
# Ground decision procedure (function-free inputs)

GroundResult = namedtuple("GroundResult", "holds countermodel")

_MAX_GROUND_INSTANCES = 200_000


def _check_function_free(clauses):
    for c in clauses:
        for l in c.lits:
            for t in l.args:
                for name, arity in term_functions(t):
                    if arity > 0:
                        raise ValueError(
                            f"ground decision needs function-free input, found {name}/{arity}")


def _constants_of(clauses) -> list:
    names = set()
    for c in clauses:
        for l in c.lits:
            for t in l.args:
                for name, arity in term_functions(t):
                    if arity == 0:
                        names.add(name)
    return [Compound(n, ()) for n in sorted(names)]


def _ground_instances(clauses, constants, atom_index, max_atoms):
    ground = []
    count = 0
    for c in clauses:
        vs = c.variables()
        for combo in itertools.product(constants, repeat=len(vs)):
            count += 1
            if count > _MAX_GROUND_INSTANCES:
                raise SizeGuardError(
                    f"more than {_MAX_GROUND_INSTANCES} ground clause instances")
            s = dict(zip(vs, combo))
            lits = []
            taut = False
            for l in c.lits:
                g = Lit(l.pos, l.pred, tuple(subst_term(t, s) for t in l.args))
                if g.negated() in lits:
                    taut = True
                    break
                if g not in lits:
                    lits.append(g)
            if taut:
                continue
            ints = []
            for g in lits:
                key = (g.pred, g.args)
                if key not in atom_index:
                    atom_index[key] = len(atom_index) + 1
                    if len(atom_index) > max_atoms:
                        raise SizeGuardError(
                            f"{len(atom_index)} ground atoms exceed the bound of {max_atoms}")
                idx = atom_index[key]
                ints.append(idx if g.pos else -idx)
            ground.append(ints)
    return ground


def _sat(clauses: list) -> dict | None:
    """Assignment satisfying the integer clauses, or None.  Exhaustive
    backtracking with unit propagation; branches lowest index first,
    false before true."""

    def solve(cls, assign):
        simplified = []
        for c in cls:
            keep = []
            satisfied = False
            for l in c:
                v = abs(l)
                want = l > 0
                if v in assign:
                    if assign[v] == want:
                        satisfied = True
                        break
                else:
                    keep.append(l)
            if satisfied:
                continue
            if not keep:
                return None
            simplified.append(keep)
        if not simplified:
            return assign
        unit = next((c[0] for c in simplified if len(c) == 1), None)
        if unit is not None:
            assign2 = dict(assign)
            assign2[abs(unit)] = unit > 0
            return solve(simplified, assign2)
        v = min(abs(l) for c in simplified for l in c)
        for val in (False, True):
            assign2 = dict(assign)
            assign2[v] = val
            r = solve(simplified, assign2)
            if r is not None:
                return r
        return None

    return solve(clauses, {})


def _atom_text(pred: SuperPred, args) -> str:
    from .tptp import pred_name, term_text
    if not args:
        return pred_name(pred)
    return "%s(%s)" % (pred_name(pred), ",".join(term_text(a) for a in args))


def ground_entails(f: Formula, g: Formula, *, max_atoms: int = 24) -> GroundResult:
    """Exact verdict on f |= g for function-free formulas.

    Refutes f AND NOT g after grounding over the constants in play (a
    single reserved constant when there are none).  Disjunctive branches
    of the negated right side are refuted one at a time so each branch
    only brings its own Skolem constants into the universe.  Raises
    SizeGuardError past max_atoms ground superscripted atoms.
    """
    namer = FreshNamer()
    left = clausify_nnf(prepare_nnf(f, namer), skolemize=True, namer=namer)
    ng = prepare_nnf(neg(g), namer)
    branches = list(ng.parts) if isinstance(ng, Or) else [ng]
    for branch in branches:
        branch_clauses = clausify_nnf(branch, skolemize=True, namer=namer)
        clauses = left + branch_clauses
        _check_function_free(clauses)
        constants = _constants_of(clauses) or [GROUND_CONST]
        atom_index: dict = {}
        ints = _ground_instances(clauses, constants, atom_index, max_atoms)
        model = _sat(ints)
        if model is not None:
            by_index = {v: k for k, v in atom_index.items()}
            countermodel = {}
            for idx in sorted(by_index):
                pred, args = by_index[idx]
                countermodel[_atom_text(pred, args)] = model.get(idx, False)
            return GroundResult(False, countermodel)
    return GroundResult(True, None)


# ---------------------------------------------------------------------------
# Entailment deciders for encodes_program_check and friends

def ground_decider(max_atoms: int = 24):
    def decide(left: Formula, right: Formula):
        return ground_entails(left, right, max_atoms=max_atoms).holds
    return decide


def prover_decider(limits: SearchLimits | None = None):
    def decide(left: Formula, right: Formula):
        return True if entails_by_prover(left, right, limits) else None
    return decide
