"""First-order formulas over 0/1-superscripted predicates.

Provides the formula AST shared by the whole pipeline, polarity and
vocabulary queries, syntactic unification with occurs-check, and
clausification (equivalence-preserving for universal formulas,
Skolemizing otherwise).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .lp import Compound, Term, Var, term_functions, term_vars


# ---------------------------------------------------------------------------
# Predicates and formulas

@dataclass(frozen=True)
class SuperPred:
    """A formula predicate: base name plus 0/1 superscript.

    Primed copies (fresh predicates standing for hidden vocabulary) keep
    the base name and carry a flag instead of a mangled name.
    """

    base: str
    sup: int
    arity: int
    primed: bool = False

    def with_sup(self, sup: int) -> "SuperPred":
        return SuperPred(self.base, sup, self.arity, self.primed)

    def with_primed(self) -> "SuperPred":
        return SuperPred(self.base, self.sup, self.arity, True)

    def __str__(self) -> str:
        return "%s%s^%d" % (self.base, "'" if self.primed else "", self.sup)


@dataclass(frozen=True)
class Truth:
    positive: bool

    def __str__(self) -> str:
        return "$true" if self.positive else "$false"


TRUE = Truth(True)
FALSE = Truth(False)


@dataclass(frozen=True)
class FolAtom:
    pred: SuperPred
    args: tuple = ()

    def __post_init__(self):
        if len(self.args) != self.pred.arity:
            raise ValueError(
                f"{self.pred} applied to {len(self.args)} arguments")

    def __str__(self) -> str:
        if not self.args:
            return str(self.pred)
        return "%s(%s)" % (self.pred, ",".join(str(a) for a in self.args))


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    parts: tuple


@dataclass(frozen=True)
class Or:
    parts: tuple


@dataclass(frozen=True)
class Implies:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Iff:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Forall:
    vars: tuple
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    vars: tuple
    body: "Formula"


Formula = Truth | FolAtom | Not | And | Or | Implies | Iff | Forall | Exists


# Smart constructors: flatten, fold truth constants, drop duplicates.

def conj(parts: Iterable[Formula]) -> Formula:
    out: list = []
    for p in parts:
        if isinstance(p, And):
            items = p.parts
        else:
            items = (p,)
        for q in items:
            if q == TRUE:
                continue
            if q == FALSE:
                return FALSE
            if q not in out:
                out.append(q)
    if not out:
        return TRUE
    if len(out) == 1:
        return out[0]
    return And(tuple(out))


def disj(parts: Iterable[Formula]) -> Formula:
    out: list = []
    for p in parts:
        if isinstance(p, Or):
            items = p.parts
        else:
            items = (p,)
        for q in items:
            if q == FALSE:
                continue
            if q == TRUE:
                return TRUE
            if q not in out:
                out.append(q)
    if not out:
        return FALSE
    if len(out) == 1:
        return out[0]
    return Or(tuple(out))


def neg(f: Formula) -> Formula:
    if isinstance(f, Truth):
        return FALSE if f.positive else TRUE
    if isinstance(f, Not):
        return f.body
    return Not(f)


def forall(vs: Iterable[Var], body: Formula) -> Formula:
    vs = tuple(vs)
    if not vs:
        return body
    if isinstance(body, Forall):
        return Forall(vs + body.vars, body.body)
    return Forall(vs, body)


def exists(vs: Iterable[Var], body: Formula) -> Formula:
    vs = tuple(vs)
    if not vs:
        return body
    if isinstance(body, Exists):
        return Exists(vs + body.vars, body.body)
    return Exists(vs, body)


def implies(lhs: Formula, rhs: Formula) -> Formula:
    if lhs == TRUE:
        return rhs
    return Implies(lhs, rhs)


# ---------------------------------------------------------------------------
# Traversals

def map_atoms(f: Formula, fn: Callable[[FolAtom], Formula]) -> Formula:
    """Rebuild a formula with every atom replaced by fn(atom)."""
    if isinstance(f, Truth):
        return f
    if isinstance(f, FolAtom):
        return fn(f)
    if isinstance(f, Not):
        return neg(map_atoms(f.body, fn))
    if isinstance(f, And):
        return conj(map_atoms(p, fn) for p in f.parts)
    if isinstance(f, Or):
        return disj(map_atoms(p, fn) for p in f.parts)
    if isinstance(f, Implies):
        lhs = map_atoms(f.lhs, fn)
        rhs = map_atoms(f.rhs, fn)
        if lhs == TRUE:
            return rhs
        if lhs == FALSE:
            return TRUE
        if rhs == TRUE:
            return TRUE
        return Implies(lhs, rhs)
    if isinstance(f, Iff):
        return Iff(map_atoms(f.lhs, fn), map_atoms(f.rhs, fn))
    if isinstance(f, Forall):
        return forall(f.vars, map_atoms(f.body, fn))
    if isinstance(f, Exists):
        return exists(f.vars, map_atoms(f.body, fn))
    raise TypeError(f"not a formula: {f!r}")


def atoms_of(f: Formula) -> Iterator[FolAtom]:
    if isinstance(f, FolAtom):
        yield f
    elif isinstance(f, Not):
        yield from atoms_of(f.body)
    elif isinstance(f, (And, Or)):
        for p in f.parts:
            yield from atoms_of(p)
    elif isinstance(f, (Implies, Iff)):
        yield from atoms_of(f.lhs)
        yield from atoms_of(f.rhs)
    elif isinstance(f, (Forall, Exists)):
        yield from atoms_of(f.body)


def formula_preds(f: Formula) -> set:
    return {a.pred for a in atoms_of(f)}


def pred_signed(f: Formula) -> set:
    """Polarity/predicate pairs (pos: bool, SuperPred) of atom occurrences.

    Implication antecedents flip polarity; under an equivalence every
    atom counts with both polarities.
    """
    out: set = set()

    def walk(g, pol):
        if isinstance(g, Truth):
            return
        if isinstance(g, FolAtom):
            out.add((pol, g.pred))
        elif isinstance(g, Not):
            walk(g.body, not pol)
        elif isinstance(g, (And, Or)):
            for p in g.parts:
                walk(p, pol)
        elif isinstance(g, Implies):
            walk(g.lhs, not pol)
            walk(g.rhs, pol)
        elif isinstance(g, Iff):
            for p in (g.lhs, g.rhs):
                walk(p, True)
                walk(p, False)
        elif isinstance(g, (Forall, Exists)):
            walk(g.body, pol)
        else:
            raise TypeError(f"not a formula: {g!r}")

    walk(f, True)
    return out


def pred_lp(f: Formula) -> set:
    """Program-level (name, arity) pairs behind the superscripted predicates.

    Primed internal copies are not program predicates and are excluded;
    use lp_bases() when they matter.
    """
    return {(p.base, p.arity) for p in formula_preds(f) if not p.primed}


def lp_bases(f: Formula) -> set:
    """(name, arity, primed) triples of all superscripted predicates."""
    return {(p.base, p.arity, p.primed) for p in formula_preds(f)}


def formula_functions(f: Formula) -> set:
    out: set = set()
    for a in atoms_of(f):
        for t in a.args:
            out |= term_functions(t)
    return out


def is_universal(f: Formula) -> bool:
    """True iff every universal quantifier occurs positively and every
    existential one negatively."""

    def walk(g, pol):
        if isinstance(g, (Truth, FolAtom)):
            return True
        if isinstance(g, Not):
            return walk(g.body, not pol)
        if isinstance(g, (And, Or)):
            return all(walk(p, pol) for p in g.parts)
        if isinstance(g, Implies):
            return walk(g.lhs, not pol) and walk(g.rhs, pol)
        if isinstance(g, Iff):
            return all(walk(p, q) for p in (g.lhs, g.rhs) for q in (True, False))
        if isinstance(g, Forall):
            return pol and walk(g.body, pol)
        if isinstance(g, Exists):
            return (not pol) and walk(g.body, pol)
        raise TypeError(f"not a formula: {g!r}")

    return walk(f, True)


def formula_vars(f: Formula) -> list:
    """Variables occurring in atom arguments, first-occurrence order."""
    acc: list = []
    for a in atoms_of(f):
        for t in a.args:
            term_vars(t, acc)
    return acc


# ---------------------------------------------------------------------------
# Substitutions and unification

def subst_term(t: Term, s: dict) -> Term:
    if isinstance(t, Var):
        return s.get(t, t)
    if not t.args:
        return t
    return Compound(t.functor, tuple(subst_term(a, s) for a in t.args))


def map_terms(f: Formula, s: dict) -> Formula:
    """Apply a variable substitution to all atom arguments.

    Quantified variable lists are left alone; callers must have
    standardized apart when capture could occur.
    """
    def on_atom(a: FolAtom) -> Formula:
        return FolAtom(a.pred, tuple(subst_term(t, s) for t in a.args))

    def walk(g):
        if isinstance(g, Truth):
            return g
        if isinstance(g, FolAtom):
            return on_atom(g)
        if isinstance(g, Not):
            return Not(walk(g.body))
        if isinstance(g, And):
            return And(tuple(walk(p) for p in g.parts))
        if isinstance(g, Or):
            return Or(tuple(walk(p) for p in g.parts))
        if isinstance(g, Implies):
            return Implies(walk(g.lhs), walk(g.rhs))
        if isinstance(g, Iff):
            return Iff(walk(g.lhs), walk(g.rhs))
        if isinstance(g, Forall):
            return Forall(g.vars, walk(g.body))
        if isinstance(g, Exists):
            return Exists(g.vars, walk(g.body))
        raise TypeError(f"not a formula: {g!r}")

    return walk(f)


def _occurs(v: Var, t: Term, s: dict) -> bool:
    t = walk_term(t, s)
    if isinstance(t, Var):
        return t == v
    return any(_occurs(v, a, s) for a in t.args)


def walk_term(t: Term, s: dict) -> Term:
    while isinstance(t, Var) and t in s:
        t = s[t]
    return t


def resolve_term(t: Term, s: dict) -> Term:
    t = walk_term(t, s)
    if isinstance(t, Var):
        return t
    if not t.args:
        return t
    return Compound(t.functor, tuple(resolve_term(a, s) for a in t.args))


def unify(t1: Term, t2: Term, s: dict | None = None) -> dict | None:
    """Most general unifier extending s, or None.  Occurs-check is on."""
    s = dict(s) if s else {}
    if _unify_into(t1, t2, s):
        return s
    return None


def _unify_into(t1: Term, t2: Term, s: dict) -> bool:
    """Destructive unification used by the solver; caller manages undo."""
    t1 = walk_term(t1, s)
    t2 = walk_term(t2, s)
    if t1 == t2:
        return True
    if isinstance(t1, Var):
        if _occurs(t1, t2, s):
            return False
        s[t1] = t2
        return True
    if isinstance(t2, Var):
        if _occurs(t2, t1, s):
            return False
        s[t2] = t1
        return True
    if t1.functor != t2.functor or len(t1.args) != len(t2.args):
        return False
    return all(_unify_into(a, b, s) for a, b in zip(t1.args, t2.args))


def unify_seq(args1: tuple, args2: tuple, s: dict | None = None) -> dict | None:
    if len(args1) != len(args2):
        return None
    s = dict(s) if s else {}
    for a, b in zip(args1, args2):
        if not _unify_into(a, b, s):
            return None
    return s


def match_term(pat: Term, target: Term, s: dict) -> bool:
    """One-way matching: binds pattern variables only.

    Pattern and target variables must be disjoint (rename apart first);
    binding images are target-side terms and are compared syntactically.
    """
    if isinstance(pat, Var):
        if pat in s:
            return s[pat] == target
        s[pat] = target
        return True
    if isinstance(target, Var):
        return False
    if pat.functor != target.functor or len(pat.args) != len(target.args):
        return False
    return all(match_term(a, b, s) for a, b in zip(pat.args, target.args))


# ---------------------------------------------------------------------------
# Clausal forms

@dataclass(frozen=True)
class Lit:
    pos: bool
    pred: SuperPred
    args: tuple = ()

    def negated(self) -> "Lit":
        return Lit(not self.pos, self.pred, self.args)

    def subst(self, s: dict) -> "Lit":
        return Lit(self.pos, self.pred,
                   tuple(resolve_term(a, s) for a in self.args))

    def to_formula(self) -> Formula:
        atom = FolAtom(self.pred, self.args)
        return atom if self.pos else Not(atom)

    def __str__(self) -> str:
        s = str(FolAtom(self.pred, self.args))
        return s if self.pos else "~" + s


@dataclass(frozen=True)
class Clause:
    lits: tuple = ()

    def variables(self) -> list:
        acc: list = []
        for l in self.lits:
            for t in l.args:
                term_vars(t, acc)
        return acc

    def subst(self, s: dict) -> "Clause":
        return Clause(tuple(l.subst(s) for l in self.lits))

    def is_tautology(self) -> bool:
        seen = {(l.pos, l.pred, l.args) for l in self.lits}
        return any((not p, pr, ar) in seen for (p, pr, ar) in seen)

    def to_formula(self) -> Formula:
        return disj(l.to_formula() for l in self.lits)

    def __str__(self) -> str:
        if not self.lits:
            return "$false"
        return " | ".join(str(l) for l in self.lits)


def clauses_to_formula(clauses: Iterable[Clause]) -> Formula:
    """Conjunction of clause disjunctions, universally closed as a whole."""
    clauses = list(clauses)
    body = conj(c.to_formula() for c in clauses)
    vs: list = []
    for c in clauses:
        for v in c.variables():
            if v not in vs:
                vs.append(v)
    return forall(vs, body)


def subsumes(d: Clause, c: Clause) -> bool:
    """True iff some instance of d is a subclause of c."""
    return _subsume_search(list(d.lits), c, {},
                           lambda dl, cl: dl.pos == cl.pos and dl.pred == cl.pred)


def _subsume_search(pending: list, c: Clause, s: dict, fits) -> bool:
    if not pending:
        return True
    dl = pending[0]
    for cl in c.lits:
        if not fits(dl, cl):
            continue
        trial = dict(s)
        if all(match_term(a, b, trial) for a, b in zip(dl.args, cl.args)):
            if _subsume_search(pending[1:], c, trial, fits):
                return True
    return False


# ---------------------------------------------------------------------------
# Fresh-name generation (scoped to one pipeline invocation)

class FreshNamer:
    def __init__(self):
        self._vars = 0
        self._skolems = 0

    def fresh_var(self) -> Var:
        self._vars += 1
        return Var(f"V{self._vars}")

    def fresh_skolem(self) -> str:
        self._skolems += 1
        return f"sk_{self._skolems}"


# ---------------------------------------------------------------------------
# Clausification

def nnf(f: Formula) -> Formula:
    """Negation normal form with Implies/Iff expanded."""

    def walk(g, pol):
        if isinstance(g, Truth):
            return g if pol else neg(g)
        if isinstance(g, FolAtom):
            return g if pol else Not(g)
        if isinstance(g, Not):
            return walk(g.body, not pol)
        if isinstance(g, And):
            parts = [walk(p, pol) for p in g.parts]
            return conj(parts) if pol else disj(parts)
        if isinstance(g, Or):
            parts = [walk(p, pol) for p in g.parts]
            return disj(parts) if pol else conj(parts)
        if isinstance(g, Implies):
            a, b = walk(g.lhs, not pol), walk(g.rhs, pol)
            return disj([a, b]) if pol else conj([a, b])
        if isinstance(g, Iff):
            both = [disj([walk(g.lhs, False), walk(g.rhs, True)]),
                    disj([walk(g.rhs, False), walk(g.lhs, True)])]
            return conj(both) if pol else neg_nnf(conj(both))
        if isinstance(g, Forall):
            inner = walk(g.body, pol)
            return forall(g.vars, inner) if pol else exists(g.vars, inner)
        if isinstance(g, Exists):
            inner = walk(g.body, pol)
            return exists(g.vars, inner) if pol else forall(g.vars, inner)
        raise TypeError(f"not a formula: {g!r}")

    def neg_nnf(g):
        return walk(g, False)

    return walk(f, True)


def _is_literal(f: Formula) -> bool:
    return isinstance(f, FolAtom) or (isinstance(f, Not) and isinstance(f.body, FolAtom))


def _lit_key(f: Formula):
    if isinstance(f, FolAtom):
        return (True, f.pred, f.args)
    return (False, f.body.pred, f.body.args)


def _fold_contradictions(f: Formula) -> Formula:
    """Fold conjunctions with complementary literals to $false (dually for
    disjunctions).  Keeps negated gamma matrices from bloating the CNF."""
    if isinstance(f, And):
        parts = [_fold_contradictions(p) for p in f.parts]
        keys = {_lit_key(p) for p in parts if _is_literal(p)}
        if any((not k[0], k[1], k[2]) in keys for k in keys):
            return FALSE
        return conj(parts)
    if isinstance(f, Or):
        parts = [_fold_contradictions(p) for p in f.parts]
        keys = {_lit_key(p) for p in parts if _is_literal(p)}
        if any((not k[0], k[1], k[2]) in keys for k in keys):
            return TRUE
        return disj(parts)
    if isinstance(f, Forall):
        return forall(f.vars, _fold_contradictions(f.body))
    if isinstance(f, Exists):
        return exists(f.vars, _fold_contradictions(f.body))
    return f


def _standardize(f: Formula, env: dict, namer: FreshNamer) -> Formula:
    if isinstance(f, Truth):
        return f
    if isinstance(f, FolAtom):
        return FolAtom(f.pred, tuple(subst_term(a, env) for a in f.args))
    if isinstance(f, Not):
        return Not(_standardize(f.body, env, namer))
    if isinstance(f, And):
        return And(tuple(_standardize(p, env, namer) for p in f.parts))
    if isinstance(f, Or):
        return Or(tuple(_standardize(p, env, namer) for p in f.parts))
    if isinstance(f, (Forall, Exists)):
        fresh = [namer.fresh_var() for _ in f.vars]
        env2 = dict(env)
        env2.update(zip(f.vars, fresh))
        body = _standardize(f.body, env2, namer)
        kind = Forall if isinstance(f, Forall) else Exists
        return kind(tuple(fresh), body)
    raise TypeError(f"expected NNF, got {f!r}")


def _push_quantifiers(f: Formula) -> Formula:
    """Narrow universal scopes: distribute over conjunctions, strip unused
    variables, and leave disjuncts that do not mention a variable outside
    its quantifier.  Existentials stay put so disjuncts can be fused."""
    if isinstance(f, (Truth, FolAtom, Not)):
        return f
    if isinstance(f, And):
        return conj(_push_quantifiers(p) for p in f.parts)
    if isinstance(f, Or):
        return disj(_push_quantifiers(p) for p in f.parts)
    if isinstance(f, Exists):
        body = _push_quantifiers(f.body)
        used = set(formula_vars(body))
        return exists([v for v in f.vars if v in used], body)
    if isinstance(f, Forall):
        body = _push_quantifiers(f.body)
        for v in reversed(f.vars):
            if isinstance(body, And):
                body = conj(_push_forall(v, p) for p in body.parts)
            else:
                body = _push_forall(v, body)
        return body
    raise TypeError(f"expected NNF, got {f!r}")


def _push_forall(v: Var, f: Formula) -> Formula:
    if v not in formula_vars(f):
        return f
    if isinstance(f, Or):
        using = [p for p in f.parts if v in formula_vars(p)]
        rest = [p for p in f.parts if v not in formula_vars(p)]
        if rest:
            return disj([_push_forall(v, disj(using))] + rest)
    if isinstance(f, Forall):
        return Forall((v,) + f.vars, f.body)
    return Forall((v,), f)


def _fuse_existentials(f: Formula, namer: FreshNamer) -> Formula:
    """Merge existential disjuncts over one shared variable tuple (padded
    to the longest), so fewer variables are Skolemized:
    (exists X F) | (exists X,Y G) becomes exists X,Y (F | G)."""
    if isinstance(f, Or):
        parts = [_fuse_existentials(p, namer) for p in f.parts]
        members = [p for p in parts if isinstance(p, Exists)]
        rest = [p for p in parts if not isinstance(p, Exists)]
        if len(members) < 2:
            return disj(members + rest)
        canon = [namer.fresh_var() for _ in range(max(len(m.vars) for m in members))]
        bodies = [map_terms(m.body, dict(zip(m.vars, canon))) for m in members]
        return disj([Exists(tuple(canon), disj(bodies))] + rest)
    if isinstance(f, And):
        return conj(_fuse_existentials(p, namer) for p in f.parts)
    if isinstance(f, (Forall, Exists)):
        kind = Forall if isinstance(f, Forall) else Exists
        return kind(f.vars, _fuse_existentials(f.body, namer))
    return f


def _skolemize(f: Formula, scope: tuple, namer: FreshNamer) -> Formula:
    if isinstance(f, (Truth, FolAtom, Not)):
        return f
    if isinstance(f, And):
        return conj(_skolemize(p, scope, namer) for p in f.parts)
    if isinstance(f, Or):
        return disj(_skolemize(p, scope, namer) for p in f.parts)
    if isinstance(f, Forall):
        return forall(f.vars, _skolemize(f.body, scope + f.vars, namer))
    if isinstance(f, Exists):
        s = {v: Compound(namer.fresh_skolem(), scope) for v in f.vars}
        return _skolemize(map_terms(f.body, s), scope, namer)
    raise TypeError(f"expected NNF, got {f!r}")


def _strip_foralls(f: Formula) -> Formula:
    if isinstance(f, Forall):
        return _strip_foralls(f.body)
    if isinstance(f, And):
        return conj(_strip_foralls(p) for p in f.parts)
    if isinstance(f, Or):
        return disj(_strip_foralls(p) for p in f.parts)
    return f


def _matrix_clauses(f: Formula) -> list:
    """CNF of a quantifier-free NNF matrix, by distribution.

    Tautological product clauses are dropped on the fly.
    """
    if isinstance(f, Truth):
        return [] if f.positive else [Clause()]
    if _is_literal(f):
        pos, pred, args = _lit_key(f)
        return [Clause((Lit(pos, pred, args),))]
    if isinstance(f, And):
        out = []
        for p in f.parts:
            out.extend(_matrix_clauses(p))
        return out
    if isinstance(f, Or):
        lists = [_matrix_clauses(p) for p in f.parts]
        out = []
        for combo in itertools.product(*lists):
            lits: list = []
            taut = False
            for c in combo:
                for l in c.lits:
                    if l.negated() in lits:
                        taut = True
                        break
                    if l not in lits:
                        lits.append(l)
                if taut:
                    break
            if not taut:
                out.append(Clause(tuple(lits)))
        return out
    raise TypeError(f"expected a quantifier-free matrix, got {f!r}")


def _dedup_clauses(clauses: list) -> list:
    out: list = []
    seen = set()
    for c in clauses:
        key = frozenset(c.lits)
        if key not in seen:
            seen.add(key)
            out.append(c)
    return out


def prepare_nnf(f: Formula, namer: FreshNamer) -> Formula:
    """NNF with folded contradictions, distinct bound variables, narrowed
    quantifier scopes, and fused existential disjuncts."""
    g = nnf(f)
    g = _fold_contradictions(g)
    g = _standardize(g, {}, namer)
    g = _push_quantifiers(g)
    g = _fuse_existentials(g, namer)
    return g


def clausify_nnf(f: Formula, *, skolemize: bool, namer: FreshNamer) -> list:
    """Clauses from a prepared NNF (see prepare_nnf)."""
    if not skolemize and _has_exists(f):
        raise ValueError("universal-only clausification given an existential")
    g = _skolemize(f, (), namer) if skolemize else f
    g = _strip_foralls(g)
    return _dedup_clauses(_matrix_clauses(g))


def skolemized_matrix(f: Formula, namer: FreshNamer) -> Formula:
    """Skolemize a prepared NNF and drop the universal quantifiers,
    leaving a quantifier-free matrix with implicitly universal variables."""
    return _strip_foralls(_skolemize(f, (), namer))


def matrix_clauses(f: Formula) -> list:
    """CNF clauses of a quantifier-free NNF matrix."""
    return _dedup_clauses(_matrix_clauses(f))


def _has_exists(f: Formula) -> bool:
    if isinstance(f, Exists):
        return True
    if isinstance(f, (And, Or)):
        return any(_has_exists(p) for p in f.parts)
    if isinstance(f, Forall):
        return _has_exists(f.body)
    return False


def clausify(f: Formula, *, skolemize: bool = False,
             namer: FreshNamer | None = None) -> list:
    """Convert to a list of clauses.

    With skolemize=False the input must be universal and the result is
    logically equivalent (implicitly universally quantified); with
    skolemize=True it is equisatisfiable, existentials replaced by fresh
    sk_N terms over the universals actually in scope.
    """
    if not skolemize and not is_universal(f):
        raise ValueError("universal-only clausification of a non-universal formula")
    namer = namer or FreshNamer()
    return clausify_nnf(prepare_nnf(f, namer), skolemize=skolemize, namer=namer)
