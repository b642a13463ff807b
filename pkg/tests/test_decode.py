"""Program extraction from encodings and the simplifications behind it."""

import random

import pytest

from conftest import C1, C2, C3, EX2_C1, EX2_C2, EX2_C3, atom, clause, lit
from oracle import entails as oracle_entails
from oracle import equivalent as oracle_equivalent

from sesynth.decode import (NotAnEncoding, decode, partition_m1, s_subsumes,
                            simplify_modulo_s)
from sesynth.encoding import gamma, rename_0_to_1, s_formula, s_formula_for
from sesynth.fol import (FALSE, clauses_to_formula, clausify, conj, disj,
                         exists, forall, neg)
from sesynth.lp import (Atom, Program, Rule, Var, parse_program, parse_rule,
                        print_program, program_functions, program_predicates)
from sesynth.synthesis import se_oracle_ground


def _formula(*clauses_):
    return clauses_to_formula(list(clauses_))


def test_decode_example_subsumption_partition():
    p = decode(_formula(C1, C2, C3))
    assert p == parse_program("r :- p, not q.\nnot s :- not t, not u.")


def test_decode_example_trivial_partition():
    p = decode(_formula(C1, C2, C3), partition="trivial")
    assert p == parse_program(
        "r :- p, not q.\nnot s :- not t, not u.\nnot p :- not q, not r.")


def test_decode_mixed_clause():
    f = disj([neg(atom("p", 1)), atom("q", 1), atom("r", 0)])
    assert decode(f) == parse_program("r ; not p :- not q.")


def test_decode_example_2_after_simplification():
    p = decode(_formula(EX2_C1, EX2_C2, EX2_C3))
    assert p == parse_program("r :- p, not q.")


def test_partition_m1_subsumption():
    part = partition_m1([C1], [C2, C3])
    assert part.m1_keep == [C2]
    assert part.m1_drop == [C3]
    assert part.witnesses == [(C3, C1)]


def test_partition_m1_empty():
    part = partition_m1([C1], [])
    assert part.m1_keep == [] and part.m1_drop == []


def test_partition_m1_nothing_subsumes():
    part = partition_m1([], [C2])
    assert part.m1_keep == [C2] and part.m1_drop == []


def test_partition_drop_set_is_entailed_by_renamed_m0():
    part = partition_m1([C1], [C2, C3])
    renamed = rename_0_to_1(clauses_to_formula(part.m0))
    for dropped in part.m1_drop:
        assert oracle_entails(renamed, dropped.to_formula())


def test_simplify_modulo_s_example_2():
    assert simplify_modulo_s([EX2_C1, EX2_C2, EX2_C3]) == [EX2_C1, EX2_C3]


def test_simplify_drops_tautology():
    taut = clause(lit(True, "p", 0), lit(False, "p", 0))
    assert simplify_modulo_s([taut]) == []


def test_simplify_nothing_to_do():
    assert simplify_modulo_s([C1]) == [C1]


def test_simplify_drops_duplicate_literals():
    doubled = clause(lit(True, "p", 0), lit(True, "p", 0))
    assert simplify_modulo_s([doubled]) == [clause(lit(True, "p", 0))]


def test_s_subsumption_covers():
    # a positive 0-literal covers its 1-copy, a negative 1-literal its 0-copy
    assert s_subsumes(clause(lit(True, "p", 0)), clause(lit(True, "p", 1)))
    assert s_subsumes(clause(lit(False, "p", 1)), clause(lit(False, "p", 0)))
    assert not s_subsumes(clause(lit(True, "p", 1)), clause(lit(True, "p", 0)))
    assert not s_subsumes(clause(lit(False, "p", 0)), clause(lit(False, "p", 1)))


def test_simplify_preserves_equivalence_modulo_s():
    rng = random.Random(21)
    for _ in range(60):
        cs = [_random_clause(rng) for _ in range(rng.randint(1, 4))]
        simplified = simplify_modulo_s(cs)
        s = s_formula({("p", 0), ("q", 0)})
        before = conj([s, clauses_to_formula(cs)])
        after = conj([s, clauses_to_formula(simplified)])
        assert oracle_equivalent(before, after)


def _random_clause(rng):
    lits = []
    for _ in range(rng.randint(1, 3)):
        lits.append(lit(rng.random() < 0.5, rng.choice("pq"), rng.randint(0, 1)))
    return clause(*lits)


def test_decode_rejects_non_universal():
    x = Var("X")
    with pytest.raises(NotAnEncoding):
        decode(exists([x], atom("p", 0, x)))


def test_decode_rejects_primed_predicates():
    with pytest.raises(NotAnEncoding):
        decode(atom("p", 0, primed=True))


def test_decode_rejects_empty_clause():
    with pytest.raises(NotAnEncoding):
        decode(FALSE)


def test_decode_literal_ordering_is_sorted():
    f = _formula(clause(lit(True, "b", 0), lit(True, "a", 0),
                        lit(False, "d", 0), lit(False, "c", 0)))
    assert print_program(decode(f)) == "a ; b :- c, d.\n"


def test_decode_roundtrip_random_programs():
    rng = random.Random(22)
    for _ in range(60):
        p = _random_program(rng)
        decoded = decode(gamma(p))
        assert program_predicates(decoded) <= program_predicates(p)
        assert program_functions(decoded) <= program_functions(p)
        assert se_oracle_ground(decoded, p).holds
        # the contract the construction promises, checked per run:
        # modulo the persistence axioms the decoded encoding is the input
        s = s_formula_for(gamma(p)) if gamma(p) != conj([]) else s_formula(set())
        lhs = conj([s, gamma(decoded)])
        rhs = conj([s, gamma(p)])
        assert oracle_equivalent(lhs, rhs)


def _random_program(rng):
    preds = ["p", "q", "r"]
    rules = []
    for _ in range(rng.randint(0, 3)):
        pools = [[Atom(x) for x in rng.sample(preds, rng.randint(0, 2))]
                 for _ in range(4)]
        if not any(pools):
            pools[0] = [Atom(rng.choice(preds))]
        rules.append(Rule.make(*pools))
    return Program(tuple(rules))


def test_decode_keeps_variables():
    p = parse_program("r(X) :- p(X), not q(X).")
    decoded = decode(gamma(p))
    assert len(decoded.rules) == 1
    rule = decoded.rules[0]
    assert len(rule.pos_head) == 1 and rule.pos_head[0].args
    assert se_oracle_ground(decoded, p).holds
