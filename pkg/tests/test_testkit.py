import random

import pytest

from semiauto.core import Automaton
from semiauto.semigroup import semigroup
from semiauto.testkit import (
    GeneratorConfig,
    GeneratorError,
    all_homomorphisms,
    all_isomorphisms,
    bf_permutation,
    bf_product,
    bf_strongly_connected,
    bf_synchronizing,
    canonical_form,
    gen_exhaustive,
    gen_permutation_automata,
    gen_random,
    oracle_factorization,
    oracle_semigroup,
    set_partitions,
    shuffle_states,
)


def test_exhaustive_counts():
    assert sum(1 for _ in gen_exhaustive(1, 2)) == 1
    assert sum(1 for _ in gen_exhaustive(2, 1)) == 4
    assert sum(1 for _ in gen_exhaustive(2, 2)) == 16
    assert sum(1 for _ in gen_exhaustive(3, 2)) == 729


def test_exhaustive_distinct_and_ordered():
    tables = [a.table for a in gen_exhaustive(2, 2)]
    assert len(set(tables)) == 16
    assert tables[0] == ((0, 0), (0, 0))
    # state-major ordering: the last letter of the last state varies fastest
    assert tables[1] == ((0, 0), (0, 1))


def test_exhaustive_cap():
    with pytest.raises(GeneratorError):
        next(gen_exhaustive(6, 2))
    with pytest.raises(GeneratorError):
        GeneratorConfig(6, 2, exhaustive=True)


def test_random_deterministic():
    cfg = GeneratorConfig(5, 2, seed=42, filters=("strongly_connected",))
    assert gen_random(cfg) == gen_random(cfg)
    rng1, rng2 = random.Random(7), random.Random(7)
    seq1 = [gen_random(cfg, rng1) for _ in range(20)]
    seq2 = [gen_random(cfg, rng2) for _ in range(20)]
    assert seq1 == seq2
    assert len({a.table for a in seq1}) > 1


@pytest.mark.parametrize("filters", [("strongly_connected",), ("permutation",), ("synchronizing",),
                                     ("permutation", "strongly_connected"), ("synchronizing", "strongly_connected")])
def test_random_filters(filters):
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(2, 6)
        aut = gen_random(GeneratorConfig(n, 2, filters=filters), rng)
        assert GeneratorConfig(n, 2, filters=filters).accepts(aut)


def test_permutation_filter_bijective():
    rng = random.Random(0)
    for _ in range(100):
        aut = gen_random(GeneratorConfig(6, 3, filters=("permutation",)), rng)
        assert all(sorted(row) == list(range(6)) for row in aut.table)


def test_unsatisfiable_filters():
    with pytest.raises(GeneratorError, match="attempts"):
        gen_random(GeneratorConfig(3, 2, filters=("permutation", "synchronizing")))
    with pytest.raises(GeneratorError, match="unknown filter"):
        GeneratorConfig(3, 2, filters=("acyclic",))
    with pytest.raises(GeneratorError):
        GeneratorConfig(0, 2)


def test_bf_predicates(A, B, AxB):
    assert bf_strongly_connected(A) and bf_permutation(A) and not bf_synchronizing(A)
    assert bf_strongly_connected(B) and not bf_permutation(B) and bf_synchronizing(B)
    assert bf_strongly_connected(AxB) and not bf_synchronizing(AxB)
    loop = Automaton(("p", "q"), ("a",), ((0, 1),))
    assert not bf_strongly_connected(loop) and bf_permutation(loop) and not bf_synchronizing(loop)


def test_oracle_semigroup_small(A, B, single):
    assert len(oracle_semigroup(A, 6)) == 6
    assert len(oracle_semigroup(B, 4)) == 2
    assert oracle_semigroup(single, 1) == {(0,)}


def test_oracle_semigroup_literal_vs_levels():
    rng = random.Random(11)
    for _ in range(40):
        aut = gen_random(GeneratorConfig(rng.randint(1, 4), rng.randint(1, 2)), rng)
        for L in range(1, 7):
            assert oracle_semigroup(aut, L, literal=True) == oracle_semigroup(aut, L, literal=False)


def test_oracle_semigroup_matches_bfs(C):
    assert oracle_semigroup(C, 12, literal=False) == {e.mapping for e in semigroup(C).elements}


def test_bf_product(A, B, AxB):
    assert bf_product(A, B) == AxB


def test_canonical_form(C, AxB):
    assert canonical_form(C) == canonical_form(AxB)
    rng = random.Random(5)
    for _ in range(50):
        aut = gen_random(GeneratorConfig(rng.randint(1, 5), 2, filters=("strongly_connected",)), rng)
        assert canonical_form(shuffle_states(aut, rng)) == canonical_form(aut)
    with pytest.raises(ValueError):
        canonical_form(Automaton(("p", "q"), ("a",), ((0, 1),)))


def test_canonical_form_separates_non_isomorphic():
    autos = [a for a in gen_exhaustive(3, 2) if bf_strongly_connected(a)]
    for x in autos[:40]:
        for y in autos[:40]:
            same = canonical_form(x) == canonical_form(y)
            assert same == any(True for _ in all_isomorphisms(x, y))


def test_homomorphism_enumeration(C, A, B):
    to_a = list(all_homomorphisms(C, A))
    to_b = list(all_homomorphisms(C, B))
    assert (0, 0, 1, 1, 2, 2) in to_a
    assert (0, 1, 0, 1, 0, 1) in to_b
    assert len(list(all_isomorphisms(C, C))) >= 1


def test_gen_permutation_automata():
    autos = list(gen_permutation_automata(3, 2))
    assert len(autos) == 36 and all(bf_permutation(a) for a in autos)


def test_set_partitions_bell_numbers():
    assert [sum(1 for _ in set_partitions(n)) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


def test_oracle_factorization_known(A, B, C, AxB, single):
    for aut in (A, B, C, AxB, single):
        assert oracle_factorization(aut)
        assert oracle_factorization(aut, method="partitions")
    two = Automaton(("p", "q"), ("a",), ((0, 1),))
    assert not oracle_factorization(two)
    assert not oracle_factorization(two, method="partitions")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_oracle_methods_agree(n):
    for aut in gen_exhaustive(n, 2):
        assert oracle_factorization(aut, "enumerate") == oracle_factorization(aut, "partitions")


def test_oracle_methods_agree_n4_sample():
    rng = random.Random(2)
    for _ in range(300):
        aut = gen_random(GeneratorConfig(4, 2, filters=("strongly_connected",)), rng)
        assert oracle_factorization(aut, "enumerate") == oracle_factorization(aut, "partitions")


def test_oracle_factorization_cap():
    with pytest.raises(GeneratorError):
        oracle_factorization(gen_random(GeneratorConfig(9, 1)))
