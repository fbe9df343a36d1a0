import itertools

import pytest
from hypothesis import given, settings

from semiauto.core import Automaton, AutomatonError, apply, make_automaton, transformation_of_word
from semiauto.semigroup import semigroup
from semiauto.structure import (
    find_reset_word,
    idempotent_image_partition,
    is_permutation,
    is_right_simple,
    is_strongly_connected,
    is_synchronizing,
    minimal_ideal,
    quasi_ideal_report,
    reset_word_to,
)
from semiauto.testkit import bf_strongly_connected, bf_synchronizing

from strategies import automata


def names(aut, block):
    return {aut.states[i] for i in block}


def test_strongly_connected(A, AxB, single):
    assert is_strongly_connected(A)
    assert is_strongly_connected(AxB)
    assert is_strongly_connected(single)
    aut = make_automaton(["p", "q"], ["a"], [("p", "a", "p"), ("q", "a", "p")])
    assert not is_strongly_connected(aut)


def test_permutation(A, B, single):
    assert is_permutation(A)
    assert not is_permutation(B)
    assert is_permutation(single)


def test_synchronizing(A, B, single):
    assert is_synchronizing(B)
    assert find_reset_word(B) == ("0",)
    assert not is_synchronizing(A)
    assert find_reset_word(A) is None
    assert find_reset_word(single) == ("a",)


def test_reset_word_to(B, AxB, A):
    assert transformation_of_word(B, reset_word_to(B, None, "t2")) == transformation_of_word(B, "1")
    assert transformation_of_word(B, reset_word_to(B, None, "t1")) == transformation_of_word(B, "0")
    with pytest.raises(AutomatonError, match="not synchronizing"):
        reset_word_to(A, None, "s1")
    with pytest.raises(AutomatonError):
        reset_word_to(B, None, "t9")
    loops = make_automaton(["p", "q"], ["a"], [("p", "a", "p"), ("q", "a", "p")])
    with pytest.raises(AutomatonError, match="strongly connected"):
        reset_word_to(loops, None, "p")


def test_reset_word_to_product_is_not_synchronizing(AxB):
    # A×B has minimal rank 3, so no word collapses it to one state
    with pytest.raises(AutomatonError, match="not synchronizing"):
        reset_word_to(AxB, None, "(s2,t1)")


@settings(max_examples=100)
@given(automata(max_states=5, max_letters=2))
def test_reset_word_to_reaches_target(aut):
    if not (bf_strongly_connected(aut) and bf_synchronizing(aut)):
        return
    for target in aut.states:
        w = reset_word_to(aut, None, target)
        assert all(apply(aut, s, w) == target for s in aut.states)


def test_minimal_ideal_A(A):
    sg = semigroup(A)
    ideal = minimal_ideal(sg)
    assert ideal.members == tuple(range(6))
    assert ideal.min_rank == 3
    assert [sg.elements[e].label for e in ideal.idempotents] == ["00"]
    assert ideal.right_simple and ideal.right_group


def test_minimal_ideal_B(B):
    sg = semigroup(B)
    ideal = minimal_ideal(sg)
    assert ideal.members == (0, 1) and ideal.min_rank == 1
    assert ideal.idempotents == (0, 1)
    assert is_right_simple(ideal, sg)
    for a, b in itertools.product(ideal.members, repeat=2):
        assert sg.multiply(a, b) == b


def test_minimal_ideal_AxB(AxB):
    sg = semigroup(AxB)
    ideal = minimal_ideal(sg)
    assert len(ideal.members) == 12 and ideal.min_rank == 3
    assert [sg.elements[e].label for e in ideal.idempotents] == ["00", "11"]
    assert is_right_simple(ideal, sg)


def test_right_zero_two_constants():
    aut = make_automaton(["p", "q"], ["a", "b"], {"p": {"a": "p", "b": "q"}, "q": {"a": "p", "b": "q"}})
    sg = semigroup(aut)
    assert is_right_simple(minimal_ideal(sg), sg)


def test_left_zero_ideal_is_not_right_simple():
    # a = (0 0 2 2) and b = (0 2 2 0) satisfy a·b = a and b·a = b: a left-zero
    # semigroup {a, b}, so a·I = {a} != I
    aut = Automaton(("0", "1", "2", "3"), ("a", "b"), ((0, 0, 2, 2), (0, 2, 2, 0)))
    sg = semigroup(aut)
    ideal = minimal_ideal(sg)
    assert sg.labels() == ["a", "b"]
    assert ideal.members == (0, 1) and ideal.idempotents == (0, 1)
    assert not ideal.right_simple and not ideal.right_group
    rep = quasi_ideal_report(aut)
    assert not rep.verdict and not rep.ideal_right_group


def test_image_partition(AxB, C, A):
    for aut, want in [
        (AxB, [{"(s1,t1)", "(s2,t1)", "(s3,t1)"}, {"(s1,t2)", "(s2,t2)", "(s3,t2)"}]),
        (C, [{"q1", "q3", "q5"}, {"q2", "q4", "q6"}]),
        (A, [{"s1", "s2", "s3"}]),
    ]:
        sg = semigroup(aut)
        part = idempotent_image_partition(aut, minimal_ideal(sg), sg)
        assert part.ok
        assert [names(aut, b) for b in part.blocks] == want


def test_image_partition_overlap():
    # idempotents e = (0 1 1) and f = (0 2 2) form a right-zero ideal whose
    # images {0,1} and {0,2} overlap without being equal
    aut = Automaton(("0", "1", "2"), ("e", "f"), ((0, 1, 1), (0, 2, 2)))
    sg = semigroup(aut)
    ideal = minimal_ideal(sg)
    assert ideal.right_group
    part = idempotent_image_partition(aut, ideal, sg)
    assert not part.ok
    assert part.violation == {
        "kind": "overlap",
        "idempotents": ["e", "f"],
        "images": [["0", "1"], ["0", "2"]],
        "state": "1",
    }
    rep = quasi_ideal_report(aut)
    assert rep.failure_stage == "strong_connectivity"
    assert [v["kind"] for v in rep.violations] == ["not_strongly_connected", "overlap"]


def test_image_partition_uncovered():
    # a single idempotent of rank 2 on three states: its image misses a state
    aut = Automaton(("0", "1", "2"), ("a",), ((0, 1, 1),))
    sg = semigroup(aut)
    part = idempotent_image_partition(aut, minimal_ideal(sg), sg)
    assert part.violation == {"kind": "uncovered", "state": "2"}


def test_quasi_ideal_reports(AxB, C, B):
    assert quasi_ideal_report(AxB).verdict
    assert quasi_ideal_report(C).verdict
    rep = quasi_ideal_report(B)
    # B's ideal {0, 1} is a right-zero semigroup whose idempotent images {t1}, {t2} partition T
    assert (rep.strongly_connected, rep.ideal_right_group, rep.images_partition) == (True, True, True)
    assert rep.verdict


def test_quasi_ideal_not_strongly_connected():
    aut = make_automaton(["p", "q"], ["a"], [("p", "a", "p"), ("q", "a", "q")])
    rep = quasi_ideal_report(aut)
    assert not rep.verdict
    assert rep.failure_stage == "strong_connectivity"
    # no short-circuit: the other flags are still evaluated
    assert rep.ideal_right_group and rep.images_partition


def _brute_right_simple(sg, members):
    return all(any(sg.multiply(a, x) == b for x in members) for a in members for b in members)


@settings(max_examples=200)
@given(automata(max_states=4, max_letters=2))
def test_ideal_invariants(aut):
    sg = semigroup(aut)
    ideal = minimal_ideal(sg)
    members = set(ideal.members)
    assert all(sg.elements[i].rank == ideal.min_rank for i in members)
    assert ideal.min_rank == min(e.rank for e in sg)
    for a in members:
        for x in range(len(sg)):
            assert sg.multiply(a, x) in members and sg.multiply(x, a) in members
    for e in ideal.idempotents:
        assert sg.multiply(e, e) == e
    assert ideal.right_simple == _brute_right_simple(sg, ideal.members)
    assert ideal.right_group == (ideal.right_simple and bool(ideal.idempotents))
    # finite semigroups always have idempotents
    assert ideal.idempotents

    sc = is_strongly_connected(aut)
    if sc and is_synchronizing(aut, sg):
        # one constant map per state, and nothing else
        assert ideal.min_rank == 1
        assert sorted(sg.elements[i].mapping[0] for i in members) == list(range(aut.n_states))
        for a in members:
            for b in members:
                assert sg.multiply(a, b) == b
    if sc and ideal.right_group:
        covered = set().union(*(sg.elements[e].image for e in ideal.idempotents))
        assert covered == set(range(aut.n_states))
    if sc and sg.contains_identity_as_nonempty_word and all(e.is_bijection for e in sg):
        assert is_permutation(aut)
