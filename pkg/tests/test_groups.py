"""Core group machinery against naive oracles."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from cremonalab.corpus import small_group_corpus
from cremonalab.groups import (
    CapExceeded,
    IncompatiblePayloads,
    ModMatrix,
    Permutation,
    close_generators,
    commutator_subgroup,
    conjugacy_classes,
    minimal_generators,
    sign_characters,
)

S4_GENS = [
    Permutation.from_cycles(4, [[1, 2]]),
    Permutation.from_cycles(4, [[1, 2, 3, 4]]),
]


@pytest.fixture(scope="module")
def s4():
    return close_generators(S4_GENS)


@pytest.fixture(scope="module")
def corpus():
    return small_group_corpus()


perm_images = st.permutations(range(5)).map(tuple)


def test_from_cycles_examples():
    p = Permutation.from_cycles(4, [[1, 2], [3, 4]])
    assert p.images == (1, 0, 3, 2)
    q = Permutation.from_cycles(3, [[1, 2, 3]])
    # 1 -> 2 -> 3 -> 1 in 1-based labels
    assert q.images == (1, 2, 0)
    with pytest.raises(ValueError):
        Permutation.from_cycles(3, [[1, 4]])
    with pytest.raises(ValueError):
        Permutation.from_cycles(3, [[1, 1]])


@given(perm_images, perm_images)
@settings(max_examples=25, deadline=None)
def test_permutation_compose_matches_oracle(a, b):
    pa, pb = Permutation(a), Permutation(b)
    assert pa.compose(pb).images == oracles.compose_images(a, b)


@given(perm_images, perm_images, perm_images)
@settings(max_examples=25, deadline=None)
def test_permutation_compose_associative(a, b, c):
    pa, pb, pc = Permutation(a), Permutation(b), Permutation(c)
    assert pa.compose(pb).compose(pc) == pa.compose(pb.compose(pc))


@given(st.integers(min_value=2, max_value=7), st.data())
@settings(max_examples=25, deadline=None)
def test_modmatrix_compose_matches_oracle(n, data):
    entries = st.integers(min_value=0, max_value=n - 1)
    rows = lambda: tuple(tuple(data.draw(entries) for _ in range(3)) for _ in range(3))
    a, b = ModMatrix(n, rows()), ModMatrix(n, rows())
    assert a.compose(b).entries == oracles.matmul_mod(a.entries, b.entries, n)


def test_incompatible_payloads():
    p3 = Permutation.from_cycles(3, [[1, 2]])
    p4 = Permutation.from_cycles(4, [[1, 2]])
    with pytest.raises(IncompatiblePayloads):
        p3.compose(p4)
    with pytest.raises(IncompatiblePayloads):
        close_generators([p3, ModMatrix.from_rows(5, [[0, 1], [1, 0]])])


def test_close_generators_s4(s4):
    assert s4.order == 24
    assert s4.identity == 0
    # full table check against raw payload composition
    for i in range(24):
        for j in range(24):
            composed = s4.elements[i].compose(s4.elements[j])
            assert s4.elements[int(s4.mul[i, j])] == composed
    # inverses from the table
    for i in range(24):
        assert int(s4.mul[i, int(s4.inverse[i])]) == 0


def test_element_order_matches_oracle(s4):
    for i in range(s4.order):
        assert s4.element_order(i) == oracles.perm_order(s4.elements[i].images)


def test_closure_is_generator_order_independent():
    g1 = close_generators(S4_GENS)
    g2 = close_generators(list(reversed(S4_GENS)))
    assert [e.key() for e in g1.elements] == [e.key() for e in g2.elements]


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        close_generators(S4_GENS, cap=10)


def test_generators_index_input_payloads(s4):
    for gi, payload in zip(s4.generators, S4_GENS):
        assert s4.elements[gi] == payload


@given(st.sets(st.integers(min_value=0, max_value=23), max_size=4))
@settings(max_examples=25, deadline=None)
def test_subgroup_closure_matches_oracle(seeds):
    group = close_generators(S4_GENS)
    table = oracles.table_of(group)
    got = set(group.subgroup_closure(seeds))
    assert got == set(oracles.close_under_product(table, seeds))


def test_conjugacy_classes_s4(s4):
    classes = conjugacy_classes(s4)
    assert classes[0] == (0,)
    sizes = sorted(len(c) for c in classes)
    assert sizes == [1, 3, 6, 6, 8]
    seen = sorted(i for c in classes for i in c)
    assert seen == list(range(24))
    for cls in classes:
        members = set(cls)
        for g in range(s4.order):
            assert {s4.conjugate(g, x) for x in cls} == members


def test_normal_closure_is_minimal_normal(s4):
    table = oracles.table_of(s4)
    transposition = s4.find(Permutation.from_cycles(4, [[1, 2]]))
    closure = set(s4.normal_closure([transposition]))
    assert oracles.is_normal_subset(table, closure)
    # the only normal subgroup containing a transposition is the whole group
    assert len(closure) == 24
    three_cycle = s4.find(Permutation.from_cycles(4, [[1, 2, 3]]))
    closure = set(s4.normal_closure([three_cycle]))
    assert oracles.is_normal_subset(table, closure)
    assert len(closure) == 12


def test_commutator_subgroup_s4_is_order_12(s4):
    derived = commutator_subgroup(s4)
    assert derived.order == 12
    assert all(s4.elements[i].images != (1, 0, 2, 3) for i in derived.members)
    klein = small_group_corpus()["c4xc2"]
    assert commutator_subgroup(klein).order == 1


def test_sign_characters_multiplicative(corpus):
    for name, group in corpus.items():
        chars = sign_characters(group)
        assert chars[0] == tuple([1] * group.order), name
        for chi in chars:
            assert set(chi) <= {1, -1}
            for a in range(group.order):
                for b in range(group.order):
                    assert chi[int(group.mul[a, b])] == chi[a] * chi[b], name
        assert len(set(chars)) == len(chars)


def test_sign_character_counts(s4, corpus):
    # index-2 kernels: S4 has one (A4), C4xC2 has three
    assert len(sign_characters(s4)) == 2
    assert len(sign_characters(corpus["c4xc2"])) == 4
    assert len(sign_characters(corpus["a4"])) == 1


def test_minimal_generators_generate(s4):
    table = oracles.table_of(s4)
    for members in (tuple(range(24)), tuple(sorted(set(s4.subgroup_closure([5]))))):
        gens = minimal_generators(s4, members)
        assert oracles.close_under_product(table, gens) == frozenset(members)


def test_subgroup_view_consistency(s4):
    table = oracles.table_of(s4)
    derived = commutator_subgroup(s4)
    assert derived.is_normal() == oracles.is_normal_subset(table, derived.members)
    assert derived.is_abelian() == oracles.is_abelian_subset(table, derived.members)
    assert derived.index == 2
    as_group = derived.to_group()
    assert as_group.order == derived.order


def test_serialize_is_stable(s4):
    assert s4.serialize() == close_generators(S4_GENS).serialize()
