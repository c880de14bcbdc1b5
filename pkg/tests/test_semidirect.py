"""The order-12n^2 family: determinant criteria, translations, commutators."""

import random

import pytest

from cremonalab.semidirect import (
    HypothesisViolated,
    SemidirectPair,
    build_action_data,
    build_group,
    dihedral_product,
    translation_subgroup,
    verify_lemma52,
)

UNIT_NS = (5, 7, 11, 13)
NON_UNIT_NS = (2, 3, 4, 6, 9)


def test_dihedral_product_relations():
    # r has index 1, s has index 6
    r, s = 1, 6
    x = 0
    for _ in range(6):
        x = dihedral_product(x, r)
    assert x == 0
    assert dihedral_product(s, s) == 0
    srs = dihedral_product(dihedral_product(s, r), s)
    assert srs == 5  # r^-1


@pytest.mark.parametrize("n", UNIT_NS)
def test_determinants_are_units_when_gcd_is_one(n):
    data = build_action_data(n)
    assert data.det_u_minus_identity == 3 % n
    assert data.det_z_minus_identity == 4 % n
    assert data.determinants_are_units()


@pytest.mark.parametrize("n", NON_UNIT_NS)
def test_determinants_fail_when_gcd_exceeds_one(n):
    data = build_action_data(n)
    assert data.det_u_minus_identity == 3 % n
    assert data.det_z_minus_identity == 4 % n
    assert not data.determinants_are_units()


@pytest.mark.parametrize("n", (2, 3, 5, 7))
def test_group_order_and_translations(n):
    group = build_group(n)
    assert group.order == 12 * n * n
    trans = translation_subgroup(group)
    assert trans.order == n * n
    assert trans.index == 12
    assert trans.is_abelian()
    assert trans.is_normal()
    assert all(group.elements[i].twist == 0 for i in trans.members)


def test_commutator_with_translation_is_twisted_difference():
    """[x, a] for a translation a is the translation by (rho(d) - I) w."""
    n = 7
    group = build_group(n)
    data = build_action_data(n)
    rng = random.Random(20240811)
    for _ in range(1000):
        d = rng.randrange(12)
        v = (rng.randrange(n), rng.randrange(n))
        w = (rng.randrange(n), rng.randrange(n))
        x = group.find(SemidirectPair(n, v, d, data.rho))
        a = group.find(SemidirectPair(n, w, 0, data.rho))
        commutator = group.elements[group.commutator(x, a)]
        m = data.rho[d]
        expected = (
            (m[0][0] * w[0] + m[0][1] * w[1] - w[0]) % n,
            (m[1][0] * w[0] + m[1][1] * w[1] - w[1]) % n,
        )
        assert commutator.twist == 0
        assert commutator.vector == expected


def test_verify_lemma52_passes_for_n5():
    row = verify_lemma52(5)
    assert row.status == "pass"
    assert row.claim_id == "lemma52.n5"
    assert row.anchor == "Lemma 5.2 (n = 5)"
    assert row.computed["jordan_index"] == 12
    assert row.computed["witness_order"] == 25
    assert row.computed["witness_is_translation_subgroup"] is True


def test_bad_n_raises_unless_allowed():
    with pytest.raises(HypothesisViolated):
        verify_lemma52(4)
    with pytest.raises(HypothesisViolated):
        verify_lemma52(1, allow_bad_n=False)
    row = verify_lemma52(4, allow_bad_n=True)
    assert row.status == "informational"
    assert row.expected is None
    assert row.computed["determinants_are_units"] is False


def test_build_action_data_rejects_tiny_modulus():
    with pytest.raises(ValueError):
        build_action_data(1)
