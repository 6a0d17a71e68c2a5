import itertools

import pytest
from hypothesis import given, settings, strategies as st

from grsets.errors import DomainMismatch, NotAGroup, NotASubgroup, NotACharacter, UnsupportedKind
from grsets.group import (
    build_group,
    conjugate_character,
    conjugate_subgroup,
    double_cosets,
    make_character,
    make_subgroup,
    multiply_characters,
    named_group,
    normalizer,
    one_dim_characters,
    restrict_character,
    subgroup_closure,
    trivial_character,
)

from conftest import s3_table_from_permutations

GROUPS = [named_group("cyclic", m) for m in range(1, 7)] + [named_group("dihedral", m) for m in (2, 3, 4)]


def _isomorphic(G, H):
    if G.order != H.order:
        return False
    for perm in itertools.permutations(range(H.order)):
        if all(perm[G.mul(a, b)] == H.mul(perm[a], perm[b]) for a in G.elements for b in G.elements):
            return True
    return False


def test_trivial_group():
    G = build_group([[0]])
    assert G.order == 1 and G.exponent == 1 and G.identity == 0


def test_z2():
    G = build_group([[0, 1], [1, 0]])
    assert G.order == 2 and G.exponent == 2
    assert G == named_group("cyclic", 2)


def test_s3_from_permutations():
    table = s3_table_from_permutations()
    G = build_group(table)
    assert G.order == 6 and G.exponent == 6
    orders = sorted(G.element_order(g) for g in G.elements)
    assert orders == [1, 2, 2, 2, 3, 3]


def test_identity_need_not_be_zero():
    # Z2 with element 1 as the identity
    G = build_group([[1, 0], [0, 1]])
    assert G.identity == 1
    assert G.inv(0) == 0


@pytest.mark.parametrize(
    "table",
    [
        [[0, 1], [0, 1]],  # not a Latin square
        [[0, 1, 2], [1, 2, 0]],  # not square
        [[0, 2], [1, 0]],  # entry out of range
        [[1, 0], [0, 0]],
    ],
)
def test_build_group_rejects(table):
    with pytest.raises(NotAGroup):
        build_group(table)


def test_build_group_rejects_non_associative():
    # a Latin square with identity 0 that is not associative
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAGroup):
        build_group(table)


def test_named_groups():
    assert named_group("cyclic", 1).order == 1
    assert _isomorphic(named_group("dihedral", 3), build_group(s3_table_from_permutations()))
    assert named_group("dihedral", 4).order == 8
    assert not named_group("dihedral", 3).is_abelian
    with pytest.raises(UnsupportedKind):
        named_group("quaternion", 2)
    with pytest.raises(ValueError):
        named_group("cyclic", 0)


def test_subgroup_closure(Z2, S3):
    assert subgroup_closure(Z2, []).elements == (0,)
    assert subgroup_closure(Z2, [1]).is_whole
    assert subgroup_closure(S3, [1]).elements == (0, 1, 2)
    assert subgroup_closure(S3, [1, 3]).is_whole


def test_make_subgroup_validates(S3):
    with pytest.raises(NotASubgroup):
        make_subgroup(S3, [0, 1])
    with pytest.raises(NotASubgroup):
        make_subgroup(S3, [1, 2])


def test_conjugate_subgroup(S3):
    H = subgroup_closure(S3, [3])
    assert conjugate_subgroup(0, H) == H
    for g in S3.elements:
        assert conjugate_subgroup(g, S3.whole) == S3.whole
    K = conjugate_subgroup(1, H)
    assert len(K) == 2 and K != H
    assert K.elements == tuple(sorted(S3.mul(S3.mul(1, h), S3.inv(1)) for h in H.elements))


def test_normalizer(S3):
    assert normalizer(S3.whole) == S3.whole
    assert normalizer(S3.trivial) == S3.whole
    H = subgroup_closure(S3, [3])
    assert normalizer(H) == H
    brute = [g for g in S3.elements if conjugate_subgroup(g, H) == H]
    assert list(normalizer(H).elements) == brute


def test_double_cosets_examples(S3):
    assert double_cosets(S3.whole, S3.whole) == [S3.identity]
    assert sorted(double_cosets(S3.trivial, S3.trivial)) == list(S3.elements)
    H = subgroup_closure(S3, [3])
    reps = double_cosets(H, H)
    sizes = sorted(len({S3.mul(S3.mul(h, g), k) for h in H for k in H}) for g in reps)
    assert sizes == [2, 4]


def test_one_dim_characters_examples(Z2, S3):
    assert len(one_dim_characters(Z2.trivial)) == 1
    chars = one_dim_characters(Z2.whole)
    assert sorted(c(1) for c in chars) == [0, 1]
    C3 = subgroup_closure(S3, [1])
    assert sorted(c(1) for c in one_dim_characters(C3)) == [0, 2, 4]
    # S3 has abelianization Z2
    assert len(one_dim_characters(S3.whole)) == 2
    assert one_dim_characters(S3.whole)[0].is_trivial


def test_make_character_validates(Z2, S3):
    # residues are reduced mod N
    assert make_character(Z2.whole, {1: 3})(1) == 1
    with pytest.raises(NotACharacter):
        make_character(named_group("cyclic", 4).whole, {1: 1})  # omitted 2 and 3 default to 0
    C3 = subgroup_closure(S3, [1])
    with pytest.raises(NotACharacter):
        make_character(C3, {1: 1, 2: 2})
    with pytest.raises(NotACharacter):
        make_character(Z2.trivial, {1: 1})


def test_conjugate_character(S3):
    H = subgroup_closure(S3, [3])
    sign = make_character(H, {3: 3})
    assert conjugate_character(0, sign) == sign
    C3 = subgroup_closure(S3, [1])
    assert conjugate_character(3, trivial_character(C3)).is_trivial
    moved = conjugate_character(1, sign)
    assert moved.domain == conjugate_subgroup(1, H)
    for g in moved.domain:
        assert moved(g) == sign(S3.conj(S3.inv(1), g))
    assert sorted(moved.values) == [0, 3]


def test_restrict_and_multiply():
    Z4 = named_group("cyclic", 4)
    half = subgroup_closure(Z4, [2])
    assert restrict_character(trivial_character(Z4.whole), half).is_trivial
    chi = make_character(Z4.whole, {1: 1, 2: 2, 3: 3})
    res = restrict_character(chi, half)
    assert res(2) == 2  # exp(2 pi i * 2/4) = -1: period halves
    Z2 = named_group("cyclic", 2)
    sign = make_character(Z2.whole, {1: 1})
    assert multiply_characters(sign, sign).is_trivial
    with pytest.raises(DomainMismatch):
        multiply_characters(sign, trivial_character(Z2.trivial))
    with pytest.raises(DomainMismatch):
        restrict_character(res, Z4.whole)


# --- properties -------------------------------------------------------------

groups = st.sampled_from(GROUPS)


@settings(max_examples=30, deadline=None)
@given(groups)
def test_group_axioms(G):
    for a in G.elements:
        assert G.mul(a, G.inv(a)) == G.identity
        assert sorted(G.table[a]) == list(G.elements)
        assert sorted(G.table[x][a] for x in G.elements) == list(G.elements)
        assert G.power(a, G.exponent) == G.identity
        for b in G.elements:
            for c in G.elements:
                assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))


@settings(max_examples=60, deadline=None)
@given(groups, st.data())
def test_double_coset_partition(G, data):
    gens = data.draw(st.lists(st.sampled_from(list(G.elements)), max_size=2))
    gens2 = data.draw(st.lists(st.sampled_from(list(G.elements)), max_size=2))
    H, K = subgroup_closure(G, gens), subgroup_closure(G, gens2)
    reps = double_cosets(H, K)
    blocks = [frozenset(G.mul(G.mul(h, g), k) for h in H for k in K) for g in reps]
    assert sum(len(b) for b in blocks) == G.order
    assert frozenset().union(*blocks) == frozenset(G.elements)


@settings(max_examples=60, deadline=None)
@given(groups, st.data())
def test_characters_form_a_group(G, data):
    gens = data.draw(st.lists(st.sampled_from(list(G.elements)), max_size=2))
    H = subgroup_closure(G, gens)
    chars = one_dim_characters(H)
    assert len(set(chars)) == len(chars)
    N = G.exponent
    for chi in chars:
        assert chi(G.identity) == 0
        for g in H:
            for h in H:
                assert chi(G.mul(g, h)) == (chi(g) + chi(h)) % N
    assert trivial_character(H) in chars
    for a in chars:
        for b in chars:
            assert multiply_characters(a, b) in chars


@settings(max_examples=60, deadline=None)
@given(groups, st.data())
def test_conjugate_character_composes(G, data):
    gens = data.draw(st.lists(st.sampled_from(list(G.elements)), max_size=2))
    H = subgroup_closure(G, gens)
    chi = data.draw(st.sampled_from(one_dim_characters(H)))
    a = data.draw(st.sampled_from(list(G.elements)))
    b = data.draw(st.sampled_from(list(G.elements)))
    assert conjugate_character(a, conjugate_character(b, chi)) == conjugate_character(G.mul(a, b), chi)
