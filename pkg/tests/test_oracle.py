import pytest

from grsets.errors import NonAbelianAction, NotAGroup
from grsets.group import make_character, named_group, trivial_character
from grsets.homomorphisms import MultiIndexSeries
from grsets.oracle import (
    MonomialAction,
    antipodal_action,
    brute_force_isomorphic,
    equivariant_jet_series,
    explicit_gset,
    jet_dimension_series,
    semigroup_series,
    swap_action,
)


def test_jet_dimension():
    J = jet_dimension_series(4)
    assert [J[k] for k in range(5)] == [1, 2, 3, 4, 5]


def test_equivariant_jets(Z2):
    triv, sign = trivial_character(Z2.whole), make_character(Z2.whole, {1: 1})
    A = equivariant_jet_series(antipodal_action(Z2), 3)
    assert A[2] == {triv: 3}
    assert A[3] == {sign: 4}
    S = equivariant_jet_series(swap_action(Z2), 3)
    assert S[1] == {triv: 1, sign: 1}
    assert S[2] == {triv: 2, sign: 1}


def test_equivariant_jets_sum_to_dimension(Z2):
    for action in (antipodal_action(Z2), swap_action(Z2)):
        E = equivariant_jet_series(action, 7)
        total = MultiIndexSeries(1, (7,), {i: sum(v.values()) for i, v in E.coefficients.items()})
        assert total == jet_dimension_series(7)


def test_z4_rotation():
    # Z4 acting by (x, y) -> (-y, x); degree-1 forms split into the two faithful characters
    Z4 = named_group("cyclic", 4)
    rot = ((0, -1), (1, 0))
    mats = [((1, 0), (0, 1))]
    for _ in range(3):
        a = mats[-1]
        mats.append(tuple(tuple(sum(rot[i][k] * a[k][j] for k in range(2)) for j in range(2)) for i in range(2)))
    E = equivariant_jet_series(MonomialAction(Z4, tuple(mats)), 4)
    assert sorted(chi(1) for chi in E[1]) == [1, 3]
    assert all(sum(E[k].values()) == k + 1 for k in range(5))


def test_bad_actions(Z2, S3):
    with pytest.raises(NotAGroup):
        MonomialAction(Z2, (((1, 0), (0, 1)), ((2, 0), (0, 1))))
    with pytest.raises(NotAGroup):
        MonomialAction(Z2, (((1, 0), (0, 1)), ((0, 1), (-1, 0))))
    ident = ((1, 0), (0, 1))
    with pytest.raises(NonAbelianAction):
        equivariant_jet_series(MonomialAction(S3, (ident,) * 6), 2)


def test_semigroups():
    assert semigroup_series([1], 3) == MultiIndexSeries.from_list([1, 1, 1, 1])
    assert semigroup_series([2, 3], 6) == MultiIndexSeries.from_list([1, 0, 1, 1, 1, 1, 1])
    assert semigroup_series([2], 5) == MultiIndexSeries.from_list([1, 0, 1, 0, 1, 0])
    with pytest.raises(ValueError):
        semigroup_series([], 3)


def test_brute_force_isomorphism(Z2, S3):
    a = explicit_gset(Z2, [0], {}, {0: (0,), 1: (1,)})
    b = explicit_gset(Z2, [0], {}, {1: (0,), 0: (1,)})
    assert brute_force_isomorphic(a, b)
    c = explicit_gset(Z2, [0, 1], {1: 1}, {0: (0,)})
    d = explicit_gset(Z2, [0, 1], {}, {0: (0,)})
    assert not brute_force_isomorphic(c, d)
    # points of S3/H carry conjugate characters, matched pointwise
    e = explicit_gset(S3, [0, 3], {3: 3}, {0: (0,), 1: (0,), 2: (0,)})
    f = explicit_gset(S3, [0, 4], {4: 3}, {0: (0,), 1: (0,), 2: (0,)})
    g = explicit_gset(S3, [0, 4], {}, {0: (0,), 1: (0,), 2: (0,)})
    assert brute_force_isomorphic(e, f)
    assert not brute_force_isomorphic(e, g)
