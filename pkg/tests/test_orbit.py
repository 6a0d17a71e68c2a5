import math
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from grsets.acceptance import RawOrbit, random_raw_orbit, relabel, small_groups
from grsets.errors import (
    BadTransversal,
    CharacterDomainMismatch,
    GroupMismatch,
    NegativeWeight,
    NonFiniteWeight,
)
from grsets.group import make_character, named_group, subgroup_closure, trivial_character
from grsets.oracle import brute_force_isomorphic
from grsets.orbit import (
    canonicalize,
    exceeds_bound,
    fixed_point,
    is_positively_weighted,
    make_orbit,
    orbit_product,
    unit_orbit,
)


def gens(G):
    triv = trivial_character(G.trivial)
    t1 = make_orbit(G, G.trivial, triv, {0: (0,), 1: (1,)})
    t2 = make_orbit(G, G.trivial, triv, {0: (0,), 1: (0,)})
    t3 = fixed_point(G, (1,))
    t4 = fixed_point(G, (0,), make_character(G.whole, {1: 1}))
    return t1, t2, t3, t4


def test_generators(Z2):
    t1, t2, t3, t4 = gens(Z2)
    assert sorted(t1.weights) == [(0,), (1,)]
    assert t1.size == 2 and t2.size == 2
    assert t3.is_fixed_point and t3.weights == ((1,),) and t3.character.is_trivial
    assert t4.weights == ((0,),) and t4.character(1) == 1


def test_canonical_swap(Z2):
    triv = trivial_character(Z2.trivial)
    a = make_orbit(Z2, Z2.trivial, triv, {0: (1,), 1: (0,)})
    b = make_orbit(Z2, Z2.trivial, triv, {0: (0,), 1: (1,)})
    assert a == b and hash(a) == hash(b)
    assert a.transversal[0] == Z2.identity


def test_fixed_point_unchanged(S3):
    O = fixed_point(S3, (2, 1))
    assert canonicalize(O) == O
    assert O.weights == ((2, 1),)


def test_s3_conjugate_stabilizers(S3):
    H = subgroup_closure(S3, [3])
    K = subgroup_closure(S3, [4])
    assert H != K
    # the cosets of H are {0,3}, {1,5}, {2,4}; of K: {0,4}, {1,3}, {2,5}
    a = make_orbit(S3, H, trivial_character(H), {0: (0,), 1: (1,), 2: (2,)})
    # conjugation by c with c^-1 H c = K moves the point xH to x c K
    c = next(c for c in S3.elements if sorted(S3.conj(S3.inv(c), h) for h in H) == list(K.elements))
    wK = {S3.mul(x, c): w for x, w in {0: (0,), 1: (1,), 2: (2,)}.items()}
    b = make_orbit(S3, K, trivial_character(K), wK)
    assert a == b
    A = RawOrbit(S3, H, {}, {0: (0,), 1: (1,), 2: (2,)}).explicit()
    B = RawOrbit(S3, K, {}, wK).explicit()
    assert brute_force_isomorphic(A, B)


def test_make_orbit_errors(Z2, S3):
    triv = trivial_character(Z2.trivial)
    with pytest.raises(BadTransversal):
        make_orbit(Z2, Z2.trivial, triv, {0: (0,)})
    with pytest.raises(BadTransversal):
        make_orbit(Z2, Z2.whole, trivial_character(Z2.whole), {0: (0,), 1: (1,)})
    with pytest.raises(BadTransversal):
        make_orbit(Z2, Z2.trivial, triv, {0: (0,), 1: (1, 2)})
    with pytest.raises(NegativeWeight):
        make_orbit(Z2, Z2.trivial, triv, {0: (0,), 1: (-1,)})
    with pytest.raises(NonFiniteWeight):
        make_orbit(Z2, Z2.trivial, triv, {0: (0,), 1: (math.inf,)})
    with pytest.raises(NonFiniteWeight):
        make_orbit(Z2, Z2.trivial, triv, {0: (0,), 1: (0.5,)})
    with pytest.raises(CharacterDomainMismatch):
        make_orbit(Z2, Z2.whole, triv, {0: (0,)})
    with pytest.raises(GroupMismatch):
        make_orbit(S3, Z2.whole, trivial_character(Z2.whole), {0: (0,)})


def test_products(Z2):
    t1, t2, t3, t4 = gens(Z2)
    assert orbit_product(t4, t4) == [(unit_orbit(Z2, 1), 1)]
    assert [O for O, _ in orbit_product(t2, t2)] == [t2, t2]
    assert [O for O, _ in orbit_product(t1, t2)] == [t1, t1]
    with pytest.raises(GroupMismatch):
        orbit_product(t1, fixed_point(named_group("cyclic", 3), (0,)))
    with pytest.raises(GroupMismatch):
        orbit_product(t1, fixed_point(Z2, (0, 0)))


def test_positively_weighted(Z2):
    t1, t2, t3, t4 = gens(Z2)
    assert is_positively_weighted(t3)
    assert not is_positively_weighted(t4)
    assert not is_positively_weighted(t1)


def test_exceeds_bound(Z2):
    t1, t2, t3, t4 = gens(Z2)
    assert exceeds_bound(t3, (0,))
    assert not exceeds_bound(t1, (0,))
    triv = trivial_character(Z2.trivial)
    O = make_orbit(Z2, Z2.trivial, triv, {0: (1, 0), 1: (100, 0)})
    assert not exceeds_bound(O, (5, 5))
    O = make_orbit(Z2, Z2.trivial, triv, {0: (6, 0), 1: (0, 100)})
    assert exceeds_bound(O, (5, 5))


# --- properties -------------------------------------------------------------

GROUPS = small_groups()


@st.composite
def raw_orbits(draw, r=None, max_weight=2):
    G = draw(st.sampled_from(GROUPS))
    r = r or draw(st.integers(1, 2))
    return random_raw_orbit(draw(st.randoms(use_true_random=False)), G, r, max_weight)


@settings(max_examples=150, deadline=None)
@given(raw_orbits())
def test_canonicalize_idempotent(raw):
    O = raw.build()
    assert canonicalize(O) == O
    assert canonicalize(canonicalize(O)).weights == O.weights
    assert O.transversal[0] == O.group.identity
    assert len(O.transversal) * len(O.stabilizer) == O.group.order


@settings(max_examples=150, deadline=None)
@given(raw_orbits(), st.randoms(use_true_random=False))
def test_related_encodings_agree(raw, rng):
    other = relabel(rng, raw)
    assert brute_force_isomorphic(raw.explicit(), other.explicit())
    assert raw.build() == other.build()


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(GROUPS), st.integers(1, 2), st.randoms(use_true_random=False))
def test_canonical_forms_decide_isomorphism(G, r, rng):
    a = random_raw_orbit(rng, G, r, 1)
    b = random_raw_orbit(rng, G, r, 1)
    assert (a.build() == b.build()) == brute_force_isomorphic(a.explicit(), b.explicit())


@st.composite
def orbit_pairs(draw, count=2):
    G = draw(st.sampled_from(GROUPS))
    r = draw(st.integers(1, 2))
    rng = draw(st.randoms(use_true_random=False))
    return [random_raw_orbit(rng, G, r).build() for _ in range(count)]


@settings(max_examples=100, deadline=None)
@given(orbit_pairs())
def test_product_point_count_and_weights(pair):
    A, B = pair
    out = orbit_product(A, B)
    assert sum(O.size for O, _ in out) == A.size * B.size
    sumset = Counter(tuple(x + y for x, y in zip(a, b)) for a in A.weights for b in B.weights)
    assert Counter(w for O, _ in out for w in O.weights) == sumset


@settings(max_examples=100, deadline=None)
@given(orbit_pairs(3))
def test_product_commutative_associative(triple):
    A, B, C = triple
    assert Counter(O for O, _ in orbit_product(A, B)) == Counter(O for O, _ in orbit_product(B, A))

    def times(left, O):
        return Counter(P for L in left for P, _ in orbit_product(L, O))

    ab_c = times([O for O, _ in orbit_product(A, B)], C)
    a_bc = times([O for O, _ in orbit_product(B, C)], A)
    assert ab_c == a_bc


@settings(max_examples=100, deadline=None)
@given(orbit_pairs(), st.lists(st.integers(0, 3), min_size=2, max_size=2))
def test_truncation_is_an_ideal(pair, bound):
    A, B = pair
    bound = tuple(bound[: A.r])
    if exceeds_bound(A, bound):
        assert all(exceeds_bound(O, bound) for O, _ in orbit_product(A, B))
