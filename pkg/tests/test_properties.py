import random

from hypothesis import given, settings
from hypothesis import strategies as st

from gf2topo.at_model import (betti_by_rank, betti_numbers, build_contraction,
                              verify_contraction)
from gf2topo.coops import (CohomologyClass, cohomology_ring, cup, cup_n, f_star, g_star,
                           sq_cochain)
from gf2topo.fixtures import fixture
from gf2topo.simplicial import (ZERO, boundary, boundary_chain, close_complex, coboundary,
                                evaluate, random_complex)

seeds = st.integers(0, 2**32 - 1)
simplices = st.lists(st.integers(0, 30), min_size=1, max_size=8, unique=True).map(
    lambda xs: tuple(sorted(xs)))


def complex_from(seed, shuffle=True):
    return random_complex(random.Random(seed), shuffle=shuffle)


def subset(rng, xs):
    return frozenset(x for x in xs if rng.random() < 0.5)


@given(simplices)
def test_boundary_squared_is_zero(s):
    assert boundary_chain(boundary(s)) == ZERO


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_coboundary_squared_and_duality(seed):
    K = complex_from(seed)
    rng = random.Random(seed)
    for q in range(K.dimension):
        z = subset(rng, K.of_dim(q))
        assert coboundary(coboundary(z, K), K) == ZERO
        a = subset(rng, K.of_dim(q + 1))
        assert evaluate(coboundary(z, K), a) == evaluate(z, boundary_chain(a))


@settings(max_examples=120, deadline=None)
@given(seeds, st.booleans(), st.sampled_from(["largest", "smallest"]))
def test_contraction_identities_and_rank_oracle(seed, shuffle, tau):
    K = complex_from(seed, shuffle)
    m = build_contraction(K, tau)
    assert verify_contraction(m) == []
    assert betti_numbers(m) == betti_by_rank(K)


@settings(max_examples=40, deadline=None)
@given(seeds, st.data())
def test_prefix_models_are_valid(seed, data):
    K = complex_from(seed)
    n = data.draw(st.integers(0, len(K)))
    P = K.prefix(n)
    m = build_contraction(P)
    assert verify_contraction(m) == []
    assert betti_numbers(m) == betti_by_rank(P)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_betti_independent_of_tau(seed):
    K = complex_from(seed)
    assert betti_numbers(build_contraction(K, "largest")) == \
        betti_numbers(build_contraction(K, "smallest"))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_cochain_duals(seed):
    K = complex_from(seed)
    m = build_contraction(K)
    rng = random.Random(seed)
    for q in range(K.dimension + 1):
        n = len(m.generators_of_dim(q))
        a = CohomologyClass(q, tuple(rng.randint(0, 1) for _ in range(n)))
        assert f_star(m, g_star(m, a), q) == a
        if q < K.dimension:
            assert not f_star(m, coboundary(subset(rng, K.of_dim(q)), K), q + 1)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_cup_n_zero_and_relation(seed):
    rng = random.Random(seed)
    K = fixture("simplex6")
    p, q = rng.randint(0, 3), rng.randint(0, 3)
    c, c2 = subset(rng, K.of_dim(p)), subset(rng, K.of_dim(q))
    assert cup_n(c, c2, 0, K) == cup(c, c2, K)
    n = rng.randint(1, min(p, q) + 1)
    lhs = coboundary(cup_n(c, c2, n, K), K)
    rhs = (cup_n(c, c2, n - 1, K) ^ cup_n(c2, c, n - 1, K)
           ^ cup_n(coboundary(c, K), c2, n, K) ^ cup_n(c, coboundary(c2, K), n, K))
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_ring_commutative_and_sq0_identity(seed):
    K = complex_from(seed)
    m = build_contraction(K)
    table = cohomology_ring(m)
    for (a, b, g), bit in table.items():
        assert table[(b, a, g)] == bit
    for q in range(K.dimension + 1):
        for i, gamma in enumerate(m.generators_of_dim(q)):
            coords = tuple(int(j == i) for j in range(len(m.generators_of_dim(q))))
            a = CohomologyClass(q, coords)
            assert f_star(m, sq_cochain(g_star(m, a), 0, K), q) == a


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_sq_well_defined(seed):
    K = complex_from(seed)
    m = build_contraction(K)
    rng = random.Random(seed)
    for q in range(1, K.dimension + 1):
        n = len(m.generators_of_dim(q))
        if not n:
            continue
        c = g_star(m, CohomologyClass(q, tuple(rng.randint(0, 1) for _ in range(n))))
        c2 = c ^ coboundary(subset(rng, K.of_dim(q - 1)), K)
        for i in range(q + 1):
            if q + i <= K.dimension:
                assert f_star(m, sq_cochain(c, i, K), q + i) == \
                    f_star(m, sq_cochain(c2, i, K), q + i)


def test_empty_complex():
    m = build_contraction(close_complex([]))
    assert verify_contraction(m) == [] and betti_numbers(m) == ()
