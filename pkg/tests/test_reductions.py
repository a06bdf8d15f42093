import random

import pytest

from gf2topo.at_model import as_contraction, betti_numbers, build_contraction
from gf2topo.contraction import Contraction, identity_contraction, verify
from gf2topo.errors import ContractionError
from gf2topo.fixtures import fixture
from gf2topo.reductions import (collapse_thinning, compose, cone_contraction, edge_contract,
                                edge_contractible, reduce_then_model)
from gf2topo.simplicial import ZERO, close_complex, facets, random_complex


def _strip(b):
    b = list(b)
    while b and b[-1] == 0:
        b.pop()
    return b


def test_collapse_full_triangle_to_vertex():
    M, c = collapse_thinning(fixture("triangle"))
    assert len(M) == 1 and M.dimension == 0
    assert verify(c) == []
    assert c.notes == ("3 elementary collapses",)


def test_collapse_leaves_thinned_complex_alone():
    K = fixture("hollow_triangle")
    M, c = collapse_thinning(K)
    assert M == K
    ident = identity_contraction(K)
    assert dict(c.f) == dict(ident.f) and dict(c.g) == dict(ident.g) and not c.phi


def test_collapse_single_vertex():
    K = fixture("point")
    M, c = collapse_thinning(K)
    assert M == K and verify(c) == []


def test_collapse_result_is_thinned():
    M, _ = collapse_thinning(fixture("simplex5"))
    assert len(M) == 1
    for name in ("adem_example", "torus", "wedge"):
        M, _ = collapse_thinning(fixture(name))
        for s in M.maximal_simplices():
            for face in facets(s) if len(s) > 1 else ():
                assert len(M.cofacets(face)) >= 2
    assert collapse_thinning(fixture("adem_example"))[0] == fixture("adem_example")


def test_collapse_preserves_betti_on_random_complexes():
    rng = random.Random(5)
    for _ in range(60):
        K = random_complex(rng, shuffle=rng.random() < 0.5)
        M, c = collapse_thinning(K)
        assert verify(c) == []
        assert _strip(betti_numbers(build_contraction(K))) == _strip(
            betti_numbers(build_contraction(M)))
        assert (len(K) - len(M)) % 2 == 0


def test_edge_contractible_examples():
    path = close_complex([[1, 2], [2, 3]])
    assert edge_contractible(path, (1, 2))
    assert not edge_contractible(fixture("hollow_triangle"), (1, 2))
    with pytest.raises(ValueError):
        edge_contractible(path, (4, 5))


def test_edge_contract_path():
    path = close_complex([[1, 2], [2, 3]])
    L, c = edge_contract(path, (1, 2), 9)
    assert set(L) == {(3,), (9,), (3, 9)}
    assert verify(c) == []


def test_edge_contract_single_edge():
    L, c = edge_contract(fixture("edge"), (1, 2), 7)
    assert list(L) == [(7,)]
    assert c.g[(7,)] == {(1,)}
    assert c.phi[(2,)] == {(1, 2)} and (1,) not in c.phi


def test_edge_contract_rejects_failed_condition_and_bad_label():
    with pytest.raises(ValueError):
        edge_contract(fixture("hollow_triangle"), (1, 2), 9)
    with pytest.raises(ValueError):
        edge_contract(close_complex([[1, 2], [2, 3]]), (1, 2), 3)


def test_edge_contract_random_complexes_verify():
    rng = random.Random(21)
    done = 0
    for _ in range(200):
        K = random_complex(rng)
        for e in K.of_dim(1):
            if edge_contractible(K, e):
                L, c = edge_contract(K, e, 100)
                assert verify(c) == []
                assert _strip(betti_numbers(build_contraction(K))) == _strip(
                    betti_numbers(build_contraction(L)))
                done += 1
    assert done > 100


def test_cone_contraction_examples():
    c = cone_contraction((1, 2))
    assert c.phi[(2,)] == {(1, 2)} and (1,) not in c.phi
    assert c.f[(2,)] == {(1,)}
    assert verify(c) == []
    point = cone_contraction((1,))
    assert not point.phi and point.f[(1,)] == {(1,)}
    tri = cone_contraction((1, 2, 3))
    assert tri.phi[(2, 3)] == {(1, 2, 3)} and (1, 2, 3) not in tri.phi


def test_compose_with_identity():
    _, c = collapse_thinning(fixture("triangle"))
    same = compose(c, identity_contraction(c.target))
    assert dict(same.f) == dict(c.f) and dict(same.g) == dict(c.g)
    assert dict(same.phi) == dict(c.phi)


def test_two_manual_collapses_compose():
    T = fixture("triangle")
    step1 = Contraction(
        T, close_complex([[1, 2], [1, 3]]),
        {s: frozenset({s}) for s in T if s not in ((2, 3), (1, 2, 3))} | {
            (2, 3): frozenset({(1, 2), (1, 3)})},
        {s: frozenset({s}) for s in close_complex([[1, 2], [1, 3]])},
        {(2, 3): frozenset({(1, 2, 3)})})
    M1 = step1.target
    M2 = close_complex([[1, 3]])
    step2 = Contraction(
        M1, M2,
        {(1,): frozenset({(1,)}), (3,): frozenset({(3,)}), (1, 3): frozenset({(1, 3)}),
         (2,): frozenset({(1,)})},
        {s: frozenset({s}) for s in M2},
        {(2,): frozenset({(1, 2)})})
    total = compose(step1, step2)
    assert verify(total) == []
    assert set(total.target) == {(1,), (3,), (1, 3)}


def test_compose_rejects_mismatch():
    _, c = collapse_thinning(fixture("triangle"))
    with pytest.raises(ValueError):
        compose(c, identity_contraction(fixture("edge")))


def test_compose_reports_broken_contraction():
    K = fixture("edge")
    broken = Contraction(K, K, {s: frozenset({s}) for s in K}, {s: frozenset({s}) for s in K},
                         {(1,): frozenset({(1, 2)})})
    with pytest.raises(ContractionError) as exc:
        compose(identity_contraction(K), broken)
    assert exc.value.violations


@pytest.mark.parametrize("name", ["adem_example", "torus", "simplex5", "wedge"])
def test_reduce_then_model(name):
    K = fixture(name)
    M, model, total = reduce_then_model(K)
    assert verify(total) == []
    assert _strip(betti_numbers(model)) == _strip(betti_numbers(build_contraction(K)))
    assert verify(as_contraction(model)) == []
    assert total.f.get(K.of_dim(0)[0], ZERO)
