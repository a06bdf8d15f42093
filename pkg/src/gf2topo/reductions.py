"""Explicit contractions between complexes: collapses, edge contractions, cones.

Every public builder runs the generic identity check before returning and
raises ContractionError with the violations if it fails.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .contraction import (Contraction, compose_unchecked, identity_contraction,
                          verify)
from .errors import ContractionError
from .simplicial import (ZERO, Chain, FilteredComplex, Simplex, VertexMap, close_complex,
                         facets, faces, induced_chain_map, link)


def _checked(c: Contraction, what: str) -> Contraction:
    violations = verify(c)
    if violations:
        raise ContractionError(f"{what}: {violations[0].describe()}", violations)
    return c


def compose(c1: Contraction, c2: Contraction) -> Contraction:
    """Contraction K => N from K => M and M => N."""
    if not c1.target_differential or set(c1.target) != set(c2.source):
        raise ValueError("target of the first contraction is not the source of the second")
    return _checked(compose_unchecked(c1, c2), "composition")


def _sub_complex(K: FilteredComplex, removed) -> FilteredComplex:
    return FilteredComplex([s for s in K if s not in removed], check=False)


def _free_pair(K: FilteredComplex, alive) -> Optional[Tuple[Simplex, Simplex]]:
    # first maximal simplex (filtration order) with a facet lying in no other simplex
    for s in K:
        if s not in alive or len(s) == 1:
            continue
        if any(t in alive for t in K.cofacets(s)):
            continue
        for face in facets(s):
            others = [t for t in K.cofacets(face) if t in alive and t != s]
            if not others:
                return s, face
    return None


def collapse_thinning(K: FilteredComplex) -> Tuple[FilteredComplex, Contraction]:
    """Collapse free pairs until none remain; returns the thinned complex and the contraction."""
    alive = set(K)
    current = K
    total = identity_contraction(K)
    steps = 0
    while True:
        pair = _free_pair(K, alive)
        if pair is None:
            break
        sigma, face = pair
        alive -= {sigma, face}
        nxt = _sub_complex(current, {sigma, face})
        f = {s: frozenset((s,)) for s in current if s not in (sigma, face)}
        f[face] = frozenset(facets(sigma)) - {face}
        f = {s: v for s, v in f.items() if v}
        g = {s: frozenset((s,)) for s in nxt}
        step = Contraction(current, nxt, f, g, {face: frozenset((sigma,))})
        total = compose_unchecked(total, step)
        current = nxt
        steps += 1
    total = Contraction(K, current, total.f, total.g, total.phi,
                        notes=(f"{steps} elementary collapses",))
    return current, _checked(total, "collapse thinning")


def edge_contractible(K: FilteredComplex, edge: Simplex) -> bool:
    edge = tuple(edge)
    if len(edge) != 2 or edge not in K:
        raise ValueError(f"{list(edge)} is not an edge of the complex")
    a, b = edge
    return link([(a,)], K) & link([(b,)], K) == link([edge], K)


def edge_contract(K: FilteredComplex, edge: Simplex, new_label: int) -> Tuple[FilteredComplex, Contraction]:
    """Contract ``edge`` = <a,b> to the vertex ``new_label``."""
    edge = tuple(edge)
    if not edge_contractible(K, edge):
        raise ValueError(f"link condition fails for edge {list(edge)}")
    a, b = edge
    labels = set(K.vertices) - {a, b}
    if new_label in labels:
        raise ValueError(f"label {new_label} is already used by the complex")
    mapping = {v: v for v in K.vertices}
    mapping[a] = mapping[b] = new_label
    image = set()
    for s in K:
        img = tuple(sorted({mapping[v] for v in s}))
        image.add(img)
    L = close_complex(image)
    vm = VertexMap(mapping, K, L)

    lk_a = link([(a,)], K)
    lk_tau = link([edge], K)
    f = {}
    for s in K:
        img = induced_chain_map(vm, (s,))
        if img:
            f[s] = img
    g: Dict[Simplex, Chain] = {}
    for lam in L:
        if new_label not in lam:
            g[lam] = frozenset((lam,))
            continue
        omega = tuple(v for v in lam if v != new_label)
        if not omega:
            g[lam] = frozenset(((a,),))
        elif omega in lk_a:
            g[lam] = frozenset((tuple(sorted(omega + (a,))),))
        else:
            # omega lies in Lk b - Lk tau; the empty face counts as a link member
            acc = {tuple(sorted(omega + (b,)))}
            bars = facets(omega) if len(omega) > 1 else [()]
            for bar in bars:
                if bar == () or bar in lk_tau:
                    acc ^= {tuple(sorted(bar + (a, b)))}
            g[lam] = frozenset(acc)
    phi = {}
    for s in K:
        if b in s and a not in s:
            rest = tuple(v for v in s if v != b)
            if not rest or rest in lk_tau:
                phi[s] = frozenset((tuple(sorted(s + (a,))),))
    c = Contraction(K, L, f, g, phi)
    return L, _checked(c, f"edge contraction of {list(edge)}")


def cone_contraction(sigma: Simplex) -> Contraction:
    """Contraction of the closure of ``sigma`` onto its first vertex."""
    sigma = tuple(sigma)
    K = close_complex([sigma])
    v0 = sigma[0]
    P = close_complex([[v0]])
    f = {(v,): frozenset(((v0,),)) for v in sigma}
    g = {(v0,): frozenset(((v0,),))}
    phi = {s: frozenset(((v0,) + s,)) for s in K if v0 not in s}
    return _checked(Contraction(K, P, f, g, phi), f"cone contraction of {list(sigma)}")


def reduce_then_model(K: FilteredComplex, tau: str = "largest"):
    """Thin ``K`` by collapses, build the homology model of the result, compose."""
    from .at_model import as_contraction, build_contraction

    M, c = collapse_thinning(K)
    model = build_contraction(M, tau)
    hom = as_contraction(model)
    total = compose_unchecked(c, hom)
    return M, model, _checked(total, "thinning composed with homology model")
