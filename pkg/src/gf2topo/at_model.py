"""Incremental chain contraction from C_*K onto its mod 2 homology.

Simplices are processed in filtration order. A simplex whose boundary has
zero image under the current ``f`` becomes a homology generator; otherwise it
kills one generator ``tau`` appearing in that image, and every simplex whose
``f``-image contains ``tau`` is updated so that the new maps again form a
chain contraction. ``g`` is never stored: ``g(gamma) = gamma + phi(d gamma)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, List, Mapping, Tuple

from .contraction import Contraction, Violation, apply_map, check_identities
from .errors import NotABoundaryError, NotACycleError
from .gf2 import GF2Matrix, rank
from .simplicial import (ZERO, Chain, FilteredComplex, Simplex, VertexMap,
                         boundary_chain, facets, induced_chain_map)

TAU_STRATEGIES = ("largest", "smallest")


@dataclass(frozen=True)
class ATModel:
    complex: FilteredComplex
    f: Mapping[Simplex, Chain]
    phi: Mapping[Simplex, Chain]
    generators: Tuple[Simplex, ...]

    def generators_of_dim(self, q: int) -> Tuple[Simplex, ...]:
        return tuple(s for s in self.generators if len(s) == q + 1)

    def apply_f(self, a) -> Chain:
        return apply_map(self.f, a)

    def apply_phi(self, a) -> Chain:
        return apply_map(self.phi, a)

    def apply_g(self, a) -> Chain:
        acc = set()
        for gamma in a:
            acc.symmetric_difference_update(_g(self, gamma))
        return frozenset(acc)

    @property
    def dimension(self) -> int:
        return self.complex.dimension


def _g(model: ATModel, gamma: Simplex) -> Chain:
    return frozenset((gamma,)) ^ model.apply_phi(facets(gamma))


def build_contraction(K: FilteredComplex, tau: str = "largest") -> ATModel:
    if tau not in TAU_STRATEGIES:
        raise ValueError(f"unknown tau strategy {tau!r}")
    pick = max if tau == "largest" else min
    index = K.index
    f: Dict[Simplex, Chain] = {}
    phi: Dict[Simplex, Chain] = {}
    generators: Dict[Simplex, None] = {}
    # generator -> processed simplices whose f-image contains it
    holders: Dict[Simplex, set] = {}

    for sigma in K:
        d = facets(sigma)
        u = apply_map(f, d)
        if not u:
            generators[sigma] = None
            f[sigma] = frozenset((sigma,))
            holders[sigma] = {sigma}
            continue
        t = pick(u, key=index.__getitem__)
        correction = frozenset((sigma,)) ^ apply_map(phi, d)
        del generators[t]
        for x in list(holders.pop(t)):
            old = f[x]
            new = old ^ u
            for gamma in old - new:
                if gamma != t:
                    holders[gamma].discard(x)
            for gamma in new - old:
                holders[gamma].add(x)
            if new:
                f[x] = new
            else:
                del f[x]
            p = phi.get(x, ZERO) ^ correction
            if p:
                phi[x] = p
            else:
                phi.pop(x, None)

    return ATModel(K, MappingProxyType(f), MappingProxyType(phi), tuple(generators))


def g_of(model: ATModel, gamma: Simplex) -> Chain:
    if gamma not in model.f or model.f[gamma] != frozenset((gamma,)):
        raise KeyError(f"{list(gamma)} is not a homology generator")
    return _g(model, gamma)


def representative_cycles(model: ATModel) -> Dict[Simplex, Chain]:
    return {gamma: _g(model, gamma) for gamma in model.generators}


def betti(model: ATModel, q: int) -> int:
    return len(model.generators_of_dim(q))


def betti_numbers(model: ATModel) -> Tuple[int, ...]:
    return tuple(betti(model, q) for q in range(model.dimension + 1))


def homology_class(model: ATModel, a) -> Chain:
    """Class of the cycle ``a`` written in the generator basis."""
    a = frozenset(a)
    d = boundary_chain(a)
    if d:
        raise NotACycleError("chain is not a cycle", boundary=d)
    return model.apply_f(a)


def boundary_witness(model: ATModel, a) -> Chain:
    """A chain ``b`` with ``d b = a`` for a bounding cycle ``a``."""
    cls = homology_class(model, a)
    if cls:
        raise NotABoundaryError("cycle is homologically nontrivial", homology_class=cls)
    b = model.apply_phi(a)
    if boundary_chain(b) != frozenset(a):
        raise AssertionError("phi(a) does not bound a; the model is not a contraction")
    return b


def as_contraction(model: ATModel) -> Contraction:
    """The model as a contraction onto the zero-differential generator complex."""
    H = FilteredComplex(model.generators, check=False)
    g = {gamma: _g(model, gamma) for gamma in model.generators}
    return Contraction(model.complex, H, model.f, g, model.phi, target_differential=False)


def verify_contraction(model: ATModel) -> List[Violation]:
    g_cache = {gamma: _g(model, gamma) for gamma in model.generators}
    return check_identities(
        model.complex, model.generators,
        model.apply_f, lambda a: apply_map(g_cache, a), model.apply_phi,
        lambda a: ZERO)


def boundary_matrix(K: FilteredComplex, q: int) -> GF2Matrix:
    """Matrix of d_q : C_q -> C_{q-1} in filtration order within each dimension."""
    rows_idx = {s: i for i, s in enumerate(K.of_dim(q - 1))}
    cols = K.of_dim(q)
    rows = [0] * len(rows_idx)
    for j, s in enumerate(cols):
        if q == 0:
            break
        for face in facets(s):
            rows[rows_idx[face]] |= 1 << j
    return GF2Matrix(rows, len(cols))


def induced_homology_map(vm: VertexMap, model_k: ATModel, model_l: ATModel) -> Dict[int, GF2Matrix]:
    """Per-dimension matrices of H_q(K) -> H_q(L) in generator bases."""
    if vm.source != model_k.complex or vm.target != model_l.complex:
        raise ValueError("vertex map does not connect the two models' complexes")
    top = max(model_k.dimension, model_l.dimension, 0)
    out = {}
    for q in range(top + 1):
        src = model_k.generators_of_dim(q)
        dst = model_l.generators_of_dim(q)
        pos = {gamma: i for i, gamma in enumerate(dst)}
        columns = []
        for gamma in src:
            img = model_l.apply_f(induced_chain_map(vm, _g(model_k, gamma)))
            col = [0] * len(dst)
            for t in img:
                col[pos[t]] = 1
            columns.append(col)
        out[q] = GF2Matrix.from_columns(columns, len(dst))
    return out


def betti_by_rank(K: FilteredComplex) -> Tuple[int, ...]:
    """b_q = |K_q| - rank d_q - rank d_{q+1}, independent of any contraction."""
    ranks = [rank(boundary_matrix(K, q)) for q in range(K.dimension + 2)]
    return tuple(len(K.of_dim(q)) - ranks[q] - ranks[q + 1] for q in range(K.dimension + 1))
