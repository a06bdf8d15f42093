"""Chain contractions (f, g, phi) and the identity checker shared by all builders."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Mapping, Tuple

from .simplicial import ZERO, Chain, FilteredComplex, Simplex, boundary_chain, facets

IDENTITIES = {
    "i": "f is a chain map (f d = d f)",
    "ii": "1 + g f = d phi + phi d",
    "iii": "f g = 1",
    "iv": "f phi = 0",
    "v": "phi g = 0",
    "vi": "phi phi = 0",
    "vii": "g is a chain map (d g = g d)",
}


@dataclass(frozen=True)
class Violation:
    identity: str
    simplex: Simplex
    residual: Chain

    def describe(self) -> str:
        res = sorted(self.residual, key=lambda s: (len(s), s))
        return (f"({self.identity}) {IDENTITIES[self.identity]} fails at "
                f"{list(self.simplex)}: residual {[list(s) for s in res]}")


def apply_map(m: Mapping[Simplex, Chain], a: Iterable[Simplex]) -> Chain:
    """Linear extension of a simplex-to-chain map; absent keys map to zero."""
    acc = set()
    for s in a:
        img = m.get(s)
        if img:
            acc.symmetric_difference_update(img)
    return frozenset(acc)


def _zero_boundary(a):
    return ZERO


@dataclass(frozen=True)
class Contraction:
    """(f, g, phi): C_*source => C_*target.

    ``target_differential=False`` marks a target with zero differential (a
    homology basis of generator simplices) rather than a simplicial complex.
    """

    source: FilteredComplex
    target: FilteredComplex
    f: Mapping[Simplex, Chain]
    g: Mapping[Simplex, Chain]
    phi: Mapping[Simplex, Chain]
    target_differential: bool = True
    notes: Tuple[str, ...] = field(default=(), compare=False)

    def apply_f(self, a):
        return apply_map(self.f, a)

    def apply_g(self, a):
        return apply_map(self.g, a)

    def apply_phi(self, a):
        return apply_map(self.phi, a)

    def target_boundary(self, a) -> Chain:
        return boundary_chain(a) if self.target_differential else ZERO


def check_identities(source: Iterable[Simplex], target: Iterable[Simplex],
                     f: Callable[[Iterable[Simplex]], Chain],
                     g: Callable[[Iterable[Simplex]], Chain],
                     phi: Callable[[Iterable[Simplex]], Chain],
                     target_boundary: Callable[[Iterable[Simplex]], Chain] = boundary_chain,
                     ) -> List[Violation]:
    """Run the seven contraction identities; an empty list means all hold."""
    out: List[Violation] = []
    for s in source:
        one = (s,)
        d_s = frozenset(facets(s))
        f_s = f(one)
        phi_s = phi(one)
        r = f(d_s) ^ target_boundary(f_s)
        if r:
            out.append(Violation("i", s, r))
        lhs = frozenset(one) ^ g(f_s)
        rhs = boundary_chain(phi_s) ^ phi(d_s)
        if lhs != rhs:
            out.append(Violation("ii", s, lhs ^ rhs))
        r = f(phi_s)
        if r:
            out.append(Violation("iv", s, r))
        r = phi(phi_s)
        if r:
            out.append(Violation("vi", s, r))
    for t in target:
        one = (t,)
        g_t = g(one)
        r = f(g_t) ^ frozenset(one)
        if r:
            out.append(Violation("iii", t, r))
        r = phi(g_t)
        if r:
            out.append(Violation("v", t, r))
        r = boundary_chain(g_t) ^ g(target_boundary(one))
        if r:
            out.append(Violation("vii", t, r))
    return out


def verify(c: Contraction) -> List[Violation]:
    return check_identities(c.source, c.target, c.apply_f, c.apply_g, c.apply_phi,
                            c.target_boundary)


def identity_contraction(K: FilteredComplex) -> Contraction:
    ident = {s: frozenset((s,)) for s in K}
    return Contraction(K, K, ident, ident, {})


def compose_unchecked(c1: Contraction, c2: Contraction) -> Contraction:
    """f = f2 f1, g = g1 g2, phi = phi1 + g1 phi2 f1 (no verification)."""
    f = {}
    for s in c1.source:
        img = c2.apply_f(c1.f.get(s, ZERO))
        if img:
            f[s] = img
    g = {}
    for t in c2.target:
        img = c1.apply_g(c2.g.get(t, ZERO))
        if img:
            g[t] = img
    phi = {}
    for s in c1.source:
        img = c1.phi.get(s, ZERO) ^ c1.apply_g(c2.apply_phi(c1.f.get(s, ZERO)))
        if img:
            phi[s] = img
    return Contraction(c1.source, c2.target, f, g, phi, c2.target_differential)
