"""Cochain contraction, cup and cup-n products, Steenrod squares.

Cohomology classes are coordinate vectors over the dual basis of the model's
generators in one dimension: generator ``gamma`` pairs to 1 with its own
representative cycle and to 0 with every other one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from .at_model import ATModel, _g
from .errors import NotACocycleError
from .gf2 import GF2Matrix, independent_columns, null_space
from .simplicial import ZERO, Chain, FilteredComplex, Simplex, chain_dim, coboundary, evaluate


@dataclass(frozen=True)
class CohomologyClass:
    dim: int
    coords: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(x) & 1 for x in self.coords))

    @classmethod
    def zero(cls, model: ATModel, dim: int) -> "CohomologyClass":
        return cls(dim, (0,) * len(model.generators_of_dim(dim)))

    @classmethod
    def from_generators(cls, model: ATModel, dim: int, gens: Iterable[Sequence[int]]) -> "CohomologyClass":
        """Sum of the duals of the named generators."""
        basis = model.generators_of_dim(dim)
        pos = {g: i for i, g in enumerate(basis)}
        coords = [0] * len(basis)
        for gen in gens:
            key = tuple(gen)
            if key not in pos:
                raise KeyError(f"{list(key)} is not a generator of H^{dim}")
            coords[pos[key]] ^= 1
        return cls(dim, tuple(coords))

    def generators(self, model: ATModel) -> List[Simplex]:
        basis = model.generators_of_dim(self.dim)
        return [g for g, x in zip(basis, self.coords) if x]

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        if self.dim != other.dim:
            raise ValueError("cannot add classes of different dimension")
        return CohomologyClass(self.dim, tuple(a ^ b for a, b in zip(self.coords, other.coords)))

    def __bool__(self):
        return any(self.coords)


def is_cocycle(c: Chain, K: FilteredComplex) -> bool:
    return not coboundary(c, K)


def g_star(model: ATModel, alpha: CohomologyClass) -> Chain:
    """Representative cocycle ``alpha o f``."""
    chosen = set(alpha.generators(model))
    if not chosen:
        return ZERO
    out = []
    for s in model.complex.of_dim(alpha.dim):
        img = model.f.get(s)
        if img and len(chosen & img) & 1:
            out.append(s)
    return frozenset(out)


def f_star(model: ATModel, c: Chain, dim: int = None) -> CohomologyClass:
    """Class of the cocycle ``c``: its values on the representative cycles."""
    if dim is None:
        dim = chain_dim(c)
        if dim is None:
            raise ValueError("dimension of the zero cochain must be given")
    d = coboundary(c, model.complex)
    if d:
        raise NotACocycleError("cochain is not a cocycle", coboundary=d)
    basis = model.generators_of_dim(dim)
    return CohomologyClass(dim, tuple(evaluate(c, _g(model, gamma)) for gamma in basis))


def phi_star(model: ATModel, c: Chain) -> Chain:
    q = chain_dim(c)
    if q is None or q == 0:
        return ZERO
    out = []
    for s in model.complex.of_dim(q - 1):
        img = model.phi.get(s)
        if img and evaluate(c, img):
            out.append(s)
    return frozenset(out)


def cup(c: Chain, c2: Chain, K: FilteredComplex) -> Chain:
    """Front-face/back-face product."""
    i, j = chain_dim(c), chain_dim(c2)
    if i is None or j is None:
        return ZERO
    return frozenset(s for s in K.of_dim(i + j) if s[:i + 1] in c and s[i:] in c2)


@lru_cache(maxsize=None)
def _cup_n_terms(p: int, q: int, n: int) -> Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]:
    """Surviving (even-block, odd-block) vertex index pairs for c cup_n c'."""
    top = p + q - n
    terms = []
    for cut in itertools.combinations(range(top + 1), n + 1):
        bounds = (0,) + cut + (top,)
        even, odd = set(), set()
        for j in range(n + 2):
            block = range(bounds[j], bounds[j + 1] + 1)
            (even if j % 2 == 0 else odd).update(block)
        if len(even) == p + 1 and len(odd) == q + 1:
            terms.append((tuple(sorted(even)), tuple(sorted(odd))))
    return tuple(terms)


def cup_n(c: Chain, c2: Chain, n: int, K: FilteredComplex) -> Chain:
    """The cup-n product, a (p+q-n)-cochain."""
    if n < 0:
        raise ValueError("n must be non-negative")
    p, q = chain_dim(c), chain_dim(c2)
    if p is None or q is None or p + q - n < 0:
        return ZERO
    terms = _cup_n_terms(p, q, n)
    if not terms:
        return ZERO
    out = []
    for s in K.of_dim(p + q - n):
        v = 0
        for ev, od in terms:
            if tuple(s[k] for k in ev) in c and tuple(s[k] for k in od) in c2:
                v ^= 1
        if v:
            out.append(s)
    return frozenset(out)


def cohomology_ring(model: ATModel) -> Dict[Tuple[Simplex, Simplex, Simplex], int]:
    """Structure constants: bit for (alpha, beta, gamma) with |gamma| = |alpha| + |beta|."""
    K = model.complex
    reps = {gamma: _g(model, gamma) for gamma in model.generators}
    duals = {}
    for gamma in model.generators:
        q = len(gamma) - 1
        duals[gamma] = g_star(model, CohomologyClass.from_generators(model, q, [gamma]))
    table = {}
    for a in model.generators:
        for b in model.generators:
            targets = model.generators_of_dim(len(a) + len(b) - 2)
            if not targets:
                continue
            prod = cup(duals[a], duals[b], K)
            for gamma in targets:
                table[(a, b, gamma)] = evaluate(prod, reps[gamma])
    return table


def sq_cochain(c: Chain, i: int, K: FilteredComplex) -> Chain:
    """Sq^i at cochain level: c cup_{q-i} c."""
    if i < 0:
        raise ValueError("i must be non-negative")
    q = chain_dim(c)
    if q is None or i > q:
        return ZERO
    return cup_n(c, c, q - i, K)


def sq_class(model: ATModel, alpha: CohomologyClass, i: int) -> CohomologyClass:
    c = g_star(model, alpha)
    return f_star(model, sq_cochain(c, i, model.complex), alpha.dim + i)


def sq_matrix(model: ATModel, i: int, q: int) -> GF2Matrix:
    """Matrix of Sq^i : H^q -> H^{q+i}; column j is the image of generator j."""
    src = model.generators_of_dim(q)
    rows = len(model.generators_of_dim(q + i))
    columns = []
    for gamma in src:
        alpha = CohomologyClass.from_generators(model, q, [gamma])
        columns.append(sq_class(model, alpha, i).coords)
    return GF2Matrix.from_columns(columns, rows)


def sq_kernel_basis(model: ATModel, i: int, q: int) -> List[CohomologyClass]:
    return [CohomologyClass(q, v) for v in null_space(sq_matrix(model, i, q))]


def sq_image_basis(model: ATModel, i: int, q: int) -> List[CohomologyClass]:
    M = sq_matrix(model, i, q)
    return [CohomologyClass(q + i, M.column(j)) for j in independent_columns(M)]
