"""Simplices, filtered complexes and GF(2) (co)chains.

A simplex is a strictly increasing tuple of vertex labels. A chain (or
cochain) over GF(2) is a ``frozenset`` of same-dimension simplices; addition
is symmetric difference and the empty set is zero. Evaluating a cochain on a
chain is the parity of the intersection of their supports.
"""

from __future__ import annotations

import itertools
import random
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .errors import FiltrationError, SimplexError

Simplex = Tuple[int, ...]
Chain = frozenset

ZERO: Chain = frozenset()


def make_simplex(labels: Iterable[int]) -> Simplex:
    vertices = sorted(int(v) for v in labels)
    if not vertices:
        raise SimplexError("a simplex needs at least one vertex")
    for a, b in zip(vertices, vertices[1:]):
        if a == b:
            raise SimplexError(f"duplicate vertex label {a}", label=a)
    if vertices[0] < 0:
        raise SimplexError(f"negative vertex label {vertices[0]}", label=vertices[0])
    return tuple(vertices)


def dimension(s: Simplex) -> int:
    return len(s) - 1


def facets(s: Simplex):
    """The (q-1)-faces of ``s``; empty for a vertex."""
    if len(s) == 1:
        return []
    return [s[:i] + s[i + 1:] for i in range(len(s))]


def faces(s: Simplex):
    """All non-empty faces of ``s`` including ``s`` itself."""
    n = len(s)
    return [c for k in range(1, n + 1) for c in itertools.combinations(s, k)]


def chain(simplices: Iterable[Simplex] = ()) -> Chain:
    """GF(2) sum of ``simplices``; repeated terms cancel in pairs."""
    acc = set()
    for s in simplices:
        acc ^= {s}
    return frozenset(acc)


def chain_dim(a: Chain) -> Optional[int]:
    """Common dimension of the members of ``a``, None for the zero chain."""
    for s in a:
        return len(s) - 1
    return None


def boundary(s: Simplex) -> Chain:
    return frozenset(facets(s))


def boundary_chain(a: Iterable[Simplex]) -> Chain:
    acc = set()
    for s in a:
        if len(s) > 1:
            acc.symmetric_difference_update(facets(s))
    return frozenset(acc)


def evaluate(c: Chain, a: Chain) -> int:
    """Value of cochain ``c`` on chain ``a``."""
    if len(c) > len(a):
        c, a = a, c
    return sum(1 for s in c if s in a) & 1


class FilteredComplex:
    """All simplices of a complex in an order where faces precede cofaces.

    Instances are immutable. ``check=False`` skips the face-closure test; it
    is used to wrap generator sets that play the role of a graded basis.
    """

    __slots__ = ("simplices", "index", "_by_dim", "_cofacets")

    def __init__(self, simplices: Iterable[Sequence[int]], check: bool = True):
        ordered = []
        index: Dict[Simplex, int] = {}
        for raw in simplices:
            s = tuple(raw)
            if s in index:
                raise FiltrationError(f"duplicate simplex {list(s)}", simplex=s)
            if check:
                s2 = make_simplex(s)
                if s2 != s:
                    raise FiltrationError(
                        f"simplex {list(s)} is not strictly increasing", simplex=s)
                for face in facets(s):
                    if face not in index:
                        raise FiltrationError(
                            f"simplex {list(s)} appears before its face {list(face)}",
                            simplex=s)
            index[s] = len(ordered)
            ordered.append(s)
        by_dim: Dict[int, list] = {}
        cofacets: Dict[Simplex, list] = {s: [] for s in ordered}
        for s in ordered:
            by_dim.setdefault(len(s) - 1, []).append(s)
            for face in facets(s):
                if face in cofacets:
                    cofacets[face].append(s)
        self.simplices: Tuple[Simplex, ...] = tuple(ordered)
        self.index: Mapping[Simplex, int] = index
        self._by_dim = {q: tuple(v) for q, v in by_dim.items()}
        self._cofacets = {s: tuple(v) for s, v in cofacets.items()}

    def __len__(self):
        return len(self.simplices)

    def __iter__(self):
        return iter(self.simplices)

    def __contains__(self, s):
        return s in self.index

    def __eq__(self, other):
        return isinstance(other, FilteredComplex) and self.simplices == other.simplices

    def __hash__(self):
        return hash(self.simplices)

    def __repr__(self):
        return f"FilteredComplex({len(self.simplices)} simplices, dim={self.dimension})"

    @property
    def dimension(self) -> int:
        return max(self._by_dim) if self._by_dim else -1

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(s[0] for s in self.of_dim(0))

    def of_dim(self, q: int) -> Tuple[Simplex, ...]:
        return self._by_dim.get(q, ())

    def counts(self) -> Tuple[int, ...]:
        return tuple(len(self.of_dim(q)) for q in range(self.dimension + 1))

    def cofacets(self, s: Simplex) -> Tuple[Simplex, ...]:
        return self._cofacets.get(s, ())

    def maximal_simplices(self) -> Tuple[Simplex, ...]:
        return tuple(s for s in self.simplices if not self._cofacets[s])

    def prefix(self, n: int) -> "FilteredComplex":
        return FilteredComplex(self.simplices[:n], check=False)


ORDER_POLICIES = ("lex", "appearance", "input")


def _lex_key(s: Simplex):
    return (len(s), s)


def close_complex(maximal: Iterable[Iterable[int]], order: str = "lex",
                  filtration: Optional[Iterable[Iterable[int]]] = None) -> FilteredComplex:
    """Face closure of ``maximal`` as a filtered complex.

    ``order="lex"`` sorts by dimension then lexicographically;
    ``order="appearance"`` sorts by dimension then by first occurrence while
    walking ``maximal`` in the given order. With ``order="input"`` the
    caller's ``filtration`` is used verbatim after checking that it is
    face-closed and, when ``maximal`` is non-empty, that it lists exactly the
    closure of ``maximal``.
    """
    first_seen: Dict[Simplex, int] = {}
    for m in maximal:
        for face in sorted(faces(make_simplex(m)), key=_lex_key):
            first_seen.setdefault(face, len(first_seen))
    closure = set(first_seen)
    if order == "lex":
        return FilteredComplex(sorted(closure, key=_lex_key), check=False)
    if order == "appearance":
        return FilteredComplex(sorted(closure, key=lambda s: (len(s), first_seen[s])),
                               check=False)
    if order != "input":
        raise ValueError(f"unknown order policy {order!r}")
    if filtration is None:
        raise ValueError("order='input' needs an explicit filtration")
    supplied = [tuple(s) for s in filtration]
    K = FilteredComplex(supplied)
    if closure and set(K.simplices) != closure:
        missing = sorted(closure - set(K.simplices), key=_lex_key)
        extra = sorted(set(K.simplices) - closure, key=_lex_key)
        bad = missing[0] if missing else extra[0]
        raise FiltrationError(
            f"filtration does not match the closure of the maximal simplices at {list(bad)}",
            simplex=bad)
    return K


def coboundary(c: Chain, K: FilteredComplex) -> Chain:
    """(q+1)-simplices of ``K`` with an odd number of facets in ``c``."""
    counts: Dict[Simplex, int] = {}
    for s in c:
        for t in K.cofacets(s):
            counts[t] = counts.get(t, 0) ^ 1
    return frozenset(t for t, v in counts.items() if v)


def closure(B: Iterable[Simplex], K: Optional[FilteredComplex] = None) -> frozenset:
    out = set()
    for s in B:
        out.update(faces(s))
    return frozenset(out)


def star(B: Iterable[Simplex], K: FilteredComplex) -> frozenset:
    B = set(B)
    if not B:
        return frozenset()
    out = set()
    for s in K:
        vs = set(s)
        if any(vs.issuperset(b) for b in B):
            out.add(s)
    return frozenset(out)


def link(B: Iterable[Simplex], K: FilteredComplex) -> frozenset:
    B = list(B)
    return closure(star(B, K)) - star(closure(B), K)


class VertexMap:
    """Vertex map between two complexes; rejects maps that are not simplicial."""

    __slots__ = ("mapping", "source", "target")

    def __init__(self, mapping: Mapping[int, int], source: FilteredComplex,
                 target: FilteredComplex):
        for v in source.vertices:
            if v not in mapping:
                raise ValueError(f"vertex {v} has no image")
        for s in source:
            image = tuple(sorted({mapping[v] for v in s}))
            if image not in target:
                raise ValueError(
                    f"image {list(image)} of {list(s)} is not a simplex of the target")
        self.mapping = dict(mapping)
        self.source = source
        self.target = target

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def image(self, s: Simplex) -> Optional[Simplex]:
        """Image simplex, or None when two vertices collapse."""
        img = tuple(sorted(self.mapping[v] for v in s))
        if any(a == b for a, b in zip(img, img[1:])):
            return None
        return img


def induced_chain_map(vm: VertexMap, a: Iterable[Simplex]) -> Chain:
    return chain(t for t in (vm.image(s) for s in a) if t is not None)


def barycentric_subdivision(K: FilteredComplex) -> FilteredComplex:
    """First barycentric subdivision; new vertices numbered by filtration index."""
    label = {s: i for i, s in enumerate(K)}
    maximal = []
    for s in K.maximal_simplices():
        for perm in itertools.permutations(s):
            flag = [label[tuple(sorted(perm[:k]))] for k in range(1, len(s) + 1)]
            maximal.append(flag)
    return close_complex(maximal)


def random_filtration(K: FilteredComplex, rng: random.Random) -> FilteredComplex:
    """A uniformly shuffled face-respecting reordering of ``K``."""
    remaining = {s: len(facets(s)) for s in K}
    ready = [s for s, n in remaining.items() if n == 0]
    out = []
    while ready:
        s = ready.pop(rng.randrange(len(ready)))
        out.append(s)
        for t in K.cofacets(s):
            remaining[t] -= 1
            if remaining[t] == 0:
                ready.append(t)
    return FilteredComplex(out, check=False)


def random_complex(rng: random.Random, max_vertices: int = 8, max_simplices: int = 6,
                   max_dim: int = 4, shuffle: bool = False) -> FilteredComplex:
    """Closure of a few random maximal simplices on at most ``max_vertices`` vertices."""
    n = rng.randint(1, max_vertices)
    verts = list(range(1, n + 1))
    maximal = [[v] for v in verts]
    for _ in range(rng.randint(1, max_simplices)):
        k = rng.randint(1, min(n, max_dim + 1))
        maximal.append(rng.sample(verts, k))
    K = close_complex(maximal)
    return random_filtration(K, rng) if shuffle else K
