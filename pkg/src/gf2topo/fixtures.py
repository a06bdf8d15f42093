"""Bundled test complexes, given by their maximal simplices."""

from __future__ import annotations

import itertools

from .simplicial import FilteredComplex, close_complex

ADEM_EXAMPLE = [
    [1, 3, 7], [3, 4, 7], [1, 4, 7], [1, 2, 8],
    [2, 3, 8], [1, 3, 8], [4, 5, 9], [4, 6, 9],
    [5, 6, 9], [3, 4, 10], [3, 6, 10], [4, 6, 10],
    [1, 2, 3, 4, 5, 6], [1, 2, 3, 4, 5, 11], [1, 2, 3, 4, 6, 11],
    [1, 2, 3, 5, 6, 11], [1, 2, 4, 5, 6, 11], [1, 3, 4, 5, 6, 11],
    [2, 3, 4, 5, 6, 11],
]

HOLLOW_TRIANGLE = [[1, 2], [1, 3], [2, 3]]

SPHERE = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]

# minimal 6-vertex triangulation of the real projective plane
RP2 = [
    [1, 2, 3], [1, 2, 4], [1, 3, 5], [1, 4, 6], [1, 5, 6],
    [2, 3, 6], [2, 4, 5], [2, 5, 6], [3, 4, 5], [3, 4, 6],
]

# 7-vertex torus: {i, i+1, i+3} and {i, i+2, i+3} mod 7
TORUS = sorted(
    sorted(1 + (i + k) % 7 for k in ks)
    for i in range(7) for ks in ((0, 1, 3), (0, 2, 3))
)

# boundary of a tetrahedron with two circles glued at vertex 1
WEDGE_S2_S1_S1 = SPHERE + [[1, 5], [5, 6], [1, 6], [1, 7], [7, 8], [1, 8]]


def projective_space(n: int):
    """Maximal simplices of RP^n: the barycentric subdivision of the boundary
    of the (n+1)-dimensional cross-polytope modulo the antipodal map.

    Faces of the cross-polytope are nonzero sign vectors. A face and its
    antipode are never joined by a path of length < 3 in the subdivision, so
    the quotient is a simplicial complex.
    """
    label = {}
    for v in itertools.product((-1, 0, 1), repeat=n + 1):
        if any(v) and v not in label:
            label[v] = label[tuple(-x for x in v)] = len(label) // 2 + 1
    maximal = set()
    for top in itertools.product((-1, 1), repeat=n + 1):
        for perm in itertools.permutations(range(n + 1)):
            flag = []
            for k in range(1, n + 2):
                chosen = set(perm[:k])
                flag.append(label[tuple(x if i in chosen else 0 for i, x in enumerate(top))])
            maximal.add(tuple(sorted(flag)))
    return sorted(list(m) for m in maximal)


FIXTURES = {
    "adem_example": ADEM_EXAMPLE,
    "hollow_triangle": HOLLOW_TRIANGLE,
    "point": [[1]],
    "edge": [[1, 2]],
    "triangle": [[1, 2, 3]],
    "tetrahedron": [[1, 2, 3, 4]],
    "simplex5": [[1, 2, 3, 4, 5, 6]],
    "simplex6": [[1, 2, 3, 4, 5, 6, 7]],
    "sphere": SPHERE,
    "rp2": RP2,
    "torus": TORUS,
    "wedge": WEDGE_S2_S1_S1,
    "rp4": projective_space(4),
}


def fixture(name: str, order: str = "lex") -> FilteredComplex:
    try:
        maximal = FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}") from None
    return close_complex(maximal, order=order)
