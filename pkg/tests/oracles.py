"""Brute-force mod 2 cohomology with numpy, sharing no code with the library.

Cochains here are dicts {simplex tuple: 0/1}; linear algebra is plain
Gaussian elimination on uint8 arrays.
"""

import itertools

import numpy as np


def all_faces(maximal):
    out = set()
    for m in maximal:
        m = tuple(sorted(m))
        for k in range(1, len(m) + 1):
            out.update(itertools.combinations(m, k))
    return out


def simplices_of_dim(maximal, q):
    return sorted(s for s in all_faces(maximal) if len(s) == q + 1)


def rank_mod2(A):
    A = np.array(A, dtype=np.uint8) % 2
    if A.size == 0:
        return 0
    A = A.copy()
    r = 0
    rows, cols = A.shape
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i, c]), None)
        if piv is None:
            continue
        A[[r, piv]] = A[[piv, r]]
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] ^= A[r]
        r += 1
        if r == rows:
            break
    return r


def nullspace_mod2(A, ncols):
    A = np.array(A, dtype=np.uint8).reshape(-1, ncols) % 2
    A = A.copy()
    rows = A.shape[0]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, rows) if A[i, c]), None)
        if piv is None:
            continue
        A[[r, piv]] = A[[piv, r]]
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] ^= A[r]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = np.zeros(ncols, dtype=np.uint8)
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = A[i, fc]
        basis.append(v)
    return basis


def coboundary_matrix(maximal, q):
    """Rows: (q+1)-simplices, columns: q-simplices."""
    src = simplices_of_dim(maximal, q)
    dst = simplices_of_dim(maximal, q + 1)
    pos = {s: i for i, s in enumerate(src)}
    D = np.zeros((len(dst), len(src)), dtype=np.uint8)
    for r, t in enumerate(dst):
        for k in range(len(t)):
            D[r, pos[t[:k] + t[k + 1:]]] = 1
    return D


def betti(maximal, q):
    n = len(simplices_of_dim(maximal, q))
    r_out = rank_mod2(coboundary_matrix(maximal, q)) if n else 0
    r_in = rank_mod2(coboundary_matrix(maximal, q - 1)) if q > 0 else 0
    return n - r_out - r_in


def cohomology_basis(maximal, q):
    """Cocycle vectors whose classes form a basis of H^q."""
    src = simplices_of_dim(maximal, q)
    D = coboundary_matrix(maximal, q)
    cocycles = nullspace_mod2(D, len(src)) if len(D) else [
        row for row in np.eye(len(src), dtype=np.uint8)]
    B = coboundary_matrix(maximal, q - 1).T if q > 0 else np.zeros((0, len(src)), np.uint8)
    chosen = []
    current = [row for row in B]
    base = rank_mod2(np.array(current)) if current else 0
    for z in cocycles:
        trial = current + [z]
        r = rank_mod2(np.array(trial))
        if r > base:
            current, base = trial, r
            chosen.append(z)
    return chosen


def as_dict(vec, maximal, q):
    return {s: int(x) for s, x in zip(simplices_of_dim(maximal, q), vec)}


def is_coboundary(cochain, maximal, q):
    src = simplices_of_dim(maximal, q)
    v = np.array([cochain.get(s, 0) for s in src], dtype=np.uint8)
    if q == 0:
        return not v.any()
    B = coboundary_matrix(maximal, q - 1)
    return rank_mod2(np.column_stack([B, v])) == rank_mod2(B)


def cup(c1, p, c2, q, maximal):
    return {s: c1.get(s[:p + 1], 0) & c2.get(s[p:], 0)
            for s in simplices_of_dim(maximal, p + q)}


def nonzero_products(maximal, p, q):
    """Pairs of basis classes of H^p x H^q whose cup product is not a coboundary."""
    bp = [as_dict(z, maximal, p) for z in cohomology_basis(maximal, p)]
    bq = [as_dict(z, maximal, q) for z in cohomology_basis(maximal, q)]
    out = []
    for i, a in enumerate(bp):
        for j, b in enumerate(bq):
            if not is_coboundary(cup(a, p, b, q, maximal), maximal, p + q):
                out.append((i, j))
    return out


def sq_top(maximal, q):
    """Sq^q on H^q is the squaring map; returns, per basis class, whether x^2 != 0."""
    return [not is_coboundary(cup(a, q, a, q, maximal), maximal, 2 * q)
            for a in (as_dict(z, maximal, q) for z in cohomology_basis(maximal, q))]
