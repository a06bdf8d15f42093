"""The Adem secondary operation Psi_2 on the kernel of Sq^2 : H^2 -> H^4.

Everything is computed mod 2. The integral cochain ``eta = (c cup_2 c + c)/2``
is replaced by ``c`` and its coboundary by ``c cup_1 c``, so the eta term of
``w`` is ``c cup (c cup_1 c)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .at_model import ATModel
from .coops import (CohomologyClass, cup, cup_n, f_star, g_star, phi_star,
                    sq_image_basis, sq_matrix)
from .errors import NotInKernelError
from .gf2 import GF2Matrix, reduce_mod_image
from .simplicial import ZERO, Chain, FilteredComplex, coboundary

# Each term is a product of c on four 2-faces of <v0,...,v5>, given by vertex positions.
E3_TERMS = (
    ((0, 2, 3), (0, 1, 2), (3, 4, 5), (2, 3, 5)),
    ((0, 4, 5), (2, 3, 4), (0, 1, 2), (0, 1, 2)),
    ((0, 1, 5), (3, 4, 5), (1, 2, 3), (1, 2, 3)),
    ((0, 1, 2), (2, 4, 5), (2, 3, 4), (2, 3, 4)),
    ((0, 1, 2), (2, 3, 5), (3, 4, 5), (3, 4, 5)),
)

# Same as E3_TERMS except the second factor of the second term is <v3,v4,v5>.
# It does not satisfy the coboundary relation checked by e3_defect; kept only to
# reproduce values computed with it.
E3_TERMS_LEGACY = (
    E3_TERMS[0],
    ((0, 4, 5), (3, 4, 5), (0, 1, 2), (0, 1, 2)),
) + E3_TERMS[2:]

E3_VARIANTS = {"standard": E3_TERMS, "legacy": E3_TERMS_LEGACY}


def e3(c: Chain, K: FilteredComplex, variant: str = "standard") -> Chain:
    """The 5-cochain E_3 c^4 of a 2-cochain ``c``."""
    if variant not in E3_VARIANTS:
        raise ValueError(f"unknown E_3 variant {variant!r}")
    terms = E3_VARIANTS[variant]
    if not c:
        return ZERO
    out = []
    for s in K.of_dim(5):
        v = 0
        for term in terms:
            if all(tuple(s[k] for k in face) in c for face in term):
                v ^= 1
        if v:
            out.append(s)
    return frozenset(out)


def e3_defect(c: Chain, K: FilteredComplex, variant: str = "standard") -> Chain:
    """d(E_3 c^4) + (c cup c) cup_2 (c cup c) + (c cup_1 c) cup (c cup_1 c).

    Zero for every 2-cocycle ``c`` when E_3 is a valid cochain homotopy.
    """
    cc = cup(c, c, K)
    c1 = cup_n(c, c, 1, K)
    return coboundary(e3(c, K, variant), K) ^ cup_n(cc, cc, 2, K) ^ cup_n(c1, c1, 0, K)


@dataclass(frozen=True)
class Psi2Result:
    input: CohomologyClass
    w_cochain: Chain
    w_class: CohomologyClass
    image_basis: Tuple[CohomologyClass, ...]
    coset_rep: Tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.coset_rep)


def check_in_kernel(model: ATModel, alpha: CohomologyClass) -> None:
    if alpha.dim != 2:
        raise NotImplementedError(
            f"Psi_q is only implemented for q = 2 (got a class of dimension {alpha.dim})")
    image = sq_matrix(model, 2, 2) @ alpha.coords
    if any(image):
        raise NotInKernelError("class is not in the kernel of Sq^2", image=image)


def cocycle_terms(model: ATModel, c: Chain, variant: str = "standard") -> dict:
    """Intermediate cochains of w for a representative 2-cocycle ``c``, keyed by name."""
    K = model.complex
    db = cup(c, c, K)
    b = phi_star(model, db)
    if coboundary(b, K) != db:
        raise AssertionError("coboundary of phi*(c cup c) differs from c cup c")
    d_eta = cup_n(c, c, 1, K)
    terms = {
        "c": c,
        "db": db,
        "b": b,
        "d_eta": d_eta,
        "e3": e3(c, K, variant),
        "b_cup1_b": cup_n(b, b, 1, K),
        "b_cup2_db": cup_n(b, db, 2, K),
        "eta_cup_d_eta": cup(c, d_eta, K),
    }
    terms["w"] = (terms["e3"] ^ terms["b_cup1_b"] ^ terms["b_cup2_db"]
                  ^ terms["eta_cup_d_eta"])
    return terms


def psi2_terms(model: ATModel, alpha: CohomologyClass, variant: str = "standard") -> dict:
    """All intermediate cochains of the Psi_2 construction for ``alpha``."""
    check_in_kernel(model, alpha)
    return cocycle_terms(model, g_star(model, alpha), variant)


def psi2_cocycle(model: ATModel, alpha: CohomologyClass, variant: str = "standard") -> Chain:
    """The 5-cocycle w whose class represents Psi_2(alpha)."""
    return psi2_terms(model, alpha, variant)["w"]


def image_matrix(model: ATModel) -> GF2Matrix:
    return sq_matrix(model, 2, 3)


def psi2(model: ATModel, alpha: CohomologyClass, variant: str = "standard") -> Psi2Result:
    w = psi2_cocycle(model, alpha, variant)
    w_class = f_star(model, w, 5)
    M = image_matrix(model)
    image: List[CohomologyClass] = sq_image_basis(model, 2, 3)
    coset = reduce_mod_image(w_class.coords, M)
    return Psi2Result(alpha, w, w_class, tuple(image), coset)
