"""Mod 2 homology, cup products, Steenrod squares and a secondary operation
computed from an explicit chain contraction of a simplicial complex."""

from .adem import E3_VARIANTS, Psi2Result, e3, e3_defect, psi2, psi2_cocycle
from .at_model import (ATModel, betti_by_rank, betti_numbers, boundary_witness,
                       build_contraction, homology_class, representative_cycles,
                       verify_contraction)
from .contraction import Contraction, Violation, check_identities, verify
from .coops import (CohomologyClass, cohomology_ring, cup, cup_n, f_star, g_star,
                    phi_star, sq_class, sq_cochain, sq_image_basis, sq_kernel_basis,
                    sq_matrix)
from .errors import (ContractionError, FiltrationError, NotABoundaryError,
                     NotACocycleError, NotACycleError, NotInKernelError, SimplexError)
from .fixtures import FIXTURES, fixture
from .gf2 import GF2Matrix, in_image, null_space, rank, reduce_mod_image, solve
from .reductions import (collapse_thinning, compose, cone_contraction, edge_contract,
                         edge_contractible, reduce_then_model)
from .simplicial import (FilteredComplex, VertexMap, boundary, boundary_chain, close_complex,
                         closure, coboundary, evaluate, link, star)

__version__ = "0.1.0"
