"""Green's-walk gradings of Brauer tree algebras, computed exactly."""
from .a0 import (A0Algebra, QHOrder, a0_cartan, a0_global_dimension, extract_a0,
                 recover_quiver, trivial_extension_check)
from .aut_group import (HmElement, TruncatedPolyMap, hm_decompose, hm_inv, hm_mul,
                        hm_oracle_compose, identity)
from .cartan import (GradedCartanMatrix, cartan_closed_form, cartan_determinant,
                     cartan_from_paths)
from .exactmath import QQ, LaurentPoly, PrimeField, laurent_det, q, solve_linear
from .green_walk import GreenNumbering, components, green_number
from .quiver import (GradedQuiver, RelationSet, assign_degrees, build_quiver,
                     grading_from_tree, green_graded_quiver)
from .regrading import apply_shifts, morita_solve, positive_shifts, rescale
from .star_homotopy import (build_tilting, derive_graded_quiver, hom_complex,
                            hom_dimension_table)
from .tree import BrauerTree, TreeError, line_tree, load_tree, parse_tree, random_tree, star_tree

__version__ = "0.1.0"
