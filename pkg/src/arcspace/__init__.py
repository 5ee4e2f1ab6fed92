"""Exact-arithmetic toolkit for reduced arc rings of toric varieties.

The package computes, over the rationals and without any floating point:

* lattice polytopes, their point enumerations, normality, and height lifts;
* sparse jet-variable polynomial arithmetic with Lie derivation actions;
* toric rings, their binomial ideals, and brute-force rank oracles for the
  graded pieces of (reduced and non-reduced) arc rings;
* cube generating data (gamma exponents and step vectors), the nilpotent
  relation series they produce, and the inductive lift construction;
* partially symmetric function spaces, the dual assignment maps, and exact
  kernel-intersection slices;
* truncated q-series and the closed-form graded characters, verified
  against the oracles.
"""

from .arcjets import (a_r_dim, component_dims_by_degree, expand_product,
                      filtration_dims, jet_assignments,
                      nonreduced_component_dim, reduced_component_dim)
from .catalog import CatalogEntry, default_catalog, get_entry
from .characters import (CharacterSeries, QSeries, component_character,
                         freeness_check, inv_pochhammer,
                         principal_ideal_slice_dims, q_multinomial,
                         q_pochhammer, veronese_segre_character)
from .cubedata import (CubeGenData, GradedLexOrder, ReflectedPolygon,
                       TwoDOrder, ZetaOrder, build_zeta_data, compare,
                       f_from_convex, gamma_parallelepiped, gamma_segment,
                       gamma_simplex, kappa_2d, path_2d, segment_data,
                       validate)
from .exactpoly import (Poly, apply_dk, apply_h_current, jet_series,
                        series_coefficient, var)
from .lattice import (LatticePolytope, ZetaFunction, in_hull, is_normal,
                      lattice_points, lift_zeta)
from .relations import (RelationSeries, coefficient_polynomial, cube_series,
                        initial_part, pushforward, verify_identically_zero,
                        veronese_series)
from .symfun import (AssignmentMap, SymContext, kernel_intersection_image,
                     omega_slice_dim, phi_vee, product_generator,
                     psi_bc_image_dim, psi_map, split_kappa,
                     supersym_generators)
from .toricring import (ToricContext, enumerate_R, hilbert_generation_check,
                        reachable_cells, toric_ideal_generators)

__version__ = "0.1.0"
