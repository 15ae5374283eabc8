"""orbitcalc: nilpotent-orbit combinatorics for split reductive groups.

Enumerates unramified nilpotent orbits through affine Bala-Carter data,
computes the Sommers/Achar duality maps and the A-order, and evaluates
canonical unramified and geometric wavefront sets of spherical
representations attached to dual-side orbits.
"""

from .balacarter import (ABCPair, AffineSubspace, classes, enumerate_pairs,
                         equivalent, face_hull, pair_saturation, saturation)
from .duality import (UnramifiedClassInvariant, achar_dual_one, enumerate_nobc,
                      invariant_of, leq_A, sommers_dual)
from .orbits import (NilpotentOrbit, WeightedDynkinDiagram, closure_leq,
                     dual_bv, dual_ls, enumerate_orbits, is_special,
                     orbit_dimension, orbit_from_wdd, regular_orbit,
                     weighted_dynkin, zero_orbit)
from .rootdata import (AlcoveSymmetry, CartanType, RootSystem, WeylElement,
                       alcove_symmetries, build_root_system,
                       dominant_conjugate, weyl_group)
from .wavefront import (WavefrontResult, arthur_wf, cross_check_arthur,
                        local_wf, steinberg_pattern, trivial_pattern)
from .weylrep import (WeylContext, WeylIrrep, ambient_context, families,
                      induce_multiplicity, j_induce, orbit_s, special_member,
                      springer_orbit, subgroup_context)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
