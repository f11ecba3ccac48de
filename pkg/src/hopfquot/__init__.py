"""Exact Hopf quotients of smash coproducts k[Gamma] # k^H and Hopf images of rho_Q."""

import sys

from .datum import (
    FiniteDatum,
    LatticeDatum,
    derived_consequences,
    family_datum,
    gamma33_datum,
    is_char_valued,
    validate_datum,
)
from .gamma import GammaMN, GammaMNElement, companion_matrices, finite_quotient
from .groups import FiniteGroupTable, cyclic, dihedral, is_isomorphic
from .hopf import (
    HopfSC,
    build_function_algebra,
    build_group_algebra,
    build_smash_coproduct,
    build_twisted_quotient,
    compute_character_group,
    verify_exact_sequence,
    verify_hopf_axioms,
    verify_hopf_map,
    verify_section_independence,
)
from .image import (
    HopfImageResult,
    QSpec,
    alpha,
    classify_small_index,
    compute_EQ,
    compute_NQ,
    construct_phi_and_descend,
    hopf_image,
    rho_on_element,
    rho_on_generator,
    theta_from_q,
)
from .lattice import AbelianGroupStructure, SubgroupHNF, hnf, kernel_of_unit_map, lattice_intersect, quotient_structure, snf
from .report import Report
from .scalars import INFINITE, ScalarRing, UnitGroupSpec, UnitValue

__all__ = [name for name, value in dict(globals()).items() if not name.startswith("_") and not isinstance(value, type(sys))]
