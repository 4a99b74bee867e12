"""Exact combinatorics of level-l Fock spaces over the affine Lie algebra of
type A^(1): multipartitions, weights, Chevalley actions, crystals, and a
desk-scale cyclotomic Hecke algebra workbench."""

from .crystal import BoxOrder, CrystalGraph, SignatureReport, build_graph, crystal_e, crystal_f, hw_elements, signature
from .cyclotomic import Cyc, cyclotomic_polynomial
from .fock_space import (
    FockVector,
    apply_e,
    apply_f,
    apply_h,
    depth,
    in_filtration,
    primitive_basis,
    verify_pieri,
)
from .hecke_desk import (
    CentralCharacter,
    CharacterSpectrum,
    FinDimAlgebraRep,
    HeckeParams,
    a_poly,
    build_algebra,
    central_characters,
    check_relations,
    jm_elements,
    params_from_charge,
    symmetric_jm,
)
from .multipartition import (
    BoxCoord,
    Multicharge,
    Multipartition,
    add_box,
    addable_boxes,
    boxes,
    enumerate_multipartitions,
    format_multipartition,
    parse_multipartition,
    remove_box,
    removable_boxes,
    residue,
)
from .structure_analysis import (
    AxiomReport,
    check_crystal_axioms,
    check_perfect_basis,
    compare_components,
    reports_ok,
)
from .weight_lattice import (
    AffineWeight,
    fundamental,
    fundamental_of_integer,
    lambda_s,
    level,
    null_root,
    pair_coroot,
    simple_root,
    wt,
)

__all__ = [
    "AffineWeight",
    "AxiomReport",
    "BoxCoord",
    "BoxOrder",
    "CentralCharacter",
    "CharacterSpectrum",
    "CrystalGraph",
    "Cyc",
    "FinDimAlgebraRep",
    "FockVector",
    "HeckeParams",
    "Multicharge",
    "Multipartition",
    "SignatureReport",
    "a_poly",
    "add_box",
    "addable_boxes",
    "apply_e",
    "apply_f",
    "apply_h",
    "boxes",
    "build_algebra",
    "build_graph",
    "central_characters",
    "check_crystal_axioms",
    "check_perfect_basis",
    "check_relations",
    "compare_components",
    "crystal_e",
    "crystal_f",
    "cyclotomic_polynomial",
    "depth",
    "enumerate_multipartitions",
    "format_multipartition",
    "fundamental",
    "fundamental_of_integer",
    "hw_elements",
    "in_filtration",
    "jm_elements",
    "lambda_s",
    "level",
    "null_root",
    "pair_coroot",
    "params_from_charge",
    "parse_multipartition",
    "primitive_basis",
    "remove_box",
    "removable_boxes",
    "reports_ok",
    "residue",
    "signature",
    "simple_root",
    "symmetric_jm",
    "verify_pieri",
    "wt",
]
