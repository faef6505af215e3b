"""Exact representation groups of Lie superalgebras with Clifford degree shifts."""

from .exactnum import (ExactMatrix, FieldTag, GaussianRational, IntegerMatrix, invariant_factors,
                       minor_gcd_invariants, smith_normal_form)
from .algebra import CliffordSignature, LieSuperAlgebra, RelationError, ShiftedContext, check_jacobi
from .supermodule import (SuperModule, conjugate, degrade, delta, diag_lift, direct_sum, forget_grading,
                          isomorphic, iso_test, parity_reverse, project_even, regrade, tensor_modules)
from .classify import (NotRealIrreducible, classify_irreducible, clifford_irreducibles, composition_factors,
                       shift_irreducibles)
from .kring import (ClassificationError, IrreducibleRegistry, RegistryProvider, abs_table, build_sequence,
                    build_six_real, check_exactness, class_of, kgroups, point_provider, q1_provider, sr_group)
from .specfile import SpecError, builtin_spec, parse_spec, serialize_spec

__all__ = [
    "ExactMatrix", "FieldTag", "GaussianRational", "IntegerMatrix", "invariant_factors", "minor_gcd_invariants",
    "smith_normal_form", "CliffordSignature", "LieSuperAlgebra", "RelationError", "ShiftedContext",
    "check_jacobi", "SuperModule", "conjugate", "degrade", "delta", "diag_lift", "direct_sum", "forget_grading",
    "isomorphic", "iso_test", "parity_reverse", "project_even", "regrade", "tensor_modules",
    "NotRealIrreducible", "classify_irreducible", "clifford_irreducibles", "composition_factors",
    "shift_irreducibles", "ClassificationError", "IrreducibleRegistry", "RegistryProvider", "abs_table",
    "build_sequence", "build_six_real", "check_exactness", "class_of", "kgroups", "point_provider", "q1_provider",
    "sr_group",
    "SpecError", "builtin_spec", "parse_spec", "serialize_spec",
]
