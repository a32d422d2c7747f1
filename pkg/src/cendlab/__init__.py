"""Exact-arithmetic workbench for conformal endomorphism algebras over
finite groups: construction, axiom verification, irreducibility decisions,
classification of irreducible subalgebras, and the affine-line and operad
companions."""

from .fields import QQ, CyclotomicField, Rat, RATIONAL_BACKEND, scalar_arithmetic
from .groups import (
    FiniteGroup,
    GSet,
    cosets,
    coset_gset,
    cyclic_group,
    dihedral_group,
    is_transitive,
    make_group,
    make_gset,
    product_group,
    regular_gset,
    subgroups,
    symmetric_group,
)
from .linalg import Mat, SubspaceBasis, kernel_partition, nullspace, rref, skolem_noether, span_closure
from .hopf import HElem, AElem, antipode, coaction, coproduct, counit, h_mult, left_shift
from .conformal import (
    Ambient,
    DiffElem,
    SubSpan,
    cend,
    check_axioms,
    cur,
    diff_product,
    h_action,
)
from .workbench import (
    ConfOperator,
    check_Tinvariance,
    construct_shift_functions,
    enrich,
    evaluate,
    fourier,
    fourier_inv,
    gamma_op,
    ideal_shape,
    is_essential,
    is_irreducible,
    is_simple,
    left_ideal_closure,
    op_product,
    phi,
    phi_inv,
    right_annihilator,
    right_ideal_closure,
    wn_span,
)
from .classify import (
    ChiFunction,
    ConfAutomorphism,
    analyze_Se,
    apply_automorphism,
    build_C,
    build_sigma,
    canonicalize,
    extract_chi,
    grading,
    theta_bridge,
    validate_chi,
)
from .weyl import PolyT, WeylElem, weyl_act, weyl_algebra_relation, weyl_nprod
from .operad import BinaryTree, LEAF, Partition, compose_partitions, pair_index, tree_compose

__version__ = "0.1.0"
