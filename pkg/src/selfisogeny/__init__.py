"""Cyclic self-isogenies of CM elliptic curves C/(Z + Z tau), in exact arithmetic."""

from .arith import IntMatrix2, InvalidInput, QElem, qfield_mul, rational_normalize
from .curves import curves_with_self_isogeny, prime_count_check
from .fricke import (
    FrickeClassification,
    classify_fricke_n,
    enumerate_fixed_points,
    fricke_test,
    msquared_test,
    nu,
)
from .isogeny import (
    IsogenyMatrix,
    SubgroupGen,
    build_matrix,
    degree,
    find_pairs,
    has_self_isogeny,
    subgroup_generator,
)
from .lattice import Lattice, lattice_hnf, verify_self_isogeny_oracle
from .qforms import QuadForm, class_number, reduced_forms
from .smith import SmithDecomp, smith_decompose
from .tau import (
    TauPoly,
    UnimodularTransform,
    discriminant,
    is_isomorphic,
    parse_tau,
    reduce_to_G,
    transform_tau,
)

__version__ = "0.1.0"
