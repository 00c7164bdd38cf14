"""Finite hyperstructure tables: classification, nuclei, constructions, search."""

from .axioms import (
    IdentityScan,
    StructureProfile,
    WitnessedBool,
    check_associativity,
    check_commutativity,
    check_identity,
    check_polygroup,
    check_polyquasigroup,
    check_reproduction,
    check_tallini,
    check_weak_associativity,
    classify,
    derive_inverse,
)
from .codec import parse_group, parse_structure, serialize_structure
from .core import (
    MAX_ORDER,
    DivisionPair,
    HyperTable,
    Members,
    StructureBundle,
    derive_divisions,
    elements_of,
    iter_bits,
    mask_of,
    validate_table,
)
from .groups import (
    GroupTable,
    cyclic_group,
    dihedral_group,
    direct_product,
    double_coset_algebra,
    from_cayley_table,
    quaternion_group,
    quotient_hypergroup,
    small_group_catalog,
    subgroup_mask,
    symmetric_group,
)
from .nuclei import (
    NucleusReport,
    TheoremReport,
    classical_nuclei,
    compute_nucleus_report,
    nucleus,
    nucleus_bruteforce,
    nucleus_intersection,
    verify_containment_theorems,
)
from .search import SearchSpec, random_hypergroupoid, search_structures

__version__ = "0.1.0"
