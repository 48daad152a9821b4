"""Verification workbench for finite Alexandroff spaces."""
from .enumeration import (
    CensusReport, TheoremReport, bell, count_uniformizable, enumerate_partitions,
    enumerate_self_maps, enumerate_topologies, verify_theorem,
)
from .functional import (
    C123Report, KPrimalFamily, OrbitStructure, SelfMap, check_c123, cyclic_map_from_partition,
    find_generating_map, functional_topology, k_primal_topology, periodic_points, theorem80_check, vf,
)
from .groups import (
    FiniteGroup, GroupWithTopology, ProductDecomposition, check_zahra10, check_zahra20,
    coset_topology, load_corpus, normal_subgroups, product_decomposition, validate_group,
)
from .space import (
    FiniteSpace, OpenSetFamily, SpecializationPreorder, from_open_sets, open_sets, preorder,
    space_from_preorder, to_dot,
)
from .uniform import (
    EntourageBase, Partition, PseudometricMatrix, QuotientSpace, UniformizabilityVerdict,
    decide_uniformizable, entourage_base_from_partition, leq_relation_is_equivalence,
    pseudometric_oracle, quotient_by_R, topology_from_entourage, verify_uniform_axioms,
)

__version__ = "0.1.0"
