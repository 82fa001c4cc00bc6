from .catalog import dicyclic_group, direct_product, small_group_catalog
from .frobenius import (
    CatalogEntry,
    FrobeniusStructure,
    IntransitiveGroupError,
    affine_frobenius,
    frobenius_catalog,
    frobenius_structure,
    is_malnormal,
    is_nilpotent,
    lemma24_check,
)
from .group import (
    DEFAULT_ORDER_CAP,
    NotASubgroupError,
    PermGroup,
    alternating_group,
    closure,
    cyclic_group,
    dihedral_group,
    restrict,
    symmetric_group,
)
from .perm import Perm, PermParseError, format_cycles, parse_cycles, parse_generators
from .subgroups import (
    DEFAULT_ENUM_CAP,
    CoverReport,
    MinCover,
    SubgroupClass,
    cover_bound,
    covers,
    joint_core,
    joint_core_trivial,
    min_cover_m,
    subgroup_classes,
)
