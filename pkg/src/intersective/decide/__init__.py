from .checks import NO, UNDECIDED, YES, InstanceReport, Verdict, evaluate, sample_no_witness, strong_check, weak_check
from .families import brandl_group, gen_brandl, gen_quadratic_triple, quadratic_triple_group
from .instance import (
    COMPUTED,
    SAMPLED,
    SUPPLIED,
    Instance,
    InstanceError,
    SuppliedGroup,
    attach_computed,
    attach_supplied,
    dedekind_consistency,
    verify_instance,
)
from .search import SearchResult, search
