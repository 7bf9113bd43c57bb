"""Strong and weak saturated barbed bisimilarity for finite ccp programs."""
from .equivalence import (
    Partition,
    Verdict,
    check_strong,
    check_weak,
    check_weak_milner,
    derives,
    dominates_wrt,
    extend_for_redundancy,
    initial_partition_strong,
    initial_partition_weak,
    refine_ccp,
    refine_standard,
)
from .errors import CcpError, LoadError, MissingDerivedState, ParseError, StateCapExceeded
from .lattice import ConstraintSystem, atoms_lattice, bounds_lattice, table_lattice
from .oracle import oracle_strong, oracle_weak, run_oracle
from .saturation import saturate_lub, saturate_milner
from .semantics import (
    Lts,
    LtsKind,
    Transition,
    labeled_steps,
    reachable,
    reduce,
    satisfies_barb,
    weak_barb_profile,
    weak_barb_set,
)
from .specfile import Spec, load_spec, parse_spec
from .syntax import Ask, Configuration, Par, Stop, Sum, Tell, parse_config, parse_term, show

__version__ = "0.1.0"
