"""Neutrosophic set algebra and neutrosophic topologies on finite universes."""

from .core import (
    NSSet,
    Triple,
    Universe,
    nsset_absolute,
    nsset_complement,
    nsset_empty,
    nsset_equals,
    nsset_intersection,
    nsset_is_subset,
    nsset_union,
    to_degree,
)
from .errors import (
    EmptyArgumentError,
    InvalidDegreeError,
    InvalidUniverseError,
    MissingUniverseError,
    NotATopologyError,
    NSError,
    ParseError,
    ResourceLimitError,
    UniverseMismatchError,
)
from .family import NSFamily, family_new
from .formatting import RenderOptions, render_degree, render_family, render_set
from .naming import intersection_name, is_blackboard, name_to_blackboard, union_name
from .script import ScriptDocument, parse_script, parse_set_literal, parse_universe_literal
from .topology import (
    closure_fixpoint,
    generate_base,
    intersect_topologies,
    is_coarser,
    is_finer,
    is_intersection_closed,
    is_neutrosophic_topology,
    is_union_closed,
    topology_from_base,
    topology_from_subbase,
)

__version__ = "0.1.0"
