"""Morphism-extension classes of finite L-colored graphs.

Exhaustive deciders for the nine classes XY (X, Y in iso/mono/homo), the
structural classifiers for chain- and diamond-colored graphs, and a catalog of
MH-but-not-HH structures.
"""

from .catalog import (
    Constraints,
    ExampleSpec,
    enumerate_structures,
    example1,
    fig6,
    fig7,
    make_example,
    make_uniform,
    search_mh_not_hh,
)
from .classify import (
    check_chain_necessary,
    check_color1_structure,
    classify_chain,
    classify_diamond_vertex_uniform,
    find_pump_config,
    recognize_gardiner,
)
from .decider import ClassVerdict, ExtensionClass, decide, hierarchy_profile
from .morphism import HOMO, ISO, MONO, MorphismKind, PartialMap, check_morphism, enumerate_partial, extend_to_total, isomorphic
from .poset import Poset, Shape, build_poset, chain, diamond, named_poset
from .structure import NON_UNIFORM, ColoredStructure, ComponentSummary, build_structure

__version__ = "0.1.0"
