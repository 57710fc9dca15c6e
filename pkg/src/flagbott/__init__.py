"""Borel-Weil-Bott cohomology and intersection theory on flag varieties G/B."""

from .cohomology import AllVanish, Concentrated, bott, euler_characteristic, weyl_dimension
from .construct import (
    Certificate,
    SignPattern,
    candidate_L,
    construct_counterexample,
    find_polarization,
    paper_recipe_H,
    sign_pattern,
)
from .intersection import (
    DivisorClass,
    SchubertClass,
    chevalley_top_intersection,
    degree,
    is_globally_generated,
    is_very_ample,
    top_intersection,
)
from .rootsystem import Root, RootSystem, Weight, build_root_system, pair, parse_group, parse_weight, rho
from .weyl import WeylElement, act, dot, element_from_word, enumerate_weyl, reflect

__version__ = "0.1.0"
