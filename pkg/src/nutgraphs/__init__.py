"""Nut graphs: exact kernels, constructions, seeds, synthesis and census."""

from __future__ import annotations

from ._backend import BACKEND
from .catalog import SeedEntry, all_seeds, seed
from .constructions import (
    CirculantSpec,
    FowlerSite,
    antiprism,
    antiprism_nullity,
    antiprism_propagate,
    circulant,
    cycle,
    fowler,
    fowler_lift,
    fowler_site,
    subdivide_4fold,
)
from .enumeration import CensusReport, census, enumerate_all, enumerate_regular, run_census
from .graph import (
    Graph,
    GraphError,
    canonical_form,
    degree,
    from_adjacency,
    is_regular,
    new_graph,
    parse_graph6,
    write_dot,
    write_graph6,
)
from .kernel import (
    GraphClass,
    KernelCertificate,
    NutCertificate,
    Tag,
    admissible_vector,
    check_lemma5,
    classify,
    core_vertices,
    kernel,
    nullity,
)
from .synthesis import Membership, SynthesisPlan, certify, construct_regular_nut, membership

__version__ = "0.1.0"
