"""r-independence complexes of graphs: homology, domination, chordal homotopy types."""
from .chordal import chordal_homotopy_type, decompose_at_vertex, low_degree_condition
from .complex import BuildLimits, SimplicialComplex, build_ind_complex, euler_characteristic
from .domination import (
    distance_domination_number,
    domination_number,
    enumerate_connected_sets,
    set_domination_number,
    strong_domination_number,
    supports,
)
from .generators import GeneratorSpec, generate_graph
from .graph import Graph, chordality, parse_graph, serialize_graph, simplicial_vertices
from .homology import HomologyProfile, betti_mod_p, homology_of_type, reduced_homology
from .homotopy import CONTRACTIBLE, EMPTY, HomotopyType, sphere, suspend, wedge, wedge_combine
from .synthesis import WedgeSpec, expected_wedge, synthesize_chordal

__version__ = "0.1.0"
