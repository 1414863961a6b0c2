"""Build chordal graphs whose 2- and 3-independence complexes are chosen wedges."""
from hic import chordal_homotopy_type, synthesize_chordal, WedgeSpec
from hic.homology import reduced_homology
from hic.complex import build_ind_complex

for r, summands in [(2, ((1, 1), (2, 2))), (3, ((2, 1), (1, 2))), (2, ((1, 3),))]:
    res = synthesize_chordal(WedgeSpec(r, summands))
    T, _ = chordal_homotopy_type(res.graph, r)
    line = f"r={r} {summands}: n={res.graph.n} m={res.graph.m} expected {res.expected}, engine {T}"
    if res.graph.n <= 14:
        line += f", oracle {reduced_homology(build_ind_complex(res.graph, r))}"
    print(line)
