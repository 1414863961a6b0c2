"""Walk the decomposition tree the chordal engine builds for a 13-vertex graph.

Every split node picks a simplicial vertex, deletes the closed neighbourhood
of each r-support and recurses; the answer is the wedge of r-fold suspensions.
"""
from hic import build_ind_complex, chordal_homotopy_type, reduced_homology
from hic.fixtures import FIG2_LABELS, reverse_construction

G, _ = reverse_construction()
T, trace = chordal_homotopy_type(G, 2)


def show(node, labels, depth=0):
    pad = "  " * depth
    print(f"{pad}{node.kind:<15} n={node.n:<2} -> {node.result}")
    if node.kind == "split":
        print(f"{pad}  vertex {labels[node.vertex]}")
        for S, child in zip(node.supports, node.children):
            print(f"{pad}  support {[labels[x] for x in S]}")
            show(child, [str(i) for i in range(child.n)], depth + 2)


show(trace.root, FIG2_LABELS)
print("nodes:", trace.nodes, "memo hits:", trace.memo_hits)
print("engine:", T)
print("oracle:", reduced_homology(build_ind_complex(G, 2)))
