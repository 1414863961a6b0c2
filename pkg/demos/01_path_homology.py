"""Homology of Ind_r(P_n) for small paths, computed by brute force.

Spheres show up exactly when n+1 is 0 or 1 modulo r+2.
"""
from hic import build_ind_complex, reduced_homology
from hic.generators import path_graph

for r in (1, 2, 3):
    print(f"r = {r}")
    for n in range(1, 13):
        K = build_ind_complex(path_graph(n), r)
        H = reduced_homology(K)
        print(f"  P_{n:<2}  faces={len(K):>5}  {H}")
