"""Distance domination versus dominating collections on a long star.

One centre reaches everything within distance 2, but covering the graph with
connected pieces of at most two vertices needs one piece per arm.
"""
from hic import distance_domination_number, set_domination_number, strong_domination_number
from hic.fixtures import LONG_STAR_LABELS, long_star

G = long_star()
name = lambda ws: [[LONG_STAR_LABELS[v] for v in w] for w in ws]

g = distance_domination_number(G, 2)
print("gamma_2 =", g.value, "witness", name(g.witness))

w = set_domination_number(G, 2)
print("omega_2 =", w.value, "witness", name(w.witness))

s = strong_domination_number(G)
print("Gamma0  =", s.value, "witness", name(s.witness))
