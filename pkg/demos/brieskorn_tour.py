"""Brieskorn-Pham links: closed-form determinant against the one-vertex graph.

Run: python3 demos/brieskorn_tour.py
"""
from wpsing.bpfamily import bp_analyze, bp_graph
from wpsing.plumbing import classify_link

TRIPLES = [(2, 3, 5), (2, 3, 7), (2, 2, 2), (2, 4, 6), (3, 3, 3), (6, 10, 15), (4, 6, 9)]

print(f"{'exponents':>12} {'det':>5} {'graph':>5} {'genus':>5}  link")
for n in TRIPLES:
    r = bp_analyze(*n)
    c = classify_link(bp_graph(*n))
    kind = "ZHS" if r.is_ZHS else ("QHS" if r.is_QHS else f"rank {c.rank_H1}")
    print(f"{str(n):>12} {r.det:>5} {c.torsion_order:>5} {r.exceptional_genus:>5}  {kind}")

# the graph is a single rational-weight vertex; print one
g = bp_graph(2, 3, 7)
v = g.vertices[0]
print("\n(2,3,7): self-intersection", v.self_intersection, "quotient points", v.orders)
