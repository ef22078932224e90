"""Coset enumeration on the presentation families.

Run: python3 demos/group_quotients.py   (WPSING_MAX_COSETS caps the enumeration)
"""
from wpsing.fpgroups import (
    abelianization,
    conic_quotient_order,
    count_epimorphisms_to_S3,
    parity_coset_table,
    reidemeister_schreier,
    todd_coxeter,
)
from wpsing.fpgroups.builders import conic_quotient, conic_simplified, cubic_quotient, triangle

P = triangle(2, 3, 5)
res = todd_coxeter(P)
print(P, "->", res.outcome, "order", res.index, "cosets used", res.cosets_used)
print("  epimorphisms onto S3:", count_epimorphisms_to_S3(P))

print("\nconic quotients: enumerated order vs closed form")
for alpha, beta in [((1, 1, 1), (1, 1)), ((1, 1, 3), (1, 3)), ((1, 2, 1), (1, 1))]:
    full = todd_coxeter(conic_quotient(alpha, beta))
    short = todd_coxeter(conic_simplified(alpha, beta))
    print(f"  {alpha} {beta}: {full.index} / {short.index}  expected {conic_quotient_order(alpha, beta)}"
          f"  H1 = {abelianization(conic_quotient(alpha, beta))}")

G = conic_quotient((1, 1, 1), (1, 1))
for how in ("bfs", "dfs"):
    K = reidemeister_schreier(G, parity_coset_table(G, [G.generators[0]]), how)
    print(f"\nindex-2 kernel ({how}): {K.ngens} generators, {len(K.relators)} relators, H1 = {abelianization(K)}")

Q = cubic_quotient((1, 1, 1), (1, 1))
r = todd_coxeter(Q, max_cosets=20000)
print("\ncubic quotient (1,1,1),(1,1):", r.outcome, "after", r.cosets_used, "cosets;", "H1 =", abelianization(Q))
