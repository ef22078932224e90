"""Push the tritangent conic through weighted Cremona maps and through Kummer covers.

Run: python3 demos/cremona_conics.py
"""
from wpsing.poly import cremona_push, kummer_pull, strip_monomial_factor, tritangent_conic, wdegree_decompose
from wpsing.wproj import normalize_weight

conic = tritangent_conic()
print("conic:", conic)

for alpha, beta in [((1, 1, 1), (1, 1)), ((1, 2, 3), (3, 1)), ((3, 2, 5), (1, 4))]:
    F = cremona_push(conic, alpha, beta)
    F, mono = strip_monomial_factor(F)
    A = alpha[0] * alpha[1] + alpha[2]
    degs = sorted(wdegree_decompose(F, alpha))
    print(f"\nalpha={alpha} beta={beta}  A={A}  weighted degrees {degs}  stripped {mono}")
    print("  ", F)

for d in [(2, 3, 5), (1, 1, 3)]:
    G = kummer_pull(conic, d)
    w = (d[1] * d[2], d[0] * d[2], d[0] * d[1])
    nz = normalize_weight(w)
    print(f"\nKummer cover d={d}: weight {w}, pairwise gcds {nz.d}")
    print("  ", G)
