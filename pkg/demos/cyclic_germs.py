"""Determinants of z^k = x^a + y^b as k varies, and the period search.

Run: python3 demos/cyclic_germs.py
"""
from wpsing.leyomdin import conjecture_scan, cyclic_germ_det

for a, b in [(2, 3), (2, 5), (3, 4)]:
    dets = [cyclic_germ_det(a, b, k).det for k in range(1, 25)]
    scan = conjecture_scan(a, b, 60)
    print(f"x^{a} + y^{b}: {dets}")
    print(f"   period {scan.period}, lcm(a,b) = {scan.lcm}, verdict {scan.verdict}")
