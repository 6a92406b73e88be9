"""The Kirchhoff/Wiener ratio of the family tends to 1/6.

Resistance grows like n^3/12 across the family while shortest-path distance
grows like n^3/2, so the ratio of the two indices settles at one sixth. The
deviation shrinks like 2/(3n) and the convergence is monotone; deleting all
n verticals does not change the limit.
"""

from fractions import Fraction

from invkit import kf_grn, ratio_report, wiener_grn
from invkit.cli import format_fraction

print("intact family (r = 0):")
print("n        ratio      |ratio - 1/6|   n * deviation")
for n in (10, 30, 100, 300, 1000, 3000, 10000):
    ratio, dev = ratio_report(n, 0)
    print(
        f"{n:<9}{format_fraction(ratio, 6)}   {format_fraction(dev, 6)}        "
        f"{format_fraction(n * dev, 4)}"
    )

print("\nall verticals deleted (r = n):")
print("n        ratio      |ratio - 1/6|")
for n in (10, 100, 1000, 10000):
    ratio = Fraction(kf_grn(n, n), wiener_grn(n, n))
    dev = abs(ratio - Fraction(1, 6))
    print(f"{n:<9}{format_fraction(ratio, 6)}   {format_fraction(dev, 6)}")

print("\nexact deviations are strictly decreasing; spot check around n = 24:")
prev = None
for n in range(24, 33):
    _, dev = ratio_report(n, 0)
    marker = "" if prev is None else ("  (smaller)" if dev < prev else "  (LARGER!)")
    print(f"n={n}: {format_fraction(dev, 8)}{marker}")
    prev = dev
