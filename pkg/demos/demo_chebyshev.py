"""Walkthrough: the Chebyshev polynomial z^2 - 2, end to end.

Its Julia set is the segment [-2, 2].  The points -2 and 2 form a finite
restricted orbit of type 1 sitting inside the Julia set, which is what
makes the Julia quotient a circle algebra tensored with 2x2 matrices.
"""

from ratmap.report import parse_map, run_analysis

doc = {"numerator": ["1", "0", "-2"], "denominator": ["1"]}
report = run_analysis(parse_map(doc))
data = report.data

print("critical points:", [c["point"] for c in data["critical_points"]])
print("fixed points and their multipliers:")
for c in data["cycles"]:
    if c["period"] == 1:
        print(f"   {c['points'][0]:>4}: multiplier {c['multiplier']}, {c['classification']}")

print()
print("exposed orbits (finite restricted orbits):")
for o in data["exposed"]["orbits"]:
    where = "Julia" if o["in_julia"] else "Fatou"
    print(f"   {{{', '.join(o['points'])}}}  type {o['type']}  ({where})")

print()
print("the Julia-side extension:")
print("  ", data["algebra"]["julia"]["text"])
print("   quotient normalizes to:", data["algebra"]["julia"]["quotient_normal_text"])

print()
print("the single stable region (basin of infinity):")
print("  ", data["algebra"]["fatou_regions"][0]["extension"]["text"])

print()
print("full text report:")
print(report.to_text())
