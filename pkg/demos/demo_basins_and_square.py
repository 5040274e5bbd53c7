"""Walkthrough: basins, bookkeeping classes, and the square of six extensions.

z^2 - 1/2 (exact coefficients) has an attracting fixed point whose basin
holds the critical point 0, plus the superattracting basin of infinity.
The example shows how the class partition feeds the 3x3 square and where
each corner algebra comes from.
"""

from ratmap.report import parse_map, run_analysis

report = run_analysis(parse_map({"numerator": ["1", "0", "-1/2"], "denominator": ["1"]}))
data = report.data

print("stable regions:")
for reg in data["atlas"]["regions"]:
    core = reg["core_type"]
    extra = ""
    if core["multiplier"]:
        extra = f", multiplier {core['multiplier']}"
    print(f"   region {reg['id']}: {core['kind']}{extra}")
    for rec in reg["critical_records"]:
        print(f"      record {rec['point']}, pre-periodic: {rec['preperiodic']},"
              f" v = {rec['asymptotic_valency']}")

print()
print("class partition:")
print("   periodic classes (iota_p):",
      [c["representative"] for c in data["atlas"]["iota_p"]])
print("   critical classes (iota_c):",
      [c["representative"] for c in data["atlas"]["iota_c"]])

print()
print("per-region extensions:")
for rs in data["algebra"]["fatou_regions"]:
    print("  ", rs["extension"]["text"])

print()
print("the square of six extensions:")
print(data["algebra"]["six_square"]["text"])

print()
print("primitive-ideal families over the non-exposed classes:")
for e in data["primitive_ideals"]["entries"]:
    if e["co_support"]["kind"] == "orbit_plus_julia":
        par = e["parametrization"]
        print(f"   {e['label']}: dual of {par['group']} ({par['cardinality']})")
