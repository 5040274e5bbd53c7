"""Walkthrough: a declared Siegel disk.

Whether an irrationally indifferent cycle carries a Siegel disk or a
Cremer point is not decidable at this kind of numerical scale, so rotation
domains enter by declaration.  For the golden rotation number the map
e^{2 pi i theta} z + z^2 is the classical Siegel example; declaring it
produces a region whose ideal is the stabilized irrational rotation
algebra stretched along a line.
"""

import math

from ratmap.report import AnalysisConfig, parse_map, run_analysis
from ratmap.scalars import scalar_str

theta = (math.sqrt(5) - 1) / 2
lam = complex(math.cos(2 * math.pi * theta), math.sin(2 * math.pi * theta))
doc = {
    "numerator": ["1.0", scalar_str(lam), "0.0"],
    "denominator": ["1.0"],
}

print("without a declaration the cycle is flagged, no region is built:")
plain = run_analysis(parse_map(doc)).data
for w in plain["warnings"]:
    if w["code"] == "siegel-cremer-undeclared":
        print("   warning:", w["message"])
print("   regions:", [reg["core_type"]["kind"] for reg in plain["atlas"]["regions"]])

print()
print("with the declaration:")
cfg = AnalysisConfig(
    declarations=[{
        "kind": "siegel",
        "anchor": "0.0",
        "theta": theta,
        "theta_label": "(sqrt(5)-1)/2",
    }]
)
data = run_analysis(parse_map(doc), cfg).data
for reg in data["atlas"]["regions"]:
    print("   region:", reg["core_type"]["kind"], "theta =", reg["core_type"]["theta"])
for rs in data["algebra"]["fatou_regions"]:
    print("  ", rs["extension"]["text"])
print()
print("the free critical orbit stays honestly unresolved:")
for w in data["warnings"]:
    if w["code"] == "critical-fate-unresolved":
        print("   warning:", w["message"])
