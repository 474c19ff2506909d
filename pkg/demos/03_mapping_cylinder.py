"""The non-Hausdorff mapping cylinder collapses onto its target.

For any order-preserving f the cylinder B_f is the hocolim of f over the
chain 0 < 1.  Whenever the index poset has a maximum, the hocolim strongly
collapses onto the top fiber: the checker replays that collapse point by
point and certifies every removal is a beat point.
"""

import random

from finhtop import constant_map, new_poset
from finhtop.diagram import mapping_cylinder, cylinder_diagram
from finhtop.reduction import is_contractible
from finhtop.verify import check_maximum, random_monotone_map, random_poset

circle = new_poset(
    ["a", "b", "c", "d"],
    [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
)
point = new_poset(["pt"], [])

cylinder = mapping_cylinder(constant_map(circle, point, "pt"))
print("cylinder of circle -> point:", cylinder.elements)
print("contractible?", is_contractible(cylinder))

report = check_maximum(cylinder_diagram(constant_map(circle, point, "pt")))
print("\nchecker verdict:", report.conclusion_status)
print("all removals are beat points:", report.evidence["all_steps_beat"])
for step in report.evidence["sequence"]:
    print("  removed", step["element"], "as", step["kind"])

# The same collapse works for any random monotone map.
rng = random.Random(0)
source = random_poset(5, 0.5, "demo-src")
target = random_poset(4, 0.5, "demo-tgt")
f = random_monotone_map(source, target, rng)
report = check_maximum(cylinder_diagram(f))
print("\nrandom cylinder:", report.conclusion_status,
      "with", len(report.evidence["sequence"]), "beat removals")
