"""The non-Hausdorff homotopy colimit (Grothendieck construction).

A diagram of finite posets over a finite index poset has a hocolim that is
again a finite poset: the disjoint union of the fibers, where a point of
the fiber over p sits below a point of the fiber over q whenever p <= q
and its transition image is below it.  Gluing two cones onto the circle
model this way produces a 6-point model of the 2-sphere.
"""

from finhtop import constant_map, new_poset
from finhtop.diagram import hocolim, new_diagram, restrict
from finhtop.homology import poset_homology

circle = new_poset(
    ["a", "b", "c", "d"],
    [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
)
point = new_poset(["pt"], [])

# Pushout-shaped index: 0 < 1 and 0 < 2.
index = new_poset(["0", "1", "2"], [("0", "1"), ("0", "2")])
collapse = constant_map(circle, point, "pt")
suspension = new_diagram(
    index,
    {"0": circle, "1": point, "2": point},
    {("0", "1"): collapse, ("0", "2"): collapse},
)

sphere = hocolim(suspension)
print("suspension of the circle model:", sphere.elements)
print("covers:", sorted(sphere.covers))

# Its order complex is the boundary of the octahedron, so the homology is
# that of the 2-sphere.
print("\nhomology of the 6-point sphere:")
print(poset_homology(sphere).describe())

# Restriction works fiberwise and commutes with hocolim on the nose:
# restricting to {0, 1} leaves the mapping cylinder of circle -> point.
cylinder = hocolim(restrict(suspension, ["0", "1"]))
print("\nrestriction to one cone:", cylinder.elements)
print(poset_homology(cylinder).describe())
