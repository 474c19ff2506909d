"""Finite posets as finite topological spaces.

A finite poset is a finite T0 space: open sets are the down-sets, and a
map between posets is continuous exactly when it is order preserving.
This demo builds a few small spaces, inspects their basic open sets, and
reduces them with beat points (Stong's core).
"""

from finhtop import chain, new_poset
from finhtop.reduction import core, is_contractible, is_down_beat, is_up_beat

# The minimal finite model of the circle: two bottom points, two top
# points, everything comparable across levels.
circle = new_poset(
    ["a", "b", "c", "d"],
    [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
)

print("circle model:", circle)
print("covers:", sorted(circle.covers))
print("minimal open set U_c:", circle.down_set("c").elements)
print("closure F_a:", circle.up_set("a").elements)

# Beat points are removable by strong deformation retractions.  A chain
# dismantles all the way down to a point; the circle model has no beat
# points at all, so it is its own core.
three = chain(3)
print("\nchain(3) middle point is a beat point:",
      is_up_beat(three, "c1") and is_down_beat(three, "c1"))

chain_core, sequence = core(three)
print("chain(3) core:", chain_core.elements, "after", len(sequence), "removals")

circle_core, _ = core(circle)
print("circle core size:", len(circle_core), "(it is its own core)")
print("circle contractible?", is_contractible(circle))

# A cone (anything with a maximum or minimum) is always contractible.
cone = new_poset(["m", "x", "y"], [("m", "x"), ("m", "y")])
print("cone contractible?", is_contractible(cone))

# Subposets and duality behave like the topology suggests.
print("\ncircle minus a top point:", circle.without("c").covers)
print("opposite of chain(3):", sorted(three.opposite().covers))
print("a linear extension of the circle model:", circle.linear_extension())
