"""Round trip between poset diagrams and complex diagrams.

The order-complex functor K turns a diagram of posets into a diagram of
simplicial complexes; the opposite face-poset functor turns it back.  The
hocolim of the round-tripped diagram has the same homology as the hocolim
of the original, which is the computable shadow of the equivalence between
the two constructions.  Verified here on the sphere example and a batch of
random diagrams.
"""

from finhtop import constant_map, new_poset
from finhtop.diagram import hocolim, new_diagram
from finhtop.homology import poset_homology
from finhtop.simplicial import lift_face_poset_op, lift_order_complex
from finhtop.verify import check_thomason_roundtrip, random_diagram

circle = new_poset(
    ["a", "b", "c", "d"],
    [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
)
point = new_poset(["pt"], [])
index = new_poset(["0", "1", "2"], [("0", "1"), ("0", "2")])
collapse = constant_map(circle, point, "pt")
suspension = new_diagram(
    index,
    {"0": circle, "1": point, "2": point},
    {("0", "1"): collapse, ("0", "2"): collapse},
)

lifted = lift_face_poset_op(lift_order_complex(suspension))
print("fiber sizes after lifting:",
      {p: len(lifted.fibers[p]) for p in lifted.index.elements})

direct = poset_homology(hocolim(suspension))
roundtrip = poset_homology(hocolim(lifted))
print("direct profile:   ", direct.betti)
print("roundtrip profile:", roundtrip.betti)

# The checker packages the comparison, and holds across random diagrams.
print("\nchecker on the sphere:", check_thomason_roundtrip(suspension).conclusion_status)
for i in range(10):
    report = check_thomason_roundtrip(random_diagram(4, 4, f"demo-thom-{i}"))
    assert report.conclusion_status == "Verified"
print("10 random diagrams: all round trips verified")
