"""A collapsible but non-contractible index poset.

The 11-point poset W has no beat points at all (it is its own core), yet
it collapses to a point through weak points, so its order complex is
contractible.  Index posets like this are exactly where gamma-point
removal takes over from beat-point removal: a diagram of complexes over W
with well-behaved transitions still has the homotopy type of a fiber.
"""

from finhtop.diagram import constant_diagram
from finhtop.homology import poset_homology
from finhtop.reduction import collapse_search, core, is_contractible, triviality_oracle
from finhtop.simplicial import identity_simplicial, new_complex, new_complex_diagram
from finhtop.verify import check_cofinality, check_gamma_index
from finhtop.verify.suite import circle_poset, point_poset, w_poset
from finhtop import constant_map

w = w_poset()
print("W has", len(w), "points and", len(w.covers), "covers")

w_core, _ = core(w)
print("core size:", len(w_core), "-> not contractible:", not is_contractible(w))

sequence = collapse_search(w)
print("but a collapse sequence exists:")
for element, kind in sequence.steps:
    print("  remove", element, "as a", kind, "point")

print("homology of W:", poset_homology(w).describe())
print("oracle verdict:", triviality_oracle(w).verdict)

# Diagram of complexes indexed by W, identity transitions: the hocolim has
# the homotopy type of any fiber even though W is not dismantlable.
edge = new_complex(["x", "y"], [["x", "y"]])
diagram = new_complex_diagram(
    w,
    {p: edge for p in w.elements},
    {pq: identity_simplicial(edge) for pq in w.covers},
)
report = check_gamma_index(diagram)
print("\ngamma-index checker over W:", report.conclusion_status)
print("hocolim profile:", report.evidence["profile_hocolim"]["betti"],
      "= fiber profile:", report.evidence["profile_fiber"]["betti"])

# W is also cofinal over a point: preimages of basic closed sets are all
# of W, which is homotopically trivial.
single = point_poset()
cofinal = check_cofinality(
    constant_map(w, single, "pt"), constant_diagram(single, circle_poset())
)
print("\ncofinality of W -> point:", cofinal.conclusion_status)
print("down phase removals:", len(cofinal.evidence["mixed_down_phase"]))
