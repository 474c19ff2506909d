import pytest

from finhtop import (
    DomainMismatch,
    EmptyFiber,
    FunctorialityError,
    MissingFiber,
    MissingTransition,
    NaturalityError,
    UnknownElement,
    chain,
    constant_map,
    identity,
    is_isomorphic,
    new_map,
    new_poset,
)
from finhtop.diagram import (
    DiagramMorphism,
    canonical_map,
    constant_diagram,
    cylinder_diagram,
    hocolim,
    mapping_cylinder,
    new_diagram,
    pullback,
    restrict,
)
from finhtop.homology import poset_homology
from finhtop.verify.randgen import random_diagram
from finhtop.verify.suite import point_poset


@pytest.fixture
def two():
    return new_poset(["0", "1"], [("0", "1")])


@pytest.fixture
def diamond():
    return new_poset(["p", "q1", "q2", "r"], [("p", "q1"), ("p", "q2"), ("q1", "r"), ("q2", "r")])


class TestNewDiagram:
    def test_singleton_index(self, s1):
        d = constant_diagram(point_poset(), s1)
        assert d.transitions[("pt", "pt")].is_identity()

    def test_any_map_over_two(self, two, s1, pt):
        f = constant_map(s1, pt, "pt")
        d = new_diagram(two, {"0": s1, "1": pt}, {("0", "1"): f})
        assert d.transitions[("0", "1")] == f

    def test_functoriality_error_names_triple(self, diamond, s1):
        c2 = chain(2)
        ident = identity(c2)
        shove = constant_map(c2, c2, "c1")
        with pytest.raises(FunctorialityError):
            new_diagram(
                diamond,
                {p: c2 for p in diamond.elements},
                {("p", "q1"): ident, ("p", "q2"): ident, ("q1", "r"): ident, ("q2", "r"): shove},
            )

    def test_functorial_diamond_accepted(self, diamond):
        c2 = chain(2)
        shove = constant_map(c2, c2, "c1")
        d = new_diagram(
            diamond,
            {p: c2 for p in diamond.elements},
            {("p", "q1"): shove, ("p", "q2"): shove, ("q1", "r"): shove, ("q2", "r"): shove},
        )
        # composite along either path agrees
        assert d.transitions[("p", "r")] == compose_twice(shove)

    def test_missing_fiber(self, two, pt):
        with pytest.raises(MissingFiber):
            new_diagram(two, {"0": pt}, {})

    def test_missing_transition(self, two, s1, pt):
        with pytest.raises(MissingTransition):
            new_diagram(two, {"0": s1, "1": pt}, {})

    def test_empty_fiber_rejected(self, two, pt):
        empty = new_poset([], [])
        with pytest.raises(EmptyFiber):
            new_diagram(two, {"0": empty, "1": pt}, {("0", "1"): None})

    def test_transition_on_non_cover_rejected(self, s1):
        three = chain(3)
        ident = identity(s1)
        with pytest.raises(FunctorialityError):
            new_diagram(
                three,
                {p: s1 for p in three.elements},
                {("c0", "c1"): ident, ("c1", "c2"): ident, ("c0", "c2"): ident},
            )

    def test_wrong_fiber_map(self, two, s1, pt):
        f = constant_map(s1, pt, "pt")
        with pytest.raises(DomainMismatch):
            new_diagram(two, {"0": pt, "1": pt}, {("0", "1"): f})


def compose_twice(f):
    from finhtop import compose

    return compose(f, f)


class TestHocolim:
    def test_singleton_index_is_fiber(self, s1):
        h = hocolim(constant_diagram(point_poset(), s1))
        assert len(h) == len(s1)
        assert is_isomorphic(h, s1)

    def test_point_over_two_is_chain(self, two, pt):
        d = new_diagram(two, {"0": pt, "1": pt}, {("0", "1"): identity(pt)})
        h = hocolim(d)
        assert h.elements == ("0::pt", "1::pt")
        assert h.covers == {("0::pt", "1::pt")}

    def test_pushout_sphere_shape(self, sphere_diagram):
        h = hocolim(sphere_diagram)
        assert len(h) == 6
        # frozen from the independent pre-build derivation: the order complex
        # is the octahedron boundary
        assert poset_homology(h).betti == (1, 0, 1)

    def test_size_is_fiber_sum(self):
        d = random_diagram(4, 4, 42)
        assert len(hocolim(d)) == sum(len(f) for f in d.fibers.values())

    def test_fibers_are_induced_subposets(self):
        d = random_diagram(3, 4, 43)
        h = hocolim(d)
        for p in d.index.elements:
            names = [f"{p}::{x}" for x in d.fibers[p].elements]
            sub = h.subposet(names)
            assert sub.covers == {(f"{p}::{a}", f"{p}::{b}") for (a, b) in d.fibers[p].covers}

    def test_cross_fiber_monotone(self):
        d = random_diagram(3, 3, 44)
        h = hocolim(d)
        for p in d.index.elements:
            for q in d.index.elements:
                if not d.index.leq(p, q):
                    continue
                t = d.transitions[(p, q)]
                for x in d.fibers[p].elements:
                    for y in d.fibers[q].elements:
                        assert h.leq(f"{p}::{x}", f"{q}::{y}") == d.fibers[q].leq(t(x), y)


class TestRestrict:
    def test_full_restriction(self, sphere_diagram):
        r = restrict(sphere_diagram, sphere_diagram.index.elements)
        assert r == sphere_diagram

    def test_cylinder_restricted_to_target(self, s1, pt):
        d = cylinder_diagram(constant_map(s1, pt, "pt"))
        r = restrict(d, ["1"])
        assert len(r.index) == 1
        assert r.fibers["1"] == pt

    def test_pushout_restriction_is_cylinder(self, sphere_diagram, s1, pt):
        # the pushout index restricted to {0, 1} is exactly the cylinder index
        r = restrict(sphere_diagram, ["0", "1"])
        cyl = cylinder_diagram(constant_map(s1, pt, "pt"))
        assert hocolim(r) == hocolim(cyl)

    @pytest.mark.parametrize("seed", range(5))
    def test_hocolim_of_restriction_is_subposet(self, seed):
        d = random_diagram(4, 3, 500 + seed)
        keep = d.index.elements[::2]
        sub_h = hocolim(restrict(d, keep))
        names = [
            f"{p}::{x}" for p in d.index.elements if p in keep for x in d.fibers[p].elements
        ]
        assert sub_h == hocolim(d).subposet(names)

    def test_unknown_element(self, sphere_diagram):
        with pytest.raises(UnknownElement):
            restrict(sphere_diagram, ["0", "zzz"])


class TestPullback:
    def test_identity(self, sphere_diagram):
        assert pullback(identity(sphere_diagram.index), sphere_diagram) == sphere_diagram

    def test_constant(self, sphere_diagram, s1):
        src = chain(2)
        phi = constant_map(src, sphere_diagram.index, "0")
        pb = pullback(phi, sphere_diagram)
        assert pb.fibers["c0"] == s1
        assert pb.fibers["c1"] == s1
        assert pb.transitions[("c0", "c1")].is_identity()

    def test_reindex_along_chain(self, two, s1, pt):
        d = new_diagram(two, {"0": s1, "1": pt}, {("0", "1"): constant_map(s1, pt, "pt")})
        three = chain(3)
        phi = new_map(three, two, {"c0": "0", "c1": "0", "c2": "1"})
        pb = pullback(phi, d)
        assert pb.fibers["c0"] == s1
        assert pb.fibers["c1"] == s1
        assert pb.fibers["c2"] == pt
        assert pb.transitions[("c0", "c1")].is_identity()

    def test_contravariant_functoriality(self, sphere_diagram):
        q = sphere_diagram.index
        mid = chain(2)
        psi = new_map(mid, q, {"c0": "0", "c1": "1"})
        p = chain(3)
        phi = new_map(p, mid, {"c0": "c0", "c1": "c0", "c2": "c1"})
        from finhtop import compose

        lhs = pullback(compose(phi, psi), sphere_diagram)
        rhs = pullback(phi, pullback(psi, sphere_diagram))
        assert lhs == rhs

    def test_domain_mismatch(self, sphere_diagram, s1):
        with pytest.raises(DomainMismatch):
            pullback(identity(s1), sphere_diagram)


class TestCanonicalMap:
    def test_identity_gives_identity(self, sphere_diagram):
        cm = canonical_map(identity(sphere_diagram.index), sphere_diagram)
        assert cm.is_identity()

    def test_fold(self, pt, s1):
        d = constant_diagram(pt, s1)
        src = new_poset(["x", "y"], [])
        phi = constant_map(src, pt, "pt")
        cm = canonical_map(phi, d)
        assert len(cm.source) == 2 * len(s1)
        assert len(cm.target) == len(s1)

    def test_order_preserving_by_construction(self):
        d = random_diagram(3, 3, 77)
        src = chain(3)
        from finhtop.verify.randgen import random_monotone_map
        import random

        phi = random_monotone_map(src, d.index, random.Random(5))
        cm = canonical_map(phi, d)  # constructor validates monotonicity
        assert cm.source is not None


class TestMappingCylinder:
    def test_identity_on_point(self, pt):
        cyl = mapping_cylinder(identity(pt))
        assert cyl.elements == ("0::pt", "1::pt")

    def test_s1_to_point_has_five_points(self, s1, pt):
        cyl = mapping_cylinder(constant_map(s1, pt, "pt"))
        assert len(cyl) == 5

    def test_identity_on_s1_profile(self, s1):
        cyl = mapping_cylinder(identity(s1))
        assert len(cyl) == 8
        assert poset_homology(cyl).betti == (1, 1)

    def test_cylinder_is_hocolim_over_two(self, s1, pt):
        f = constant_map(s1, pt, "pt")
        assert mapping_cylinder(f) == hocolim(cylinder_diagram(f))


class TestDiagramMorphism:
    def test_identity_morphism(self, sphere_diagram):
        DiagramMorphism(
            sphere_diagram,
            sphere_diagram,
            {p: identity(sphere_diagram.fibers[p]) for p in sphere_diagram.index.elements},
        )

    def test_naturality_violation(self, two, s1):
        c2 = chain(2)
        up = constant_map(c2, c2, "c1")
        down = constant_map(c2, c2, "c0")
        src = new_diagram(two, {"0": c2, "1": c2}, {("0", "1"): identity(c2)})
        tgt = new_diagram(two, {"0": c2, "1": c2}, {("0", "1"): up})
        with pytest.raises(NaturalityError):
            DiagramMorphism(src, tgt, {"0": identity(c2), "1": down})

    def test_index_mismatch(self, sphere_diagram, pt, s1):
        other = constant_diagram(pt, s1)
        with pytest.raises(DomainMismatch):
            DiagramMorphism(sphere_diagram, other, {})
