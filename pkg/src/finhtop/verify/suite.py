"""Seeded instance families for every checker, and the full suite runner.

Instance construction is deterministic in (seed, instance number), so the
whole battery is reproducible byte for byte.  Families mix planted
instances (hypothesis guaranteed) with the named examples: the minimal
circle model, its non-Hausdorff suspension, and the 11-point collapsible
but non-contractible index poset W.
"""

from __future__ import annotations

import random

from ..diagram import (
    DiagramMorphism,
    PosetDiagram,
    constant_diagram,
    cylinder_diagram,
    new_diagram,
)
from ..poset import FinitePoset, PosetMap, chain, constant_map, identity, new_poset, product
from ..reduction import DEFAULT_BUDGET
from ..simplicial import (
    ComplexDiagram,
    SimplicialComplex,
    identity_simplicial,
    new_complex,
    new_complex_diagram,
)
from . import checks
from .randgen import (
    _compose_poset_steps,
    _random_poset,
    random_complex_diagram,
    random_diagram,
    random_dismantlable_poset,
    random_monotone_map,
    transitions_from_extension_steps,
)
from .report import CheckReport


def circle_poset() -> FinitePoset:
    """The minimal 4-point model of the circle."""
    return new_poset(["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])


def w_poset() -> FinitePoset:
    """The 11-point collapsible but non-contractible poset."""
    els = [str(i) for i in range(1, 12)]
    rels = [
        ("1", "5"), ("1", "6"), ("2", "5"), ("2", "7"),
        ("3", "6"), ("3", "8"), ("4", "7"), ("4", "8"),
        ("5", "9"), ("5", "10"), ("6", "9"), ("6", "10"),
        ("7", "10"), ("7", "11"), ("8", "10"), ("8", "11"),
    ]
    return new_poset(els, rels)


def point_poset() -> FinitePoset:
    return new_poset(["pt"], [])


def suspension_diagram(p: FinitePoset) -> PosetDiagram:
    """The pushout diagram pt <- p -> pt (non-Hausdorff suspension)."""
    index = new_poset(["0", "1", "2"], [("0", "1"), ("0", "2")])
    pt = point_poset()
    c = constant_map(p, pt, "pt")
    return new_diagram(index, {"0": p, "1": pt, "2": pt}, {("0", "1"): c, ("0", "2"): c})


def edge_complex() -> SimplicialComplex:
    return new_complex(["x", "y"], [["x", "y"]])


def circle_complex() -> SimplicialComplex:
    return new_complex(["a", "b", "c"], [["a", "b"], ["b", "c"], ["a", "c"]])


def _seed(master, family: str, i: int) -> str:
    return f"{master}/{family}/{i}"


# -- instance families -----------------------------------------------------------


def ubp_instance(master, i: int) -> tuple[PosetDiagram, str]:
    """Random diagram whose index has a planted up beat point "u"."""
    rng = random.Random(_seed(master, "ubp", i))
    base = _random_poset(rng, rng.randint(1, 4), 0.5, "p")
    anchor = rng.choice(base.elements)
    index = new_poset(list(base.elements) + ["u"], [("u", anchor)] + sorted(base.covers))
    ext = index.linear_extension()
    fibers = {p: _random_poset(rng, rng.randint(1, 4), 0.5, "x") for p in ext}
    steps = [
        random_monotone_map(fibers[ext[j]], fibers[ext[j + 1]], rng)
        for j in range(len(ext) - 1)
    ]
    maps = transitions_from_extension_steps(index, steps, _compose_poset_steps)
    return new_diagram(index, fibers, maps), "u"


def cylinder_instance(master, i: int) -> PosetDiagram:
    """Cylinder of a random monotone map between posets of at most 6 points."""
    rng = random.Random(_seed(master, "cyl", i))
    src = _random_poset(rng, rng.randint(1, 6), 0.5, "s")
    tgt = _random_poset(rng, rng.randint(1, 6), 0.5, "t")
    return cylinder_diagram(random_monotone_map(src, tgt, rng))


def maximum_instance(master, i: int) -> PosetDiagram:
    """Random diagram over an index with a planted maximum."""
    rng = random.Random(_seed(master, "max", i))
    base = _random_poset(rng, rng.randint(1, 4), 0.5, "p")
    rels = sorted(base.covers) + [(m, "top") for m in base.maximal_elements()]
    index = new_poset(list(base.elements) + ["top"], rels)
    ext = index.linear_extension()
    fibers = {p: _random_poset(rng, rng.randint(1, 4), 0.5, "x") for p in ext}
    steps = [
        random_monotone_map(fibers[ext[j]], fibers[ext[j + 1]], rng)
        for j in range(len(ext) - 1)
    ]
    maps = transitions_from_extension_steps(index, steps, _compose_poset_steps)
    return new_diagram(index, fibers, maps)


def homotopy_instance(master, i: int) -> DiagramMorphism:
    """Source diagram included fiberwise into its product with a 2-chain."""
    d = random_diagram(rng_size(master, i, 4), 3, _seed(master, "hlm", i))
    if i % 3 == 0:
        return DiagramMorphism(d, d, {p: identity(d.fibers[p]) for p in d.index.elements})
    two = chain(2)
    fibers = {p: product(d.fibers[p], two) for p in d.index.elements}
    maps = {}
    for (a, b) in d.index.covers:
        t = d.transitions[(a, b)]
        maps[(a, b)] = PosetMap(
            fibers[a],
            fibers[b],
            {
                f"({x},{cc})": f"({t(x)},{cc})"
                for x in d.fibers[a].elements
                for cc in two.elements
            },
        )
    target = new_diagram(d.index, fibers, maps)
    components = {
        p: PosetMap(
            d.fibers[p], fibers[p], {x: f"({x},c0)" for x in d.fibers[p].elements}
        )
        for p in d.index.elements
    }
    return DiagramMorphism(d, target, components)


def rng_size(master, i: int, bound: int) -> int:
    return random.Random(_seed(master, "size", i)).randint(1, bound)


def _planted_down_beat_index(rng: random.Random) -> tuple[FinitePoset, str, str]:
    """Index with "p" covering exactly the maximal element "q" of a random base."""
    base = _random_poset(rng, rng.randint(1, 3), 0.5, "r")
    rels = sorted(base.covers) + [(m, "q") for m in base.maximal_elements()]
    rels += [("q", "p")]
    index = new_poset(list(base.elements) + ["q", "p"], rels)
    return index, "p", "q"


def dbp_instance(master, i: int) -> tuple[PosetDiagram, str, str]:
    """Fiber at the dominator is a mapping cylinder onto the dominated fiber.

    The transition is the cylinder retraction, so every preimage of a basic
    open set is a cone.
    """
    rng = random.Random(_seed(master, "dbp", i))
    index, p, q = _planted_down_beat_index(rng)
    xp = _random_poset(rng, rng.randint(1, 3), 0.5, "x")
    if i % 3 == 0:
        xq = xp
        retraction = identity(xp)
    else:
        y = _random_poset(rng, rng.randint(1, 3), 0.5, "y")
        g = random_monotone_map(y, xp, rng)
        from ..diagram import mapping_cylinder

        xq = mapping_cylinder(g)
        assignment = {f"0::{v}": g(v) for v in y.elements}
        assignment.update({f"1::{x}": x for x in xp.elements})
        retraction = PosetMap(xq, xp, assignment)
    ext = index.linear_extension()
    fibers = {e: _random_poset(rng, rng.randint(1, 3), 0.5, "z") for e in ext}
    fibers[q] = xq
    fibers[p] = xp
    steps = []
    for j in range(len(ext) - 1):
        if ext[j + 1] == p:
            steps.append(retraction)
        else:
            steps.append(random_monotone_map(fibers[ext[j]], fibers[ext[j + 1]], rng))
    maps = transitions_from_extension_steps(index, steps, _compose_poset_steps)
    return new_diagram(index, fibers, maps), p, q


def dbpgen_instance(master, i: int) -> tuple[PosetDiagram, str, str]:
    """Transition into the removed point is a projection from a product with a chain."""
    rng = random.Random(_seed(master, "dbpgen", i))
    index, p, q = _planted_down_beat_index(rng)
    xp = _random_poset(rng, rng.randint(1, 3), 0.5, "x")
    two = chain(2)
    xq = product(xp, two)
    projection = PosetMap(
        xq, xp, {f"({x},{cc})": x for x in xp.elements for cc in two.elements}
    )
    ext = index.linear_extension()
    fibers = {e: _random_poset(rng, rng.randint(1, 3), 0.5, "z") for e in ext}
    fibers[q] = xq
    fibers[p] = xp
    steps = []
    for j in range(len(ext) - 1):
        if ext[j + 1] == p:
            steps.append(projection)
        else:
            steps.append(random_monotone_map(fibers[ext[j]], fibers[ext[j + 1]], rng))
    maps = transitions_from_extension_steps(index, steps, _compose_poset_steps)
    return new_diagram(index, fibers, maps), p, q


def up_wp_instance(master, i: int) -> tuple[PosetDiagram, str]:
    """Index point "u" whose strict up-set is the W poset or a planted cone."""
    rng = random.Random(_seed(master, "upwp", i))
    if i % 2 == 0:
        w = w_poset()
        index = new_poset(
            list(w.elements) + ["u"],
            sorted(w.covers) + [("u", m) for m in w.minimal_elements()],
        )
    else:
        # The strict up-set of "u" is the base coned off by a common top.
        base = _random_poset(rng, rng.randint(1, 4), 0.5, "p")
        rels = sorted(base.covers)
        rels += [(m, "top") for m in base.maximal_elements()]
        rels += [("u", m) for m in base.minimal_elements()]
        index = new_poset(list(base.elements) + ["top", "u"], rels)
    fiber = _random_poset(rng, rng.randint(1, 3), 0.5, "x")
    return constant_diagram(index, fiber), "u"


def cofinality_instance(master, i: int) -> tuple[PosetMap, PosetDiagram]:
    """Four planted families, all with homotopically trivial preimages."""
    rng = random.Random(_seed(master, "cof", i))
    kind = i % 4
    if kind == 0:
        d = random_diagram(rng.randint(1, 4), 3, _seed(master, "cofd", i))
        return identity(d.index), d
    if kind == 1:
        d = random_diagram(rng.randint(1, 3), 3, _seed(master, "cofd", i))
        q = d.index
        two = chain(2)
        p = product(q, two)
        phi = PosetMap(
            p, q, {f"({x},{cc})": x for x in q.elements for cc in two.elements}
        )
        return phi, d
    if kind == 2:
        single = point_poset()
        fiber = _random_poset(rng, rng.randint(1, 4), 0.5, "x")
        d = constant_diagram(single, fiber)
        return constant_map(w_poset(), single, "pt"), d
    d = random_diagram(rng.randint(1, 3), 3, _seed(master, "cofd", i))
    q = d.index
    anchor = rng.choice(q.elements)
    p = new_poset(list(q.elements) + ["u"], sorted(q.covers) + [("u", anchor)])
    phi = PosetMap(p, q, {**{x: x for x in q.elements}, "u": anchor})
    return phi, d


def thomason_instance(master, i: int) -> PosetDiagram:
    return random_diagram(rng_size(master, i, 4), 4, _seed(master, "thom", i))


def barycentric_instance(master, i: int) -> ComplexDiagram:
    return random_complex_diagram(rng_size(master, i, 3), 4, _seed(master, "bary", i))


def index_contractible_instance(master, i: int) -> ComplexDiagram:
    rng = random.Random(_seed(master, "idxc", i))
    index = random_dismantlable_poset(rng.randint(1, 5), rng)
    fiber = circle_complex() if i % 2 == 0 else edge_complex()
    return new_complex_diagram(
        index,
        {p: fiber for p in index.elements},
        {pq: identity_simplicial(fiber) for pq in index.covers},
    )


def gamma_index_instance(master, i: int) -> ComplexDiagram:
    rng = random.Random(_seed(master, "gidx", i))
    if i % 2 == 0:
        index = w_poset()
    else:
        index = random_dismantlable_poset(rng.randint(1, 5), rng)
    fiber = edge_complex() if i % 3 else circle_complex()
    return new_complex_diagram(
        index,
        {p: fiber for p in index.elements},
        {pq: identity_simplicial(fiber) for pq in index.covers},
    )


# -- runners -----------------------------------------------------------------------


def run_family(theorem: str, n: int, seed, budget: int = DEFAULT_BUDGET) -> list[CheckReport]:
    reports = []
    for i in range(n):
        if theorem == "ubp":
            d, p = ubp_instance(seed, i)
            reports.append(checks.check_ubp(d, p))
        elif theorem == "maximum":
            d = cylinder_instance(seed, i) if i % 2 == 0 else maximum_instance(seed, i)
            reports.append(checks.check_maximum(d))
        elif theorem == "homotopy":
            reports.append(checks.check_homotopy_lemma(homotopy_instance(seed, i)))
        elif theorem == "dbp":
            d, p, q = dbp_instance(seed, i)
            reports.append(checks.check_dbp(d, p, q))
        elif theorem == "dbpgen":
            d, p, q = dbpgen_instance(seed, i)
            reports.append(checks.check_dbpgen(d, p, q))
        elif theorem == "up-wp":
            d, p = up_wp_instance(seed, i)
            reports.append(checks.check_up_wp(d, p, budget))
        elif theorem == "cofinality":
            phi, d = cofinality_instance(seed, i)
            reports.append(checks.check_cofinality(phi, d, budget))
        elif theorem == "thomason":
            reports.append(checks.check_thomason_roundtrip(thomason_instance(seed, i)))
        elif theorem == "barycentric":
            reports.append(checks.check_barycentric(barycentric_instance(seed, i)))
        elif theorem == "index-contractible":
            reports.append(checks.check_index_contractible(index_contractible_instance(seed, i)))
        elif theorem == "gamma-index":
            reports.append(checks.check_gamma_index(gamma_index_instance(seed, i), budget))
        else:
            raise ValueError(f"unknown theorem id {theorem!r}")
    return reports


THEOREMS = (
    "ubp",
    "maximum",
    "homotopy",
    "dbp",
    "dbpgen",
    "up-wp",
    "cofinality",
    "thomason",
    "barycentric",
    "index-contractible",
    "gamma-index",
)

DEFAULT_COUNTS = {
    "ubp": 10,
    "maximum": 10,
    "homotopy": 8,
    "dbp": 8,
    "dbpgen": 8,
    "up-wp": 4,
    "cofinality": 8,
    "thomason": 10,
    "barycentric": 5,
    "index-contractible": 5,
    "gamma-index": 4,
}


def run_all(seed, budget: int = DEFAULT_BUDGET, counts: dict | None = None) -> list[CheckReport]:
    """The full deterministic battery, theorem by theorem."""
    counts = {**DEFAULT_COUNTS, **(counts or {})}
    reports = []
    for theorem in THEOREMS:
        reports.extend(run_family(theorem, counts[theorem], seed, budget))
    return reports
