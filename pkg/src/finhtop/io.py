"""JSON serialization of posets, complexes, maps and diagrams, plus DOT export.

Serialization is canonical: elements in stored order, covers sorted
lexicographically, objects dumped with sorted keys.  Identical values
serialize to identical bytes, which the deterministic-report guarantees
rely on.  Loading accepts '::' in identifiers so that serialized composite
constructions (hocolim output) round-trip.
"""

from __future__ import annotations

import json

from .diagram import PosetDiagram, DiagramMorphism
from .homology import HomologyProfile
from .poset import FinitePoset, PosetMap, poset_from_relations_unchecked_names
from .simplicial import ComplexDiagram, SimplicialComplex, SimplicialMap


# -- posets -------------------------------------------------------------------


def poset_to_obj(p: FinitePoset) -> dict:
    return {
        "elements": list(p.elements),
        "relations": sorted([a, b] for (a, b) in p.covers),
    }


def poset_from_obj(obj) -> FinitePoset:
    return poset_from_relations_unchecked_names(
        obj["elements"], [tuple(r) for r in obj["relations"]]
    )


def map_to_obj(f: PosetMap) -> dict:
    return {
        "source": poset_to_obj(f.source),
        "target": poset_to_obj(f.target),
        "assignment": dict(sorted(f.assignment.items())),
    }


def map_from_obj(obj) -> PosetMap:
    return PosetMap(
        poset_from_obj(obj["source"]),
        poset_from_obj(obj["target"]),
        obj["assignment"],
    )


# -- complexes ------------------------------------------------------------------


def complex_to_obj(k: SimplicialComplex) -> dict:
    return {
        "vertices": list(k.vertices),
        "facets": [list(f) for f in k.facets],
    }


def complex_from_obj(obj) -> SimplicialComplex:
    return SimplicialComplex(obj["vertices"], obj["facets"])


# -- diagrams -------------------------------------------------------------------


def _cover_key(p: str, q: str) -> str:
    return f"{p}->{q}"


def _split_cover_key(key: str) -> tuple[str, str]:
    p, _, q = key.partition("->")
    return p, q


def diagram_to_obj(d: PosetDiagram) -> dict:
    return {
        "index": poset_to_obj(d.index),
        "fibers": {p: poset_to_obj(d.fibers[p]) for p in d.index.elements},
        "transitions": {
            _cover_key(p, q): dict(sorted(d.transitions[(p, q)].assignment.items()))
            for (p, q) in sorted(d.index.covers)
        },
    }


def diagram_from_obj(obj) -> PosetDiagram:
    index = poset_from_obj(obj["index"])
    fibers = {p: poset_from_obj(o) for p, o in obj["fibers"].items()}
    maps = {}
    for key, assignment in obj["transitions"].items():
        p, q = _split_cover_key(key)
        maps[(p, q)] = PosetMap(fibers[p], fibers[q], assignment)
    return PosetDiagram(index, fibers, maps)


def complex_diagram_to_obj(c: ComplexDiagram) -> dict:
    return {
        "index": poset_to_obj(c.index),
        "fibers": {p: complex_to_obj(c.fibers[p]) for p in c.index.elements},
        "transitions": {
            _cover_key(p, q): dict(sorted(c.transitions[(p, q)].assignment.items()))
            for (p, q) in sorted(c.index.covers)
        },
    }


def complex_diagram_from_obj(obj) -> ComplexDiagram:
    index = poset_from_obj(obj["index"])
    fibers = {p: complex_from_obj(o) for p, o in obj["fibers"].items()}
    maps = {}
    for key, assignment in obj["transitions"].items():
        p, q = _split_cover_key(key)
        maps[(p, q)] = SimplicialMap(fibers[p], fibers[q], assignment)
    return ComplexDiagram(index, fibers, maps)


def morphism_to_obj(alpha: DiagramMorphism) -> dict:
    return {
        "source": diagram_to_obj(alpha.source),
        "target": diagram_to_obj(alpha.target),
        "components": {
            p: dict(sorted(alpha.components[p].assignment.items()))
            for p in alpha.source.index.elements
        },
    }


def morphism_from_obj(obj) -> DiagramMorphism:
    source = diagram_from_obj(obj["source"])
    target = diagram_from_obj(obj["target"])
    components = {
        p: PosetMap(source.fibers[p], target.fibers[p], a)
        for p, a in obj["components"].items()
    }
    return DiagramMorphism(source, target, components)


# -- homology -------------------------------------------------------------------


def profile_to_obj(h: HomologyProfile) -> dict:
    return {
        "betti": list(h.betti),
        "torsion": [list(t) for t in h.torsion],
    }


def profile_from_obj(obj) -> HomologyProfile:
    return HomologyProfile.make(obj["betti"], [tuple(t) for t in obj["torsion"]])


# -- text/bytes -----------------------------------------------------------------


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def to_dot(p: FinitePoset) -> str:
    """Hasse diagram in DOT, covers only, nodes ranked by poset height."""
    heights = p._heights()
    by_height: dict[int, list[str]] = {}
    for e, h in zip(p.elements, heights):
        by_height.setdefault(h, []).append(e)
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for h in sorted(by_height):
        row = " ".join(f'"{e}";' for e in by_height[h])
        lines.append(f"  {{ rank=same; {row} }}")
    for (a, b) in sorted(p.covers):
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
