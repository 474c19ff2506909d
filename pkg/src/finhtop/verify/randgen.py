"""Seeded random generators for posets, maps, complexes and diagrams.

Everything is reproducible from the seed.  Diagram transitions are built by
composing one random monotone map per consecutive pair of a linear
extension, so functoriality holds by construction instead of by rejection.
"""

from __future__ import annotations

import random
from itertools import combinations

from ..diagram import PosetDiagram
from ..poset import FinitePoset, PosetMap, new_poset
from ..simplicial import ComplexDiagram, SimplicialComplex, SimplicialMap


def _rng(seed) -> random.Random:
    return random.Random(seed)


def _random_poset(rng: random.Random, n: int, density: float, prefix: str) -> FinitePoset:
    els = [f"{prefix}{i}" for i in range(n)]
    rels = [
        (els[i], els[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < density
    ]
    return new_poset(els, rels)


def random_poset(n: int, density: float, seed, prefix: str = "x") -> FinitePoset:
    """Random poset on n elements; density 0 gives an antichain, 1 a chain."""
    return _random_poset(_rng(seed), n, density, prefix)


def random_monotone_map(p: FinitePoset, q: FinitePoset, rng: random.Random) -> PosetMap:
    """Uniform-ish random order-preserving map, found by shuffled backtracking.

    Constant maps are always monotone, so the search cannot fail.
    """
    ext = p.linear_extension()
    assign: dict[str, str] = {}

    def backtrack(i: int) -> bool:
        if i == len(ext):
            return True
        x = ext[i]
        floors = [assign[z] for z in p.covers_below(x)]
        cands = [y for y in q.elements if all(q.leq(f, y) for f in floors)]
        rng.shuffle(cands)
        for y in cands:
            assign[x] = y
            if backtrack(i + 1):
                return True
            del assign[x]
        return False

    if not backtrack(0):
        raise AssertionError("monotone map search failed; this cannot happen")
    return PosetMap(p, q, assign)


def random_poset_map(source_size: int, target_size: int, seed, density: float = 0.5) -> PosetMap:
    rng = _rng(seed)
    p = _random_poset(rng, source_size, density, "s")
    q = _random_poset(rng, target_size, density, "t")
    return random_monotone_map(p, q, rng)


def _compose_poset_steps(f: PosetMap, g: PosetMap) -> PosetMap:
    return PosetMap(f.source, g.target, {x: g(f(x)) for x in f.source.elements})


def transitions_from_extension_steps(index: FinitePoset, step_maps, compose_step):
    """Cover transitions by composing per-step maps along a linear extension.

    step_maps[i] maps the fiber of the i-th extension element to the fiber
    of the (i+1)-st; every transition is a composite of the same global
    chain of maps, so functoriality holds by construction.
    """
    ext = index.linear_extension()
    pos = {e: i for i, e in enumerate(ext)}
    maps = {}
    for (a, b) in index.covers:
        m = step_maps[pos[a]]
        for i in range(pos[a] + 1, pos[b]):
            m = compose_step(m, step_maps[i])
        maps[(a, b)] = m
    return maps


def random_diagram(index_size: int, fiber_size: int, seed, density: float = 0.5) -> PosetDiagram:
    """Random diagram; fibers have 1..fiber_size points."""
    rng = _rng(seed)
    index = _random_poset(rng, index_size, density, "p")
    ext = index.linear_extension()
    fibers = {
        p: _random_poset(rng, rng.randint(1, fiber_size), density, "x") for p in ext
    }
    steps = [
        random_monotone_map(fibers[ext[i]], fibers[ext[i + 1]], rng)
        for i in range(len(ext) - 1)
    ]
    maps = transitions_from_extension_steps(index, steps, _compose_poset_steps)
    return PosetDiagram(index, fibers, maps)


def _random_complex(rng: random.Random, v: int, density: float = 0.35) -> SimplicialComplex:
    verts = [f"v{i}" for i in range(v)]
    facets = []
    for size in (2, 3):
        for combo in combinations(verts, size):
            if rng.random() < density:
                facets.append(list(combo))
    return SimplicialComplex(verts, facets)


def random_complex(v: int, seed, density: float = 0.35) -> SimplicialComplex:
    """Random complex on v vertices; dimension kept at most 2."""
    return _random_complex(_rng(seed), v, density)


def random_simplicial_map(
    k: SimplicialComplex, l: SimplicialComplex, rng: random.Random, attempts: int = 40
) -> SimplicialMap:
    """Random vertex map validated to be simplicial; falls back to a constant map."""
    for _ in range(attempts):
        assign = {v: rng.choice(l.vertices) for v in k.vertices}
        if all(l.has_simplex({assign[v] for v in f}) for f in k.facets):
            return SimplicialMap(k, l, assign)
    v0 = l.vertices[0]
    return SimplicialMap(k, l, {v: v0 for v in k.vertices})


def random_complex_diagram(
    index_size: int, v: int, seed, density: float = 0.5
) -> ComplexDiagram:
    rng = _rng(seed)
    index = _random_poset(rng, index_size, density, "p")
    ext = index.linear_extension()
    fibers = {p: _random_complex(rng, rng.randint(1, v)) for p in ext}
    steps = [
        random_simplicial_map(fibers[ext[i]], fibers[ext[i + 1]], rng)
        for i in range(len(ext) - 1)
    ]

    def comp(f, g):
        return SimplicialMap(f.source, g.target, {x: g(f(x)) for x in f.source.vertices})

    maps = transitions_from_extension_steps(index, steps, comp)
    return ComplexDiagram(index, fibers, maps)


def random_dismantlable_poset(n: int, rng: random.Random, prefix: str = "d") -> FinitePoset:
    """Grown one beat point at a time, so removal in reverse order dismantles it."""
    els = [f"{prefix}0"]
    rels: list[tuple[str, str]] = []
    for i in range(1, n):
        new = f"{prefix}{i}"
        anchor = rng.choice(els)
        if rng.random() < 0.5:
            rels.append((new, anchor))
        else:
            rels.append((anchor, new))
        els.append(new)
    return new_poset(els, rels)
