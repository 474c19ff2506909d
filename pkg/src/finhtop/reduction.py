"""Reduction methods for finite posets.

Beat points (strong deformation retractions), weak points (elementary
collapses), gamma points (simple equivalences), the Stong core, a bounded
collapse search and a three-valued homotopical-triviality oracle.  The
oracle is never wrong but may answer Unknown; every positive verdict
carries a replayable removal sequence and every negative one a homology
certificate or emptiness.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import UnknownElement
from .homology import poset_homology
from .poset import FinitePoset, require_nonempty

DEFAULT_BUDGET = 100_000
DEFAULT_GAMMA_DEPTH = 3

UP_BEAT = "up-beat"
DOWN_BEAT = "down-beat"
UP_WEAK = "up-weak"
DOWN_WEAK = "down-weak"
GAMMA_UP = "gamma-up"
GAMMA_DOWN = "gamma-down"

KINDS = (UP_BEAT, DOWN_BEAT, UP_WEAK, DOWN_WEAK, GAMMA_UP, GAMMA_DOWN)

TRIVIAL = "Trivial"
NONTRIVIAL = "NonTrivial"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class RemovalSequence:
    """Ordered removals (element, kind); each kind must hold at removal time."""

    steps: tuple[tuple[str, str], ...]

    def __post_init__(self):
        for _, kind in self.steps:
            if kind not in KINDS:
                raise ValueError(f"unknown removal kind {kind!r}")

    def __len__(self) -> int:
        return len(self.steps)

    def __add__(self, other: "RemovalSequence") -> "RemovalSequence":
        return RemovalSequence(self.steps + other.steps)

    def elements(self) -> list[str]:
        return [e for e, _ in self.steps]

    def to_obj(self) -> list[dict]:
        return [{"element": e, "kind": k} for e, k in self.steps]

    @classmethod
    def from_obj(cls, obj) -> "RemovalSequence":
        return cls(tuple((d["element"], d["kind"]) for d in obj))


@dataclass(frozen=True)
class Triviality:
    """Three-valued homotopical-triviality verdict with evidence.

    Trivial   -> evidence["sequence"] replays the poset down to one point.
    NonTrivial-> evidence carries nonzero reduced homology, or emptiness.
    Unknown   -> evidence reports the exhausted budget/depth.
    """

    verdict: str
    evidence: dict

    def is_trivial(self) -> bool:
        return self.verdict == TRIVIAL

    def to_obj(self) -> dict:
        ev = dict(self.evidence)
        if isinstance(ev.get("sequence"), RemovalSequence):
            ev["sequence"] = ev["sequence"].to_obj()
        return {"verdict": self.verdict, "evidence": ev}


# -- beat points --------------------------------------------------------------


def is_up_beat(p: FinitePoset, x: str) -> bool:
    """x has a unique cover above, i.e. its strict up-set has a minimum."""
    return len(p.covers_above(x)) == 1


def is_down_beat(p: FinitePoset, x: str) -> bool:
    return len(p.covers_below(x)) == 1


def is_beat(p: FinitePoset, x: str) -> bool:
    return is_up_beat(p, x) or is_down_beat(p, x)


def core(p: FinitePoset) -> tuple[FinitePoset, RemovalSequence]:
    """Remove beat points greedily (linear-extension scan order) to a fixed point.

    By Stong's theorem the result is independent of the order up to
    isomorphism, and p is contractible iff the core is a single point.
    """
    require_nonempty(p)
    steps: list[tuple[str, str]] = []
    current = p
    while len(current) > 1:
        found = None
        for x in current.linear_extension():
            if is_up_beat(current, x):
                found = (x, UP_BEAT)
                break
            if is_down_beat(current, x):
                found = (x, DOWN_BEAT)
                break
        if found is None:
            break
        steps.append(found)
        current = current.without(found[0])
    return current, RemovalSequence(tuple(steps))


@lru_cache(maxsize=65536)
def is_contractible(p: FinitePoset) -> bool:
    """True iff p is dismantlable (beat-point removal reaches a point)."""
    require_nonempty(p)
    return len(core(p)[0]) == 1


# -- weak points --------------------------------------------------------------


def is_down_weak(p: FinitePoset, x: str) -> bool:
    """The strict down-set is nonempty and contractible.

    Empty strict sets are not contractible, so minimal points are never
    down weak.
    """
    down = p.strict_down_set(x)
    return not down.is_empty() and is_contractible(down)


def is_up_weak(p: FinitePoset, x: str) -> bool:
    up = p.strict_up_set(x)
    return not up.is_empty() and is_contractible(up)


def is_weak(p: FinitePoset, x: str) -> bool:
    return is_up_weak(p, x) or is_down_weak(p, x)


def _weak_candidates(p: FinitePoset) -> list[tuple[str, str]]:
    # Beat points first so contractible posets come out with all-beat
    # sequences; then proper weak points.  Both passes scan in
    # linear-extension order.
    ext = p.linear_extension()
    beats: list[tuple[str, str]] = []
    weaks: list[tuple[str, str]] = []
    for x in ext:
        if is_up_beat(p, x):
            beats.append((x, UP_BEAT))
        elif is_down_beat(p, x):
            beats.append((x, DOWN_BEAT))
        elif is_up_weak(p, x):
            weaks.append((x, UP_WEAK))
        elif is_down_weak(p, x):
            weaks.append((x, DOWN_WEAK))
    return beats + weaks


class _BudgetExhausted(Exception):
    pass


def collapse_search(p: FinitePoset, budget: int = DEFAULT_BUDGET) -> RemovalSequence | None:
    """Bounded DFS for a sequence of weak-point deletions down to one point.

    Greedy deletion can strand, so failed states are memoized and the
    search backtracks.  Returns None when no sequence was found within the
    budget (inconclusive).
    """
    require_nonempty(p)
    dead: set[frozenset[str]] = set()
    visited = 0

    def dfs(current: FinitePoset) -> list[tuple[str, str]] | None:
        nonlocal visited
        if len(current) == 1:
            return []
        key = frozenset(current.elements)
        if key in dead:
            return None
        visited += 1
        if visited > budget:
            raise _BudgetExhausted
        for (x, kind) in _weak_candidates(current):
            rest = dfs(current.without(x))
            if rest is not None:
                return [(x, kind)] + rest
        dead.add(key)
        return None

    try:
        steps = dfs(p)
    except _BudgetExhausted:
        return None
    return RemovalSequence(tuple(steps)) if steps is not None else None


# -- gamma points and the oracle ----------------------------------------------


def triviality_oracle(
    p: FinitePoset,
    budget: int = DEFAULT_BUDGET,
    gamma_depth: int = DEFAULT_GAMMA_DEPTH,
) -> Triviality:
    """Layered decision procedure for weak contractibility.

    empty -> NonTrivial; dismantlable -> Trivial; nonzero reduced homology
    -> NonTrivial; otherwise search collapse sequences and gamma-point
    removals within the budget; else Unknown.  Sound in both directions,
    never claims what it cannot certify.
    """
    if p.is_empty():
        return Triviality(NONTRIVIAL, {"empty": True})
    current, steps_seq = core(p)
    steps = list(steps_seq.steps)
    if len(current) == 1:
        return Triviality(TRIVIAL, {"sequence": RemovalSequence(tuple(steps))})
    profile = poset_homology(current)
    if not profile.is_trivial():
        return Triviality(
            NONTRIVIAL,
            {
                "nonzero_homology": {
                    "betti": list(profile.betti),
                    "torsion": [list(t) for t in profile.torsion],
                }
            },
        )
    while True:
        collapsed, seq = core(current)
        steps.extend(seq.steps)
        current = collapsed
        if len(current) == 1:
            return Triviality(TRIVIAL, {"sequence": RemovalSequence(tuple(steps))})
        found = collapse_search(current, budget)
        if found is not None:
            steps.extend(found.steps)
            return Triviality(TRIVIAL, {"sequence": RemovalSequence(tuple(steps))})
        if gamma_depth <= 0:
            return Triviality(UNKNOWN, {"budget": budget, "gamma_depth_exhausted": True})
        gamma = None
        for x in current.linear_extension():
            down = current.strict_down_set(x)
            if not down.is_empty():
                sub = triviality_oracle(down, budget, gamma_depth - 1)
                if sub.is_trivial():
                    gamma = (x, GAMMA_DOWN)
                    break
            up = current.strict_up_set(x)
            if not up.is_empty():
                sub = triviality_oracle(up, budget, gamma_depth - 1)
                if sub.is_trivial():
                    gamma = (x, GAMMA_UP)
                    break
        if gamma is None:
            return Triviality(UNKNOWN, {"budget": budget, "no_gamma_point_found": True})
        steps.append(gamma)
        current = current.without(gamma[0])


def is_gamma_point(
    p: FinitePoset,
    x: str,
    budget: int = DEFAULT_BUDGET,
    gamma_depth: int = DEFAULT_GAMMA_DEPTH,
) -> Triviality:
    """Verdict on whether the strict up- or down-set of x is homotopically trivial."""
    p.index_of(x)
    down = triviality_oracle(p.strict_down_set(x), budget, gamma_depth)
    if down.is_trivial():
        return Triviality(TRIVIAL, {"side": "down", "inner": down.evidence})
    up = triviality_oracle(p.strict_up_set(x), budget, gamma_depth)
    if up.is_trivial():
        return Triviality(TRIVIAL, {"side": "up", "inner": up.evidence})
    if down.verdict == NONTRIVIAL and up.verdict == NONTRIVIAL:
        return Triviality(NONTRIVIAL, {"down": down.evidence, "up": up.evidence})
    return Triviality(UNKNOWN, {"down": down.verdict, "up": up.verdict})


def verify_removal_sequence(
    p: FinitePoset,
    seq: RemovalSequence,
    budget: int = DEFAULT_BUDGET,
    gamma_depth: int = DEFAULT_GAMMA_DEPTH,
) -> bool:
    """Replay the sequence, checking the claimed kind at every removal time.

    Gamma kinds are checked with the triviality oracle; an Unknown verdict
    fails the verification (the claim cannot be certified).
    """
    current = p
    for (x, kind) in seq.steps:
        if x not in current:
            raise UnknownElement(f"removal of {x!r} which is not present")
        if kind == UP_BEAT:
            ok = is_up_beat(current, x)
        elif kind == DOWN_BEAT:
            ok = is_down_beat(current, x)
        elif kind == UP_WEAK:
            ok = is_up_weak(current, x)
        elif kind == DOWN_WEAK:
            ok = is_down_weak(current, x)
        elif kind == GAMMA_UP:
            ok = triviality_oracle(current.strict_up_set(x), budget, gamma_depth).is_trivial()
        else:
            ok = triviality_oracle(current.strict_down_set(x), budget, gamma_depth).is_trivial()
        if not ok:
            return False
        current = current.without(x)
    return True
