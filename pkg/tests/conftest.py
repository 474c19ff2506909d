import pytest

from finhtop.verify.suite import circle_poset, point_poset, suspension_diagram, w_poset


@pytest.fixture
def s1():
    return circle_poset()


@pytest.fixture
def w():
    return w_poset()


@pytest.fixture
def pt():
    return point_poset()


@pytest.fixture
def sphere_diagram(s1):
    return suspension_diagram(s1)


def brute_closure(elements, relations):
    """Independent reflexive-transitive closure by iteration to a fixed point."""
    leq = {(x, x) for x in elements} | set(relations)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(leq):
            for (c, d) in list(leq):
                if b == c and (a, d) not in leq:
                    leq.add((a, d))
                    changed = True
    return leq
