"""Worked examples: the maps and groups used throughout the tests and the CLI."""

from __future__ import annotations

from .altmap import AltMap
from .grouplab import ClassTwoGroup

# (p, n, d, delta, k, k') rows of the bound comparison table, with the published
# general-bound exponent and comparison exponent.
TABLE1 = [
    ((5, 21, 7, 6, 14, 14), 71, 81),
    ((5, 24, 7, 7, 17, 17), 89, 108),
    ((3, 39, 8, 8, 29, 28), 182, 217),
    ((3, 50, 10, 10, 40, 40), 287, 369),
]


def example1_map(p: int = 3) -> AltMap:
    """n=5, m=4; greedy pair basis {1,2},{1,3},{2,4},{2,5}."""
    return AltMap(p, 5, 4, {
        (1, 2): (1, 0, 0, 0),
        (1, 3): (0, 1, 0, 0),
        (2, 4): (0, 0, 1, 0),
        (1, 5): (-1, -1, 0, 0),
        (2, 5): (0, 0, 0, 1),
        (4, 5): (0, 0, 1, 0),
    })


def example3_map(p: int = 3) -> AltMap:
    """n=5, m=5; greedy pair basis {1,2},{1,3},{2,4},{2,5},{3,5}."""
    return AltMap(p, 5, 5, {
        (1, 2): (1, 0, 0, 0, 0),
        (1, 3): (0, 1, 0, 0, 0),
        (1, 4): (1, 1, 0, 0, 0),
        (2, 4): (0, 0, 1, 0, 0),
        (2, 5): (0, 0, 0, -1, 1),
        (3, 5): (0, 0, 0, 1, 0),
        (4, 5): (0, 0, 0, 0, 1),
    })


def intro_map(p: int = 3) -> AltMap:
    """Six generators, four commutators; [g1,g2] = [g1,g6] so g2/g6 is central."""
    return AltMap(p, 6, 4, {
        (1, 2): (1, 0, 0, 0),
        (1, 6): (1, 0, 0, 0),
        (1, 3): (0, 1, 0, 0),
        (3, 4): (0, 0, 1, 0),
        (1, 5): (0, 0, 0, 1),
    })


def intro_group_g() -> ClassTwoGroup:
    return ClassTwoGroup(intro_map(3))


def intro_group_h() -> ClassTwoGroup:
    return ClassTwoGroup(intro_map(5), gen_prefix="h", central_prefix="r")


def special_map(p: int = 3) -> AltMap:
    """Special group with d=5, k=3."""
    return AltMap(p, 5, 3, {
        (1, 2): (1, 0, 0),
        (1, 5): (1, 0, 0),
        (2, 5): (1, 0, 0),
        (2, 3): (0, 1, 0),
        (3, 4): (0, 0, 1),
    })


def special_group() -> ClassTwoGroup:
    return ClassTwoGroup(special_map(3))


def heisenberg_group(p: int = 3) -> ClassTwoGroup:
    return ClassTwoGroup(AltMap(p, 2, 1, {(1, 2): (1,)}))


SHIPPED_MAPS = {
    "example1.json": example1_map,
    "example3.json": example3_map,
    "intro_g.json": lambda: intro_map(3),
    "intro_h.json": lambda: intro_map(5),
    "special.json": special_map,
}
