"""Shared quivers and memoized computation contexts for the test suite."""

from __future__ import annotations

import functools

from hallq import GF, HallAlgebra, HallNumbers, ModuleCatalog, Quiver

QUIVERS = {
    "sv": (["1"], []),
    "a2": (["1", "2"], [["a", "1", "2"]]),
    "a3": (["1", "2", "3"], [["a", "1", "2"], ["b", "2", "3"]]),
    "kr": (["1", "2"], [["a", "1", "2"], ["b", "1", "2"]]),
    "a21": (["1", "2", "3"], [["a", "1", "2"], ["b", "2", "3"], ["c", "1", "3"]]),
    "d4": (
        ["1", "2", "3", "4", "5"],
        [["a", "1", "3"], ["b", "2", "3"], ["c", "4", "3"], ["d", "5", "3"]],
    ),
    # orientations matching the regular-simple tables
    "e6": (
        ["1", "2", "3", "4", "5", "6", "7"],
        [
            ["a", "1", "2"],
            ["b", "2", "3"],
            ["c", "4", "3"],
            ["d", "5", "4"],
            ["e", "6", "3"],
            ["f", "7", "6"],
        ],
    ),
    "e7": (
        [str(i) for i in range(1, 9)],
        [
            ["a", "1", "2"],
            ["b", "2", "3"],
            ["c", "3", "4"],
            ["d", "5", "4"],
            ["e", "6", "5"],
            ["f", "7", "6"],
            ["g", "8", "4"],
        ],
    ),
    "e8": (
        [str(i) for i in range(1, 10)],
        [
            ["a", "1", "2"],
            ["b", "2", "3"],
            ["c", "4", "3"],
            ["d", "5", "4"],
            ["e", "6", "5"],
            ["f", "7", "6"],
            ["g", "8", "7"],
            ["h", "9", "3"],
        ],
    ),
}


@functools.lru_cache(maxsize=None)
def quiver(name: str) -> Quiver:
    vertices, arrows = QUIVERS[name]
    return Quiver(vertices, arrows)


@functools.lru_cache(maxsize=None)
def catalog(name: str, q: int) -> ModuleCatalog:
    return ModuleCatalog(quiver(name), GF(q))


@functools.lru_cache(maxsize=None)
def algebra(name: str, q: int) -> HallAlgebra:
    return HallAlgebra(catalog(name, q))


def engine(name: str, q: int) -> HallNumbers:
    return algebra(name, q).engine


def classes_at(name: str, q: int, dim):
    cat = catalog(name, q)
    return cat.enumerate_classes(cat.quiver.dim(dim))


def class_by_label(name: str, q: int, dim, label: str):
    for c in classes_at(name, q, dim):
        if c.label == label:
            return c
    raise AssertionError(f"no class {label!r} at {dim} for {name} q={q}")
