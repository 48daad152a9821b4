"""Topologies generated by self-maps, periodic points, and the C1-C3 test.

For ``f : X -> X`` the generated basis set at ``a`` is the backward orbit
``Vf(a) = {x : f^m(x) = a for some m >= 0}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .bits import mask, members, subset
from .errors import BoundExceededError, InvalidMapError
from .space import FiniteSpace
from .uniform import decide_uniformizable

EXHAUSTIVE_BOUND = 6


@dataclass(frozen=True)
class SelfMap:
    n: int
    f: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidMapError("self-map on an empty point set")
        if len(self.f) != self.n:
            raise InvalidMapError(f"expected {self.n} images, got {len(self.f)}")
        for x, y in enumerate(self.f):
            if not isinstance(y, (int, np.integer)) or not 0 <= y < self.n:
                raise InvalidMapError(f"image of {x} is {y!r}, outside 0..{self.n - 1}")
        object.__setattr__(self, "f", tuple(int(y) for y in self.f))

    @classmethod
    def of(cls, images):
        images = tuple(images)
        return cls(len(images), images)

    @classmethod
    def identity(cls, n):
        return cls(n, tuple(range(n)))

    def __call__(self, x):
        return self.f[x]

    def to_json(self):
        return {"n": self.n, "f": list(self.f)}


@dataclass(frozen=True)
class OrbitStructure:
    periodic: int
    period: dict

    def periodic_points(self):
        return members(self.periodic)


@dataclass(frozen=True)
class KPrimalFamily:
    maps: tuple[SelfMap, ...]

    def __post_init__(self):
        if not self.maps:
            raise InvalidMapError("k-primal family needs k >= 1 maps")
        if len({m.n for m in self.maps}) != 1:
            raise InvalidMapError("all maps in a k-primal family must share n")

    @property
    def k(self):
        return len(self.maps)

    @property
    def n(self):
        return self.maps[0].n


@dataclass(frozen=True)
class C123Report:
    c1: bool
    c2: bool
    c3: bool

    @property
    def all_true(self):
        return self.c1 and self.c2 and self.c3


@dataclass(frozen=True)
class Theorem80Record:
    uniformizable: bool
    per_equals_X: bool


def vf(f, a):
    """Union of the preimages ``f^-m({a})``, ``m >= 0``."""
    reach = 1 << a
    frontier = reach
    steps = 0
    while frontier:
        pre = mask(x for x in range(f.n) if (frontier >> f.f[x]) & 1)
        frontier = pre & ~reach
        reach |= pre
        steps += 1
    # each round adds a point or stops
    assert steps <= f.n
    return reach


def functional_topology(f):
    return FiniteSpace(f.n, tuple(vf(f, a) for a in range(f.n)))


def k_primal_topology(fam):
    rows = []
    for a in range(fam.n):
        v = -1
        for f in fam.maps:
            v &= vf(f, a)
        rows.append(v)
    # FiniteSpace re-checks basis coherence; a failure here is an internal fault
    return FiniteSpace(fam.n, tuple(rows))


def periodic_points(f):
    per = 0
    period = {}
    for x in range(f.n):
        cur = f.f[x]
        for m in range(1, f.n + 1):
            if cur == x:
                per |= 1 << x
                period[x] = m
                break
            cur = f.f[cur]
    return OrbitStructure(per, period)


def check_c123(space):
    nb = space.min_nbhd
    n = space.n
    c1 = all(
        nb[x] & nb[y] == 0 or subset(nb[x], nb[y]) or subset(nb[y], nb[x])
        for x in range(n) for y in range(n)
    )
    c2 = True
    for x in range(n):
        below_something = any(subset(nb[x], nb[y]) and nb[x] != nb[y] for y in range(n))
        if below_something and any(nb[z] == nb[x] for z in range(n) if z != x):
            c2 = False
            break
    # every interval {z : V(y) <= V(z) <= V(x)} is a subset of a finite point set
    c3 = True
    return C123Report(c1, c2, c3)


def cyclic_map_from_partition(p):
    f = list(range(p.n))
    for b in p.blocks:
        pts = members(b)
        for i, x in enumerate(pts):
            f[x] = pts[(i + 1) % len(pts)]
    return SelfMap(p.n, tuple(f))


def _nesting_map(space):
    # non-maximal classes are singletons under C2; send each to the least point
    # whose basis set is the smallest strict superset, and cycle maximal classes
    nb = space.min_nbhd
    n = space.n
    f = list(range(n))
    for x in range(n):
        strict = [nb[y] for y in range(n) if subset(nb[x], nb[y]) and nb[y] != nb[x]]
        if strict:
            parent = min(strict, key=lambda v: bin(v).count("1"))
            f[x] = min(y for y in range(n) if nb[y] == parent)
        else:
            cls = [z for z in range(n) if nb[z] == nb[x]]
            f[x] = cls[(cls.index(x) + 1) % len(cls)]
    return SelfMap(n, tuple(f))


@lru_cache(maxsize=None)
def _map_topology_keys(n):
    maps = kernels.maps_from_index(n, 0, n ** n)
    keys = kernels.row_keys(kernels.map_topology_rows(maps))
    return maps, keys


def functional_key_index(n):
    """``{space key: index of the first map generating it}`` over all ``n**n`` maps."""
    maps, keys = _map_topology_keys(n)
    uniq, first = np.unique(keys, return_index=True)
    return dict(zip(uniq.tolist(), first.tolist()))


def find_generating_map(space, exhaustive=False, bound=EXHAUSTIVE_BOUND):
    if exhaustive:
        if space.n > bound:
            raise BoundExceededError(f"exhaustive map search bound is {bound}, space has {space.n} points")
        maps, keys = _map_topology_keys(space.n)
        hit = np.flatnonzero(keys == space.key())
        if len(hit) == 0:
            return None
        return SelfMap.of(maps[hit[0]].tolist())

    if not check_c123(space).all_true:
        return None
    verdict = decide_uniformizable(space)
    f = cyclic_map_from_partition(verdict.witness) if verdict.decision else _nesting_map(space)
    if functional_topology(f) != space:
        raise AssertionError(f"constructed map {f.f} does not reproduce the space {space.basis()}")
    return f


def theorem80_check(f, strict=True):
    """Uniformizability of the map's topology against ``Per(f) = X``."""
    uni = decide_uniformizable(functional_topology(f)).decision
    per = periodic_points(f).periodic == (1 << f.n) - 1
    if strict and uni != per:
        raise AssertionError(f"Per(f) criterion disagrees for f = {f.f}")
    return Theorem80Record(uni, per)

