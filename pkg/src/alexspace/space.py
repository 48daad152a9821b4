"""Finite topological spaces stored as minimal-neighbourhood bases.

Every finite topology is Alexandroff, so a space on points ``0..n-1`` is
fully described by the bitmask ``min_nbhd[x]`` of its smallest open set
``V(x)``.  Open-set families and specialization preorders are derived views.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bits import full, mask, members, subset
from .errors import InvalidRelationError, InvalidSpaceError


@dataclass(frozen=True)
class FiniteSpace:
    n: int
    min_nbhd: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidSpaceError(f"point count must be a positive integer, got {self.n!r}")
        if len(self.min_nbhd) != self.n:
            raise InvalidSpaceError(f"expected {self.n} basis sets, got {len(self.min_nbhd)}")
        top = full(self.n)
        for x, v in enumerate(self.min_nbhd):
            if v & ~top:
                raise InvalidSpaceError(f"V({x}) mentions points outside 0..{self.n - 1}")
            if not (v >> x) & 1:
                raise InvalidSpaceError(f"point {x} is not in its own basis set V({x})")
        for x, v in enumerate(self.min_nbhd):
            for y in members(v):
                if not subset(self.min_nbhd[y], v):
                    raise InvalidSpaceError(
                        f"basis incoherent: {y} in V({x}) but V({y}) is not a subset of V({x})"
                    )

    @classmethod
    def from_basis(cls, basis):
        basis = [mask(b) for b in basis]
        return cls(len(basis), tuple(basis))

    @classmethod
    def discrete(cls, n):
        return cls(n, tuple(1 << x for x in range(n)))

    @classmethod
    def indiscrete(cls, n):
        return cls(n, (full(n),) * n)

    def V(self, x):
        """Points of the smallest open neighbourhood of ``x``, ascending."""
        return members(self.min_nbhd[x])

    def basis(self):
        return [members(v) for v in self.min_nbhd]

    def key(self):
        """Packs the basis into one integer (row ``x`` in bits ``x*n .. x*n+n-1``)."""
        k = 0
        for x, v in enumerate(self.min_nbhd):
            k |= v << (x * self.n)
        return k

    @classmethod
    def from_key(cls, n, key):
        row = full(n)
        return cls(n, tuple((key >> (x * n)) & row for x in range(n)))

    def is_open(self, s):
        return all(subset(self.min_nbhd[x], s) for x in members(s))

    def distinct_blocks(self):
        """Distinct basis sets, in order of the least point having each."""
        seen = []
        for v in self.min_nbhd:
            if v not in seen:
                seen.append(v)
        return seen

    def subspace(self, points):
        """Subspace topology on ``points`` (relabelled ascending to 0..k-1)."""
        pts = sorted(points)
        index = {p: i for i, p in enumerate(pts)}
        sub = mask(pts)
        return FiniteSpace(
            len(pts),
            tuple(mask(index[q] for q in members(self.min_nbhd[p] & sub)) for p in pts),
        )

    def to_json(self):
        return {"n": self.n, "basis": self.basis()}


@dataclass(frozen=True)
class OpenSetFamily:
    n: int
    sets: frozenset

    @classmethod
    def from_lists(cls, n, sets):
        return cls(n, frozenset(mask(s) for s in sets))

    def validate(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidSpaceError(f"point count must be a positive integer, got {self.n!r}")
        top = full(self.n)
        for s in self.sets:
            if s & ~top:
                raise InvalidSpaceError(f"open set {members(s)} mentions points outside 0..{self.n - 1}")
        if 0 not in self.sets:
            raise InvalidSpaceError("family is missing the empty set")
        if top not in self.sets:
            raise InvalidSpaceError("family is missing the full point set")
        ordered = sorted(self.sets)
        for i, a in enumerate(ordered):
            for b in ordered[i + 1:]:
                if a | b not in self.sets:
                    raise InvalidSpaceError(f"not closed under union: {members(a)} | {members(b)}")
                if a & b not in self.sets:
                    raise InvalidSpaceError(f"not closed under intersection: {members(a)} & {members(b)}")

    def as_lists(self):
        return sorted((members(s) for s in self.sets), key=lambda s: (len(s), s))


@dataclass(frozen=True)
class SpecializationPreorder:
    """``leq[x][y]`` holds iff ``x`` lies in every open set containing ``y``."""
    n: int
    leq: tuple[tuple[bool, ...], ...]

    def pairs(self):
        return [(x, y) for x in range(self.n) for y in range(self.n) if self.leq[x][y]]


def from_open_sets(family):
    family.validate()
    top = full(family.n)
    nbhd = []
    for x in range(family.n):
        v = top
        for s in family.sets:
            if (s >> x) & 1:
                v &= s
        nbhd.append(v)
    return FiniteSpace(family.n, tuple(nbhd))


def open_sets(space):
    opens = {0}
    for v in space.min_nbhd:
        opens |= {s | v for s in opens}
    return OpenSetFamily(space.n, frozenset(opens))


def preorder(space):
    rows = tuple(
        tuple(bool((space.min_nbhd[y] >> x) & 1) for y in range(space.n)) for x in range(space.n)
    )
    return SpecializationPreorder(space.n, rows)


def space_from_preorder(rel):
    n = rel.n
    leq = rel.leq
    if n < 1 or len(leq) != n or any(len(r) != n for r in leq):
        raise InvalidRelationError(f"relation must be an {n}x{n} boolean matrix with n >= 1")
    for x in range(n):
        if not leq[x][x]:
            raise InvalidRelationError(f"not reflexive at {x}")
    for x in range(n):
        for y in range(n):
            if not leq[x][y]:
                continue
            for z in range(n):
                if leq[y][z] and not leq[x][z]:
                    raise InvalidRelationError(f"not transitive: {x}<={y}<={z} but not {x}<={z}")
    return FiniteSpace(n, tuple(mask(x for x in range(n) if leq[x][y]) for y in range(n)))


def to_dot(space, name="space", labels=None):
    """DOT digraph of the Hasse diagram of the specialization preorder.

    Points with equal basis sets are drawn as one cluster; an edge ``x -> y``
    means ``V(x)`` is a maximal proper subset of ``V(y)`` (drawn between the
    least points of each class).
    """
    labels = labels or {}
    blocks = space.distinct_blocks()
    cls = {b: [x for x in range(space.n) if space.min_nbhd[x] == b] for b in blocks}
    rep = {b: cls[b][0] for b in blocks}

    lines = [f"digraph {name} {{"]
    k = 0
    for b in blocks:
        pts = cls[b]
        node_lines = []
        for x in pts:
            lab = labels.get(x, str(x))
            node_lines.append(f'{x} [label="{lab}"];')
        if len(pts) > 1:
            lines.append(f"  subgraph cluster_{k} {{")
            lines.extend("    " + s for s in node_lines)
            lines.append("  }")
            k += 1
        else:
            lines.extend("  " + s for s in node_lines)
    for a in blocks:
        for b in blocks:
            if a == b or not subset(a, b):
                continue
            covered = any(c not in (a, b) and subset(a, c) and subset(c, b) for c in blocks)
            if not covered:
                lines.append(f"  {rep[a]} -> {rep[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
