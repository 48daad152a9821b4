"""Uniformizability of finite spaces.

A finite space is uniformizable exactly when its basis sets ``V(x)`` form a
partition of the points.  This module decides that, builds the entourage
``alpha0 = U{D x D}`` of a partition, checks the uniform-structure axioms on
the up-filter it generates, forms the quotient by ``V``-equality, and offers
an independent oracle that searches {0,1}-valued pseudometrics.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bits import full, mask, members, subset
from .errors import BoundExceededError, InvalidPartitionError, InvalidRelationError
from .space import FiniteSpace

ORACLE_BOUND = 6


@dataclass(frozen=True)
class Partition:
    n: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidPartitionError("partition of an empty point set")
        seen = 0
        for b in self.blocks:
            if b == 0:
                raise InvalidPartitionError("empty block")
            if b & seen:
                raise InvalidPartitionError(f"block {members(b)} overlaps an earlier block")
            seen |= b
        if seen != full(self.n):
            raise InvalidPartitionError(f"blocks do not cover 0..{self.n - 1}")
        ordered = tuple(sorted(self.blocks, key=lambda b: (b & -b)))
        object.__setattr__(self, "blocks", ordered)

    @classmethod
    def from_lists(cls, n, blocks):
        return cls(n, tuple(mask(b) for b in blocks))

    @classmethod
    def from_rgs(cls, rgs):
        k = max(rgs) + 1
        blocks = [0] * k
        for x, b in enumerate(rgs):
            blocks[b] |= 1 << x
        return cls(len(rgs), tuple(blocks))

    def as_lists(self):
        return [members(b) for b in self.blocks]

    def block_of(self, x):
        for b in self.blocks:
            if (b >> x) & 1:
                return b
        raise IndexError(x)


@dataclass(frozen=True)
class EntourageBase:
    """A relation on ``n`` points; ``alpha0[x]`` is the section ``{y : (x, y) in alpha0}``."""
    n: int
    alpha0: tuple[int, ...]

    @classmethod
    def from_pairs(cls, n, pairs):
        rows = [0] * n
        for x, y in pairs:
            rows[x] |= 1 << y
        return cls(n, tuple(rows))

    def pairs(self):
        return [(x, y) for x in range(self.n) for y in members(self.alpha0[x])]

    def inverse(self):
        rows = [0] * self.n
        for x, y in self.pairs():
            rows[y] |= 1 << x
        return EntourageBase(self.n, tuple(rows))

    def compose(self, other):
        """``self o other`` in the order used for entourages: (x,z) with x->y in self, y->z in other."""
        rows = []
        for x in range(self.n):
            r = 0
            for y in members(self.alpha0[x]):
                r |= other.alpha0[y]
            rows.append(r)
        return EntourageBase(self.n, tuple(rows))

    def contains(self, other):
        return all(subset(b, a) for a, b in zip(self.alpha0, other.alpha0))


@dataclass(frozen=True)
class AxiomReport:
    diagonal: bool
    upward_closed: bool
    intersection_closed: bool
    inverse_closed: bool
    has_square_root: bool

    @property
    def all_pass(self):
        return all(self.as_dict().values())

    def as_dict(self):
        return {
            "diagonal": self.diagonal,
            "upward_closed": self.upward_closed,
            "intersection_closed": self.intersection_closed,
            "inverse_closed": self.inverse_closed,
            "has_square_root": self.has_square_root,
        }


@dataclass(frozen=True)
class UniformizabilityVerdict:
    decision: bool
    witness: Partition | None = None
    counterexample: tuple[int, int] | None = None

    def to_json(self):
        return {
            "uniformizable": self.decision,
            "witness": self.witness.as_lists() if self.witness else None,
            "counterexample": list(self.counterexample) if self.counterexample else None,
        }


@dataclass(frozen=True)
class PseudometricMatrix:
    n: int
    d: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        d, n = self.d, self.n
        if len(d) != n or any(len(r) != n for r in d):
            raise InvalidRelationError("pseudometric must be an n x n matrix")
        for x in range(n):
            if d[x][x] != 0:
                raise InvalidRelationError(f"d({x},{x}) != 0")
            for y in range(n):
                if d[x][y] < 0 or d[x][y] != d[y][x]:
                    raise InvalidRelationError(f"d({x},{y}) negative or asymmetric")
                for z in range(n):
                    if d[x][z] > d[x][y] + d[y][z]:
                        raise InvalidRelationError(f"triangle inequality fails at ({x},{y},{z})")

    @classmethod
    def from_partition(cls, p):
        n = p.n
        return cls(n, tuple(
            tuple(0 if (p.block_of(x) >> y) & 1 else 1 for y in range(n)) for x in range(n)
        ))


@dataclass(frozen=True)
class QuotientSpace:
    base: FiniteSpace
    classes: Partition
    quotient_space: FiniteSpace

    @property
    def discrete(self):
        return all(v == 1 << c for c, v in enumerate(self.quotient_space.min_nbhd))

    def project(self, x):
        for c, b in enumerate(self.classes.blocks):
            if (b >> x) & 1:
                return c
        raise IndexError(x)

    def preimage(self, cls_mask):
        out = 0
        for c in members(cls_mask):
            out |= self.classes.blocks[c]
        return out

    def open_sets(self):
        """Class-sets whose preimage is open in the base, by direct enumeration."""
        k = len(self.classes.blocks)
        return sorted(s for s in range(1 << k) if self.base.is_open(self.preimage(s)))


def decide_uniformizable(space):
    nb = space.min_nbhd
    for a in range(space.n):
        for b in members(nb[a]):
            if nb[b] != nb[a]:
                return UniformizabilityVerdict(False, counterexample=(a, b))
    return UniformizabilityVerdict(True, witness=Partition(space.n, tuple(space.distinct_blocks())))


def entourage_base_from_partition(p):
    rows = [0] * p.n
    for b in p.blocks:
        for x in members(b):
            rows[x] = b
    return EntourageBase(p.n, tuple(rows))


def verify_uniform_axioms(base):
    """Check the five uniform-structure axioms for the up-filter ``{a : base <= a}``.

    Upward and intersection closure hold for any up-filter of a single relation.
    Inverse closure reduces to ``base <= base^-1`` and the square-root axiom to
    ``base o base <= base`` (``base`` itself is then the witness, and nothing
    smaller is available in the filter).
    """
    diag = all((row >> x) & 1 for x, row in enumerate(base.alpha0))
    inv = base.inverse().contains(base)
    sq = base.contains(base.compose(base))
    return AxiomReport(diag, True, True, inv, sq)


def uniform_topology(base):
    """Smallest open sets of the topology generated by the up-filter of ``base``.

    ``U`` is open iff ``base[x] <= U`` for every ``x`` in ``U``, so the least
    open set around ``x`` is the forward closure of ``x`` under ``base``.
    """
    rows = []
    for x in range(base.n):
        reach = 1 << x
        frontier = reach
        while frontier:
            nxt = 0
            for y in members(frontier):
                nxt |= base.alpha0[y]
            frontier = nxt & ~reach
            reach |= nxt
        rows.append(reach)
    return FiniteSpace(base.n, tuple(rows))


def topology_from_entourage(base):
    rep = verify_uniform_axioms(base)
    if not rep.diagonal:
        raise InvalidRelationError("entourage base does not contain the diagonal")
    if not rep.inverse_closed:
        raise InvalidRelationError("entourage base is not symmetric")
    if base.compose(base) != base:
        raise InvalidRelationError("entourage base is not idempotent under composition")
    return FiniteSpace(base.n, base.alpha0)


def leq_relation_is_equivalence(space):
    """Whether ``{(a, b) : V(b) <= V(a)}`` is an equivalence relation."""
    nb = space.min_nbhd
    rel = [[subset(nb[b], nb[a]) for b in range(space.n)] for a in range(space.n)]
    n = space.n
    refl = all(rel[a][a] for a in range(n))
    sym = all(rel[a][b] == rel[b][a] for a in range(n) for b in range(n))
    trans = all(
        rel[a][c] for a in range(n) for b in range(n) if rel[a][b] for c in range(n) if rel[b][c]
    )
    return refl and sym and trans


def quotient_by_R(space):
    blocks = {}
    for x, v in enumerate(space.min_nbhd):
        blocks[v] = blocks.get(v, 0) | (1 << x)
    classes = Partition(space.n, tuple(blocks.values()))
    index = {}
    for c, b in enumerate(classes.blocks):
        for x in members(b):
            index[x] = c
    qrows = []
    for b in classes.blocks:
        v = space.min_nbhd[members(b)[0]]
        # V(x) is a union of whole classes, hence a saturated open set
        assert space.is_open(v)
        qrows.append(mask(index[y] for y in members(v)))
    return QuotientSpace(space, classes, FiniteSpace(len(qrows), tuple(qrows)))


def ball_topology(pm):
    """Topology with subbase the open balls ``B(x, r) = {y : d(x, y) < r}``, ``r > 0``."""
    n = pm.n
    balls = set()
    for x in range(n):
        radii = sorted(set(pm.d[x]))
        for v in radii:
            # any r in (v, next value] yields {y : d(x,y) <= v}
            balls.add(mask(y for y in range(n) if pm.d[x][y] <= v))
    rows = []
    for p in range(n):
        v = full(n)
        for b in balls:
            if (b >> p) & 1:
                v &= b
        rows.append(v)
    return FiniteSpace(n, tuple(rows))


@lru_cache(maxsize=None)
def _oracle_table(n):
    from .enumeration import enumerate_partitions

    table = {}
    for p in enumerate_partitions(n):
        pm = PseudometricMatrix.from_partition(p)
        table.setdefault(ball_topology(pm).key(), pm)
    return table


def pseudometric_oracle(space, bound=ORACLE_BOUND):
    """First {0,1}-valued pseudometric (in partition order) whose balls generate ``space``."""
    if space.n > bound:
        raise BoundExceededError(f"pseudometric oracle bound is {bound}, space has {space.n} points")
    return _oracle_table(space.n).get(space.key())
