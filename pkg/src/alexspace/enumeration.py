"""Exhaustive generators, Bell numbers, the uniformizability census and theorem sweeps.

Topologies are enumerated as specialization preorders (rows ``V(x)`` as
bitmasks) by the backtracking kernel in :mod:`alexspace.kernels`.  Work is
sharded by the value of ``V(0)`` into contiguous ranges; shards are merged in
index order so results do not depend on the worker count.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import kernels
from ._accel import worker_count
from .errors import AlexError, BoundExceededError
from .functional import (
    SelfMap, _map_topology_keys, check_c123, cyclic_map_from_partition, find_generating_map,
    functional_topology, periodic_points,
)
from .space import FiniteSpace
from .uniform import (
    EntourageBase, Partition, decide_uniformizable, entourage_base_from_partition,
    leq_relation_is_equivalence, pseudometric_oracle, quotient_by_R, topology_from_entourage,
    uniform_topology, verify_uniform_axioms,
)

log = logging.getLogger(__name__)

BELL_BOUND = 200
PARTITION_BOUND = 13
TOPOLOGY_BOUND = 5
TOPOLOGY_LONG_BOUND = 7
MAP_BOUND = 7


def _check_bound(what, n, hi, lo=1, long_hi=None, long_run=False):
    top = long_hi if (long_run and long_hi is not None) else hi
    if not lo <= n <= top:
        hint = f" (up to {long_hi} with long_run)" if long_hi is not None and not long_run else ""
        raise BoundExceededError(f"{what}: n={n} outside {lo}..{top}{hint}")


@lru_cache(maxsize=None)
def _bell_table(n):
    values = [1]
    row = [1]  # binomial row k
    for k in range(n):
        values.append(sum(c * b for c, b in zip(row, values)))
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return tuple(values)


def bell(n):
    """Bell number via ``B(k+1) = sum_i C(k, i) B(i)``."""
    if not isinstance(n, int) or not 0 <= n <= BELL_BOUND:
        raise BoundExceededError(f"bell: n must be in 0..{BELL_BOUND}, got {n!r}")
    return _bell_table(n)[n]


def enumerate_partitions(n):
    """Set partitions of ``0..n-1`` in restricted-growth-string order."""
    _check_bound("enumerate_partitions", n, PARTITION_BOUND)
    rgs = [0] * n
    peak = [0] * n  # peak[i] = max(rgs[:i+1])
    while True:
        yield Partition.from_rgs(rgs)
        i = n - 1
        while i > 0 and rgs[i] > peak[i - 1]:
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        peak[i] = max(peak[i - 1], rgs[i])
        for j in range(i + 1, n):
            rgs[j] = 0
            peak[j] = peak[i]


def _shards(n, pieces=64):
    hi = 1 << n
    step = max(1, -(-hi // pieces))
    return [(lo, min(lo + step, hi)) for lo in range(0, hi, step)]


def _run_shards(fn, shards, workers):
    workers = workers or worker_count()
    if workers <= 1 or len(shards) == 1:
        return [fn(*s) for s in shards]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda s: fn(*s), shards))


def topology_rows(n, long_run=False, workers=None):
    """All preorder rows on ``n`` points as one ``(count, n)`` int64 array, in canonical order."""
    _check_bound("enumerate_topologies", n, TOPOLOGY_BOUND, long_hi=TOPOLOGY_LONG_BOUND, long_run=long_run)
    parts = _run_shards(lambda lo, hi: kernels.preorder_rows(n, lo, hi), _shards(n), workers)
    return np.concatenate(parts) if parts else np.zeros((0, n), np.int64)


def enumerate_topologies(n, long_run=False):
    _check_bound("enumerate_topologies", n, TOPOLOGY_BOUND, long_hi=TOPOLOGY_LONG_BOUND, long_run=long_run)
    for lo, hi in _shards(n):
        for row in kernels.preorder_rows(n, lo, hi):
            yield FiniteSpace(n, tuple(int(v) for v in row))


def enumerate_self_maps(n):
    """All ``n**n`` self-maps in lexicographic order of ``(f(0), ..., f(n-1))``."""
    _check_bound("enumerate_self_maps", n, MAP_BOUND)
    total = n ** n
    step = 4096
    for lo in range(0, total, step):
        for row in kernels.maps_from_index(n, lo, min(total, lo + step)):
            yield SelfMap(n, tuple(int(v) for v in row))


@lru_cache(maxsize=None)
def functional_keys(n):
    """Sorted unique keys of every topology generated by a single self-map on ``n`` points."""
    _, keys = _map_topology_keys(n)
    return np.unique(keys)


@dataclass
class CensusReport:
    n: int
    total_topologies: int
    uniformizable_count: int
    functional_uniformizable_count: int
    bell: int
    per_theorem: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "n": self.n,
            "total_topologies": self.total_topologies,
            "uniformizable_count": self.uniformizable_count,
            "functional_uniformizable_count": self.functional_uniformizable_count,
            "bell": self.bell,
            "per_theorem": self.per_theorem,
        }

    def table(self):
        rows = [
            ("points", self.n),
            ("topologies", self.total_topologies),
            ("uniformizable", self.uniformizable_count),
            ("functional + uniformizable", self.functional_uniformizable_count),
            ("Bell number", self.bell),
        ]
        rows += [(f"check {k}", "pass" if v["passed"] else "FAIL") for k, v in sorted(self.per_theorem.items())]
        width = max(len(r[0]) for r in rows)
        return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def count_uniformizable(n, long_run=False, workers=None):
    _check_bound("count_uniformizable", n, TOPOLOGY_BOUND, long_hi=TOPOLOGY_LONG_BOUND, long_run=long_run)
    fkeys = functional_keys(n)

    def shard(lo, hi):
        rows = kernels.preorder_rows(n, lo, hi)
        uni = kernels.uniformizable_flags(rows)
        fun = np.isin(kernels.row_keys(rows), fkeys)
        both = uni & fun
        mismatch = np.flatnonzero(uni != both)
        first = None if len(mismatch) == 0 else rows[mismatch[0]].tolist()
        return len(rows), int(uni.sum()), int(both.sum()), first

    parts = _run_shards(shard, _shards(n), workers)
    total = sum(p[0] for p in parts)
    uni = sum(p[1] for p in parts)
    fun = sum(p[2] for p in parts)
    first = next((p[3] for p in parts if p[3] is not None), None)
    b = bell(n)
    per = {
        "salam60": {"passed": uni == b, "counterexample": None if uni == b else {"uniformizable": uni, "bell": b}},
        "salam50": {
            "passed": first is None,
            "counterexample": None if first is None else {"basis_masks": first},
        },
    }
    return CensusReport(n, total, uni, fun, b, per)


@dataclass
class TheoremReport:
    theorem: str
    n: int
    passed: bool
    instances: int
    counterexample: dict | None = None

    def to_json(self):
        return {
            "theorem": self.theorem,
            "n": self.n,
            "passed": self.passed,
            "instances": self.instances,
            "counterexample": self.counterexample,
        }


def _sweep_salam20(n, long_run, workers):
    count = 0
    for p in enumerate_partitions(n):
        count += 1
        base = entourage_base_from_partition(p)
        ok = verify_uniform_axioms(base).all_pass
        if ok:
            sp = topology_from_entourage(base)
            ok = sp == uniform_topology(base) and Partition(n, tuple(sp.distinct_blocks())) == p
        if not ok:
            return TheoremReport("salam20", n, False, count, {"partition": p.as_lists()})
    return TheoremReport("salam20", n, True, count)


def six_statements(space):
    """The six equivalent conditions for a uniformizable Alexandroff space, evaluated independently."""
    nb = space.min_nbhd
    oracle = pseudometric_oracle(space) is not None
    partition = decide_uniformizable(space).decision
    # a compatible F_P would need alpha0[x] = V(x), so the only candidate base is x -> V(x)
    cand = EntourageBase(space.n, nb)
    entourage = verify_uniform_axioms(cand).all_pass and topology_from_entourage(cand) == space
    propagation = all(nb[b] == nb[a] for a in range(space.n) for b in space.V(a))
    equivalence = leq_relation_is_equivalence(space)
    discrete = quotient_by_R(space).discrete
    return {
        "pseudometric": oracle,
        "partition": partition,
        "entourage": entourage,
        "propagation": propagation,
        "equivalence": equivalence,
        "quotient_discrete": discrete,
    }


def _sweep_salam30(n, long_run, workers):
    count = 0
    for sp in enumerate_topologies(n, long_run=long_run):
        count += 1
        st = six_statements(sp)
        if len(set(st.values())) != 1:
            return TheoremReport("salam30", n, False, count, {"basis": sp.basis(), "statements": st})
    return TheoremReport("salam30", n, True, count)


def _sweep_salam40(n, long_run, workers):
    count = 0
    for sp in enumerate_topologies(n, long_run=long_run):
        count += 1
        c = check_c123(sp).all_true
        g = find_generating_map(sp, exhaustive=True)
        ok = c == (g is not None)
        if ok and g is not None:
            ok = functional_topology(g) == sp
            w = find_generating_map(sp)
            ok = ok and w is not None and functional_topology(w) == sp
        if not ok:
            return TheoremReport("salam40", n, False, count, {
                "basis": sp.basis(), "c123": c, "exhaustive_map": None if g is None else list(g.f),
            })
    return TheoremReport("salam40", n, True, count)


def _sweep_salam65(n, long_run, workers):
    maps, _ = _map_topology_keys(n)
    rows = kernels.map_topology_rows(maps)
    fkeys = functional_keys(n)
    m = len(maps)
    count = 0
    for i in range(m):
        pair = rows[i][None, :] & rows
        uni = kernels.uniformizable_flags(pair)
        fun = np.isin(kernels.row_keys(pair), fkeys)
        bad = np.flatnonzero(uni & ~fun)
        count += m
        if len(bad):
            j = int(bad[0])
            return TheoremReport("salam65", n, False, i * m + j + 1, {
                "maps": [maps[i].tolist(), maps[j].tolist()], "basis_masks": pair[j].tolist(),
            })
    return TheoremReport("salam65", n, True, count)


def _sweep_salam70(n, long_run, workers):
    count = 0
    for p in enumerate_partitions(n):
        count += 1
        f = cyclic_map_from_partition(p)
        sp = functional_topology(f)
        per = periodic_points(f).periodic == (1 << n) - 1
        ok = per and Partition(n, tuple(sp.distinct_blocks())) == p
        if not ok:
            return TheoremReport("salam70", n, False, count, {"partition": p.as_lists(), "map": list(f.f)})
    return TheoremReport("salam70", n, True, count)


def _sweep_salam80(n, long_run, workers):
    total = n ** n
    step = max(1, -(-total // 64))
    shards = [(lo, min(lo + step, total)) for lo in range(0, total, step)]

    def shard(lo, hi):
        maps = kernels.maps_from_index(n, lo, hi)
        uni = kernels.uniformizable_flags(kernels.map_topology_rows(maps))
        per = kernels.all_periodic_flags(maps)
        bad = np.flatnonzero(uni != per)
        return None if len(bad) == 0 else (lo + int(bad[0]), maps[bad[0]].tolist(), bool(uni[bad[0]]))

    for res in _run_shards(shard, shards, workers):
        if res is not None:
            idx, f, uni = res
            return TheoremReport("salam80", n, False, idx + 1, {"map": f, "uniformizable": uni, "per_equals_X": not uni})
    return TheoremReport("salam80", n, True, total)


def _sweep_groups(theorem):
    def run(n, long_run, workers):
        from .groups import sweep_corpus

        return sweep_corpus(theorem, n)
    return run


# id -> (sweep, default bound, long-run bound)
THEOREMS = {
    "salam20": (_sweep_salam20, 6, 10),
    "salam30": (_sweep_salam30, 5, 6),
    "salam40": (_sweep_salam40, 4, 6),
    "salam65": (_sweep_salam65, 4, 4),
    "salam70": (_sweep_salam70, 6, 10),
    "salam80": (_sweep_salam80, 5, 7),
    "zahra10": (_sweep_groups("zahra10"), 8, 8),
    "zahra20": (_sweep_groups("zahra20"), 8, 8),
}


def verify_theorem(theorem, n, long_run=False, workers=None):
    if theorem not in THEOREMS:
        raise AlexError(f"unknown theorem id {theorem!r}; expected one of {sorted(THEOREMS)}")
    sweep, hi, long_hi = THEOREMS[theorem]
    _check_bound(f"verify {theorem}", n, hi, long_hi=long_hi, long_run=long_run)
    log.info("sweeping %s at n=%d (%s kernels)", theorem, n, kernels.BACKEND)
    return sweep(n, long_run, workers)
