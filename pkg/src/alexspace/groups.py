"""Finite topological groups given by Cayley tables.

On a finite group the topologies making multiplication and inversion
continuous are exactly the partitions into cosets of a normal subgroup
``N = V(e)``.  Such a group splits as ``V(e) x G/V(e)`` (indiscrete times
discrete) through ``phi(h, D) = g_D * h``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .bits import full, mask, members
from .errors import EdgeCaseError, GroupAxiomError, GroupTopologyError, SubgroupError
from .functional import find_generating_map, functional_topology
from .space import FiniteSpace, open_sets
from .uniform import quotient_by_R

SUBGROUP_SCAN_BOUND = 16


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    labels: tuple[str, ...] | None = None

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        row = self.table[a]
        return row.index(self.identity)

    def label(self, a):
        return self.labels[a] if self.labels else str(a)

    def left_coset(self, g, sub):
        return mask(self.table[g][h] for h in members(sub))

    def conj(self, g, h):
        return self.mul(self.mul(g, h), self.inv(g))


def validate_group(table, labels=None):
    order = len(table)
    if order < 1:
        raise GroupAxiomError("empty Cayley table")
    for a, row in enumerate(table):
        if len(row) != order:
            raise GroupAxiomError(f"row {a} has {len(row)} entries, expected {order}")
        for b, c in enumerate(row):
            if not isinstance(c, int) or not 0 <= c < order:
                raise GroupAxiomError(f"entry ({a},{b}) = {c!r} is not an element index")
    table = tuple(tuple(r) for r in table)
    ident = None
    for e in range(order):
        if all(table[e][x] == x and table[x][e] == x for x in range(order)):
            ident = e
            break
    if ident is None:
        raise GroupAxiomError("no identity element")
    for a in range(order):
        if not any(table[a][b] == ident and table[b][a] == ident for b in range(order)):
            raise GroupAxiomError(f"element {a} has no two-sided inverse")
    for a in range(order):
        for b in range(order):
            ab = table[a][b]
            for c in range(order):
                if table[ab][c] != table[a][table[b][c]]:
                    raise GroupAxiomError(f"associativity fails for triple ({a}, {b}, {c})")
    if labels is not None:
        if len(labels) != order:
            raise GroupAxiomError(f"{len(labels)} labels for a group of order {order}")
        labels = tuple(str(s) for s in labels)
    return FiniteGroup(order, table, ident, labels)


def group_from_json(doc):
    if "order" not in doc or "table" not in doc:
        raise GroupAxiomError("group file needs 'order' and 'table'")
    g = validate_group(doc["table"], doc.get("labels"))
    if g.order != doc["order"]:
        raise GroupAxiomError(f"'order' is {doc['order']} but the table has {g.order} rows")
    return g


def subgroup_violation(g, sub):
    """Reason ``sub`` (a bitmask) is not a subgroup, or ``None``."""
    if not (sub >> g.identity) & 1:
        return f"identity {g.identity} missing"
    for a in members(sub):
        if not (sub >> g.inv(a)) & 1:
            return f"inverse of {a} missing"
        for b in members(sub):
            if not (sub >> g.mul(a, b)) & 1:
                return f"not closed: {a}*{b} = {g.mul(a, b)}"
    return None


def normality_violation(g, sub):
    for x in range(g.order):
        for h in members(sub):
            c = g.conj(x, h)
            if not (sub >> c) & 1:
                return f"{x}*{h}*{x}^-1 = {c} is outside the subgroup"
    return None


def normal_subgroups(g):
    """All normal subgroups as bitmasks, ascending by (size, mask)."""
    if g.order > SUBGROUP_SCAN_BOUND:
        raise SubgroupError(f"subgroup scan is limited to order {SUBGROUP_SCAN_BOUND}")
    e = 1 << g.identity
    out = []
    others = [x for x in range(g.order) if x != g.identity]
    for bits in range(1 << len(others)):
        sub = e | mask(others[i] for i in range(len(others)) if (bits >> i) & 1)
        if subgroup_violation(g, sub) is None and normality_violation(g, sub) is None:
            out.append(sub)
    return sorted(out, key=lambda s: (bin(s).count("1"), s))


def group_topology_violation(g, space):
    """First failure of continuity or translation invariance, or ``None``."""
    nb = space.min_nbhd
    for a in range(g.order):
        for b in range(g.order):
            ab = g.mul(a, b)
            for c in members(nb[a]):
                for d in members(nb[b]):
                    if not (nb[ab] >> g.mul(c, d)) & 1:
                        return f"multiplication not continuous at ({a}, {b}): {c}*{d} leaves V({ab})"
        ai = g.inv(a)
        for c in members(nb[a]):
            if not (nb[ai] >> g.inv(c)) & 1:
                return f"inversion not continuous at {a}: inverse of {c} leaves V({ai})"
        if nb[a] != g.left_coset(a, nb[g.identity]):
            return f"V({a}) differs from {a}*V(e)"
    return None


@dataclass(frozen=True)
class GroupWithTopology:
    group: FiniteGroup
    space: FiniteSpace

    def __post_init__(self):
        if self.space.n != self.group.order:
            raise GroupTopologyError("space and group have different sizes")
        why = group_topology_violation(self.group, self.space)
        if why:
            raise GroupTopologyError(why)

    @property
    def v_e(self):
        return self.space.min_nbhd[self.group.identity]

    def cosets(self):
        """Distinct cosets of ``V(e)``, each with its least element as representative."""
        return self.space.distinct_blocks()


def coset_topology(g, sub):
    if not isinstance(sub, int):
        sub = mask(sub)
    if sub & ~full(g.order):
        raise SubgroupError("subgroup mentions elements outside the group")
    why = subgroup_violation(g, sub)
    if why:
        raise SubgroupError(f"not a subgroup: {why}")
    why = normality_violation(g, sub)
    if why:
        raise SubgroupError(f"not normal: {why}")
    space = FiniteSpace(g.order, tuple(g.left_coset(x, sub) for x in range(g.order)))
    return GroupWithTopology(g, space)


def subgroup_table(g, sub):
    elems = members(sub)
    idx = {x: i for i, x in enumerate(elems)}
    table = [[idx[g.mul(a, b)] for b in elems] for a in elems]
    labels = [g.label(x) for x in elems] if g.labels else None
    return validate_group(table, labels)


def quotient_group(g, sub):
    """``G/N`` with cosets ordered by their least element."""
    cosets = sorted({g.left_coset(x, sub) for x in range(g.order)}, key=lambda c: c & -c)
    idx = {c: i for i, c in enumerate(cosets)}
    reps = [members(c)[0] for c in cosets]
    table = [[idx[g.left_coset(g.mul(a, b), sub)] for b in reps] for a in reps]
    return validate_group(table), cosets


@dataclass
class ProductDecomposition:
    E: FiniteSpace
    F: FiniteSpace
    phi: tuple[int, ...]
    block_reps: tuple[int, ...]
    e_elements: tuple[int, ...]
    E_group: FiniteGroup
    F_group: FiniteGroup
    product: FiniteSpace
    checks: dict = field(default_factory=dict)

    def __call__(self, h, d):
        return self.phi[d * self.E.n + h]

    def to_json(self):
        return {
            "E": self.E.to_json(),
            "F": self.F.to_json(),
            "V_e": list(self.e_elements),
            "block_reps": list(self.block_reps),
            "phi": [[h, d, self(h, d)] for d in range(self.F.n) for h in range(self.E.n)],
            "checks": self.checks,
        }


def product_decomposition(gt):
    g = gt.group
    ve = gt.v_e
    if bin(ve).count("1") < 2:
        raise EdgeCaseError("V(e) is a single point; the non-discrete factor would be empty of structure")
    e_elems = tuple(members(ve))
    E = gt.space.subspace(e_elems)
    F_group, cosets = quotient_group(g, ve)
    F = FiniteSpace.discrete(len(cosets))
    reps = tuple(members(c)[0] for c in cosets)
    k = len(e_elems)
    phi = tuple(g.mul(reps[d], e_elems[h]) for d in range(len(cosets)) for h in range(k))
    product = FiniteSpace(
        k * len(cosets),
        tuple(
            mask(d * k + hh for hh in members(E.min_nbhd[h]))
            for d in range(len(cosets)) for h in range(k)
        ),
    )
    dec = ProductDecomposition(E, F, phi, reps, e_elems, subgroup_table(g, ve), F_group, product)
    dec.checks = decomposition_checks(gt, dec)
    return dec


def decomposition_checks(gt, dec):
    """Injective, surjective, continuous and open, each checked exhaustively."""
    phi = dec.phi
    injective = len(set(phi)) == len(phi)
    surjective = set(phi) == set(range(gt.group.order))

    def image(w):
        return mask(phi[p] for p in members(w))

    def preimage(u):
        return mask(p for p, x in enumerate(phi) if (u >> x) & 1)

    g_opens = open_sets(gt.space).sets
    p_opens = open_sets(dec.product).sets
    continuous = all(preimage(u) in p_opens for u in g_opens)
    is_open = all(image(w) in g_opens for w in p_opens)
    return {"injective": injective, "surjective": surjective, "continuous": continuous, "open": is_open}


def coset_relation_matches(gt):
    """``V(g) = V(h)`` iff ``h^-1 g`` lies in ``V(e)``, over all pairs."""
    g = gt.group
    nb = gt.space.min_nbhd
    ve = gt.v_e
    return all(
        (nb[a] == nb[b]) == bool((ve >> g.mul(g.inv(b), a)) & 1)
        for a in range(g.order) for b in range(g.order)
    )


def check_zahra10(gt):
    g = gt.group
    sp = gt.space
    translates = all(
        sp.min_nbhd[x] == g.left_coset(x, gt.v_e) and sp.is_open(sp.min_nbhd[x]) for x in range(g.order)
    )
    ve_open = sp.is_open(gt.v_e)
    report = {
        "alexandroff": translates,
        "v_e_open": ve_open,
        "coset_relation": coset_relation_matches(gt),
        "quotient_discrete": quotient_by_R(sp).discrete,
        "E_indiscrete": sp.subspace(members(gt.v_e)) == FiniteSpace.indiscrete(bin(gt.v_e).count("1")),
        "decomposition": None,
        "edge_case": None,
    }
    try:
        dec = product_decomposition(gt)
    except EdgeCaseError as exc:
        report["edge_case"] = str(exc)
    else:
        ok = all(dec.checks.values()) and dec.E.n >= 2 and dec.E != FiniteSpace.discrete(dec.E.n)
        report["decomposition"] = ok
        report["witness"] = dec.to_json()
    report["agree"] = len({v for k, v in report.items()
                           if k in ("alexandroff", "v_e_open", "decomposition") and v is not None}) == 1
    return report


def check_zahra20(gt):
    sp = gt.space
    ve_size = bin(gt.v_e).count("1")
    f = find_generating_map(sp)
    functional = f is not None and functional_topology(f) == sp
    report = check_zahra10(gt)
    report.update({
        "v_e_open_and_finite": sp.is_open(gt.v_e) and ve_size <= gt.group.order,
        "functional_alexandroff": functional,
        "generating_map": None if f is None else list(f.f),
        "F_finite_discrete": report["quotient_discrete"],
    })
    report["agree"] = report["agree"] and functional == report["v_e_open_and_finite"]
    return report


def load_corpus():
    """Bundled groups as ``{name: FiniteGroup}`` in name order."""
    root = resources.files("alexspace") / "data" / "groups"
    out = {}
    for item in sorted(root.iterdir(), key=lambda p: p.name):
        if item.name.endswith(".json"):
            out[item.name[:-5]] = group_from_json(json.loads(item.read_text()))
    return out


def sweep_corpus(theorem, max_order=8):
    from .enumeration import TheoremReport

    count = 0
    for name, g in load_corpus().items():
        if g.order > max_order:
            continue
        for sub in normal_subgroups(g):
            count += 1
            gt = coset_topology(g, sub)
            rep = check_zahra20(gt) if theorem == "zahra20" else check_zahra10(gt)
            dec_ok = rep["decomposition"] is not False
            ok = (rep["agree"] and rep["coset_relation"] and rep["quotient_discrete"]
                  and rep["E_indiscrete"] and dec_ok)
            if ok and bin(sub).count("1") >= 2:
                ok = rep["decomposition"] is True
            if not ok:
                return TheoremReport(theorem, max_order, False, count, {"group": name, "subgroup": members(sub)})
    return TheoremReport(theorem, max_order, True, count)
