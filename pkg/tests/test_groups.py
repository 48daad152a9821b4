import itertools

import pytest

from alexspace import (
    FiniteSpace, GroupWithTopology, check_zahra10, check_zahra20, coset_topology, load_corpus,
    normal_subgroups, open_sets, product_decomposition, validate_group,
)
from alexspace.bits import members
from alexspace.errors import EdgeCaseError, GroupAxiomError, GroupTopologyError, SubgroupError
from alexspace.groups import coset_relation_matches, group_from_json

CORPUS = load_corpus()


def cyclic(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def test_corpus_contents():
    assert sorted(CORPUS) == ["d4", "q8", "s3", "z2", "z2xz2", "z3", "z4", "z6", "z8"]
    assert {k: g.order for k, g in CORPUS.items()} == {
        "d4": 8, "q8": 8, "s3": 6, "z2": 2, "z2xz2": 4, "z3": 3, "z4": 4, "z6": 6, "z8": 8}


def test_validate_cyclic():
    g = validate_group(cyclic(2))
    assert g.identity == 0 and g.order == 2
    assert validate_group(cyclic(4)).inv(1) == 3


def test_validate_identity_elsewhere():
    # relabel Z3 so the identity is element 2
    perm = {0: 2, 1: 0, 2: 1}
    inv = {v: k for k, v in perm.items()}
    t = [[perm[(inv[a] + inv[b]) % 3] for b in range(3)] for a in range(3)]
    assert validate_group(t).identity == 2


def test_validate_rejects_non_associative():
    t = [list(r) for r in CORPUS["z2xz2"].table]
    t[1][2] = 2
    first = next((a, b, c) for a, b, c in itertools.product(range(4), repeat=3)
                 if t[t[a][b]][c] != t[a][t[b][c]])
    with pytest.raises(GroupAxiomError, match=rf"\({first[0]}, {first[1]}, {first[2]}\)"):
        validate_group(t)


def test_validate_rejects_other_defects():
    with pytest.raises(GroupAxiomError, match="identity"):
        validate_group([[1, 0], [1, 0]])
    with pytest.raises(GroupAxiomError, match="inverse"):
        validate_group([[0, 1], [1, 1]])
    with pytest.raises(GroupAxiomError):
        validate_group([[0, 1], [1]])
    with pytest.raises(GroupAxiomError):
        group_from_json({"order": 3, "table": cyclic(2)})


def test_normal_subgroups_counts():
    counts = {k: len(normal_subgroups(g)) for k, g in CORPUS.items()}
    # S3 has exactly three normal subgroups; every subgroup of an abelian group is normal
    assert counts["s3"] == 3 and counts["z4"] == 3 and counts["z2xz2"] == 5
    assert counts["q8"] == 6 and counts["d4"] == 6


def test_coset_topology_z4():
    gt = coset_topology(CORPUS["z4"], [0, 2])
    assert sorted(map(tuple, gt.space.basis())) == [(0, 2), (0, 2), (1, 3), (1, 3)]
    assert gt.v_e == 0b0101


def test_coset_topology_trivial_is_discrete():
    for g in CORPUS.values():
        assert coset_topology(g, [g.identity]).space == FiniteSpace.discrete(g.order)


def test_coset_topology_s3():
    s3 = CORPUS["s3"]
    a3 = next(s for s in normal_subgroups(s3) if bin(s).count("1") == 3)
    blocks = set(coset_topology(s3, a3).space.min_nbhd)
    assert len(blocks) == 2 and all(bin(b).count("1") == 3 for b in blocks)


def test_coset_topology_rejects():
    with pytest.raises(SubgroupError, match="not a subgroup"):
        coset_topology(CORPUS["z4"], [0, 1])
    s3 = CORPUS["s3"]
    # an order-2 subgroup of S3 is not normal
    order2 = next(members(s) for s in range(1 << 6) if bin(s).count("1") == 2 and s & 1
                  and s3.mul(members(s)[1], members(s)[1]) == 0)
    with pytest.raises(SubgroupError, match="not normal"):
        coset_topology(s3, order2)


def test_arbitrary_space_rejected_with_witness():
    z4 = CORPUS["z4"]
    with pytest.raises(GroupTopologyError, match="continuous|differs"):
        GroupWithTopology(z4, FiniteSpace.from_basis([[0], [0, 1], [2], [3]]))


def test_group_topologies_are_coset_topologies():
    # every topology on Z4 / Z2xZ2 passing the continuity checks is a coset topology
    from alexspace import enumerate_topologies
    for name in ("z4", "z2xz2"):
        g = CORPUS[name]
        expected = {coset_topology(g, s).space for s in normal_subgroups(g)}
        found = set()
        for sp in enumerate_topologies(4):
            try:
                found.add(GroupWithTopology(g, sp).space)
            except GroupTopologyError:
                pass
        assert found == expected


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_translates_and_coset_relation(name):
    g = CORPUS[name]
    for s in normal_subgroups(g):
        gt = coset_topology(g, s)
        for x in range(g.order):
            assert gt.space.min_nbhd[x] == g.left_coset(x, gt.v_e)
        assert coset_relation_matches(gt)


def test_zahra10_z4():
    rep = check_zahra10(coset_topology(CORPUS["z4"], [0, 2]))
    assert rep["v_e_open"] and rep["decomposition"] and rep["agree"]
    w = rep["witness"]
    assert w["E"]["basis"] == [[0, 1], [0, 1]] and w["F"]["basis"] == [[0], [1]]


def test_zahra10_discrete_edge_case():
    rep = check_zahra10(coset_topology(CORPUS["z4"], [0]))
    assert rep["v_e_open"] and rep["decomposition"] is None and rep["edge_case"]


def test_zahra10_s3():
    s3 = CORPUS["s3"]
    a3 = next(s for s in normal_subgroups(s3) if bin(s).count("1") == 3)
    rep = check_zahra10(coset_topology(s3, a3))
    assert rep["agree"] and rep["witness"]["E"]["n"] == 3 and rep["witness"]["F"]["n"] == 2
    assert rep["E_indiscrete"]


def test_zahra20_examples():
    z4 = coset_topology(CORPUS["z4"], [0, 2])
    rep = check_zahra20(z4)
    assert rep["functional_alexandroff"] and rep["generating_map"] == [2, 3, 0, 1]
    k = CORPUS["z2xz2"]
    rep = check_zahra20(coset_topology(k, [0, 1]))
    assert rep["functional_alexandroff"] and rep["agree"]
    for g in CORPUS.values():
        rep = check_zahra20(coset_topology(g, [g.identity]))
        assert rep["generating_map"] == list(range(g.order))


def test_product_decomposition_z4():
    dec = product_decomposition(coset_topology(CORPUS["z4"], [0, 2]))
    assert dec.block_reps == (0, 1)
    assert sorted(dec.phi) == [0, 1, 2, 3]
    assert dec(1, 1) == 3 and dec(1, 0) == 2
    assert all(dec.checks.values())


def test_product_decomposition_s3():
    s3 = CORPUS["s3"]
    a3 = next(s for s in normal_subgroups(s3) if bin(s).count("1") == 3)
    dec = product_decomposition(coset_topology(s3, a3))
    assert len(dec.phi) == 6 and all(dec.checks.values())
    assert len(open_sets(dec.product).sets) == 4


def test_product_decomposition_single_block():
    dec = product_decomposition(coset_topology(CORPUS["z2"], [0, 1]))
    assert dec.F.n == 1 and dec.E == FiniteSpace.indiscrete(2) and dec.phi == (0, 1)


def test_product_decomposition_edge_case():
    with pytest.raises(EdgeCaseError):
        product_decomposition(coset_topology(CORPUS["z3"], [0]))


def test_decomposition_factors_are_groups():
    dec = product_decomposition(coset_topology(CORPUS["d4"], [0, 2]))
    assert dec.E_group.order == 2 and dec.F_group.order == 4
