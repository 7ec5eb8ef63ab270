"""Acceptance gate: eleven end-to-end criteria, all exact integer equality.

One test per criterion. Each either passes completely or fails honestly;
no tolerances, no skips.
"""

import pytest

from anticodes import catalog as cat
from anticodes import constructions as cons
from anticodes.bounds import antigriesmer_sum, griesmer, plotkin_anticode_floor
from anticodes.swrg import CosetGraph, analytic_parameters_l3, verify_swrg


@pytest.fixture(scope="module")
def entries():
    return cat.load_manifest()


def test_01_fixed_weight_distributions():
    wd = cons.fixed_weight_anticode(7, 4).weight_distribution()
    assert wd.counts == {0: 1, 16: 35, 20: 28}
    wd = cons.fixed_weight_anticode(8, 4).weight_distribution()
    assert wd.counts == {0: 1, 32: 35, 35: 64, 40: 28}


def test_02_dual_bch_complement():
    code = cons.complement(cons.dual_bch_code(3), K=6)
    wd = code.weight_distribution()
    assert (code.field.q, code.n, code.k, wd.min_weight) == (2, 56, 6, 26)
    assert wd.counts == {0: 1, 26: 7, 28: 35, 30: 21}
    _, defect = griesmer(2, 6, 26, 56)
    assert defect == 3
    assert antigriesmer_sum(2, 6, 30) == 56


def test_03_kasami_complements():
    base = cons.kasami_code(2)
    c6 = cons.complement(base, K=6)
    wd6 = c6.weight_distribution()
    assert (c6.n, c6.k, wd6.min_weight) == (48, 6, 22)
    assert wd6.nonzero_weights() == [22, 24, 26]
    for K, n in ((7, 112), (8, 240)):
        comp = cons.complement(base, K=K)
        wd = comp.weight_distribution()
        assert (comp.n, comp.k) == (n, K)
        assert wd.min_weight == n // 2 - 2
        full = 2 ** (K - 1)
        assert wd.counts[full] == 2 ** (K - 6) - 1


def test_04_transform_vs_enumeration_oracle(entries):
    verified = []
    for entry in entries:
        if entry.mode != "construct_and_enumerate":
            continue
        K = entry.build.get("complement_at")
        if K is None:
            continue
        comp = cat.build_code(entry.build)
        q = comp.field.q
        if q ** K > 2 ** 20:
            continue
        base_wd = cat.base_code(entry.build).weight_distribution()
        assert cons.transform_wd(base_wd, K) == comp.weight_distribution(), \
            entry.id
        verified.append((entry.id, q))
    assert len(verified) >= 15
    assert {q for _, q in verified} >= {2, 3, 4, 5}


def test_05_complementary_rs():
    code = cons.complementary_rs(2, 5, 0)
    wd = code.weight_distribution()
    assert (code.field.q, code.n, code.k, wd.min_weight) == (2, 29, 5, 14)
    _, defect = griesmer(2, 5, 14, 29)
    assert defect == 1
    assert code.is_minimal_exact() == (True, None)
    code4 = cons.complementary_rs(4, 3, 0)
    wd4 = code4.weight_distribution()
    assert (code4.field.q, code4.n, code4.k) == (4, 17, 3)
    assert wd4.nonzero_weights() == [12, 13, 14]
    assert code4.is_minimal_exact() == (True, None)
    assert wd.nonzero_weights() == [14, 15, 16, 17, 18]


def test_06_complementary_mds():
    code = cons.complementary_mds_trivial(4, 3)
    wd = code.weight_distribution()
    assert (code.field.q, code.n, code.k, wd.min_weight) == (4, 18, 3, 13)
    assert griesmer(4, 3, 13, 18)[1] == 0
    code5 = cons.complementary_mds_trivial(5, 3)
    wd5 = code5.weight_distribution()
    assert (code5.field.q, code5.n, code5.k, wd5.min_weight) == (5, 28, 3, 22)
    assert griesmer(5, 3, 22, 28)[1] == 0


def test_07_ovoid_and_two_subspace():
    comp = cons.complement(cons.ovoid_code(4), K=4)
    wd = comp.weight_distribution()
    assert (comp.field.q, comp.n, comp.k, wd.min_weight) == (4, 68, 4, 48)
    assert wd.counts == {0: 1, 48: 51, 52: 204}
    two = cons.two_subspace_code(3)
    assert two.weight_distribution().counts == {0: 1, 3: 16, 6: 64}
    comp2 = cons.complement(two, K=4)
    assert (comp2.field.q, comp2.n, comp2.k,
            comp2.min_distance()) == (3, 32, 4, 21)


def test_08_concatenation():
    code = cons.concatenate_with_simplex(cons.ovoid_code(4))
    wd = code.weight_distribution()
    assert (code.field.q, code.n, code.k) == (2, 51, 8)
    assert wd.counts == {0: 1, 24: 204, 32: 51}
    code2 = cons.concatenate_with_simplex(cons.two_subspace_code(4))
    assert (code2.field.q, code2.n, code2.k,
            code2.min_distance()) == (2, 30, 8, 8)
    comp = cons.complement(code2, K=8)
    wd = comp.weight_distribution()
    assert (comp.n, comp.k) == (225, 8)
    assert wd.nonzero_weights() == [112, 120]


def test_09_swrg_certificates():
    code = cons.complement(cons.dual_bch_code(3), K=6)
    cert = verify_swrg(code, l=3)
    assert cert.verdict == "is_l_swrg"
    assert cert.walk_counts == (2746, 2730, 2730)
    assert cert.analytic_l3 == (2746, 2730, 2730)
    assert cert.spectrum == {56: 1, 4: 7, 0: 35, -4: 21}
    # independent brute force: cube the full 64x64 adjacency matrix
    graph = CosetGraph(code)
    A = graph.adjacency_matrix()
    A2 = [[sum(ra[t] * A[t][v] for t in range(64)) for v in range(64)]
          for ra in A]
    row3 = [sum(A2[0][t] * A[t][v] for t in range(64)) for v in range(64)]
    conn = set(graph.connection_set)
    assert {row3[v] for v in conn} == {2746}
    assert {row3[v] for v in range(1, 64) if v not in conn} == {2730}
    assert row3[0] == 2730
    cert5 = verify_swrg(code, l=5)
    assert cert5.verdict == "is_l_swrg"
    assert cert5.conditions_middle          # w2 = n/2
    assert cert5.root_equation_holds


def test_10_bound_properties_across_catalog(entries):
    checked_involution = 0
    for entry in entries:
        if entry.mode != "construct_and_enumerate":
            continue
        code = cat.build_code(entry.build)
        wd = code.weight_distribution()
        q, n, k = code.field.q, code.n, code.k
        d, delta = wd.min_weight, wd.max_weight
        assert griesmer(q, k, d, n)[1] >= 0, entry.id
        if code.is_projective() and n < q ** (k - 1):
            s, defect, holds = (antigriesmer_sum(q, k, delta),
                                antigriesmer_sum(q, k, delta) - n,
                                antigriesmer_sum(q, k, delta) >= n)
            assert holds and defect >= 0, entry.id
            assert delta >= plotkin_anticode_floor(q, n), entry.id
            assert delta >= k, entry.id
        if code.ab_criterion() and q ** k <= 2 ** 16:
            ok, witness = code.is_minimal_exact()
            assert ok and witness is None, entry.id
        if code.is_projective() and delta < q ** (k - 1):
            twice = cons.transform_wd(cons.transform_wd(wd, k), k)
            assert twice == wd, entry.id
            checked_involution += 1
    assert checked_involution >= 10


def test_11_catalog_regression(entries):
    results, summary = cat.verify_catalog(entries, jobs=8)
    assert summary["failed"] == 0
    flagged_ids = {e.id for e in entries if e.known_discrepancy}
    assert flagged_ids == {"comp-rs-2-5-antigriesmer",
                           "eight-weight-q2m2-comp-6"}
    reported = {r.id: r for r in results}
    for fid in flagged_ids:
        assert reported[fid].verdict in ("pass", "known-discrepancy")
    for r in results:
        if r.id not in flagged_ids:
            assert r.ok, f"{r.id}: {r.mismatches}"
