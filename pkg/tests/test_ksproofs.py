from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wittingrays.ksproofs import (
    check_coloring,
    enumerate_parity_proofs,
    incidence_matrix,
    ks_colorable,
    parity_analysis,
    verify_parity_proof,
)
from wittingrays.systems import BasisTable, build_orthogonality_graph, enumerate_bases
from wittingrays.witting import coordinate_rays


@pytest.fixture(scope="module")
def e8_parity(e8):
    return parity_analysis(incidence_matrix(e8.system, e8.bases))


@pytest.fixture(scope="module")
def single_basis():
    s = build_orthogonality_graph(coordinate_rays())
    return s, enumerate_bases(s)


def test_incidence_weights(penrose, e8, single_basis):
    m = incidence_matrix(penrose.system, penrose.bases)
    assert m.n_bases == 40 and set(m.row_weights()) == {4} and set(m.column_weights()) == {4}
    m8 = incidence_matrix(e8.system, e8.bases)
    assert (m8.n_bases, m8.n_rays) == (2025, 120)
    assert set(m8.row_weights()) == {8} and set(m8.column_weights()) == {135}
    s, b = single_basis
    assert incidence_matrix(s, b).rows == (0b1111,)


def test_penrose_has_no_parity_proofs(penrose):
    a = parity_analysis(incidence_matrix(penrose.system, penrose.bases))
    assert a.rank + a.kernel_dim == 40
    assert not a.odd_weight_exists and a.proof_count == 0
    assert enumerate_parity_proofs(a) == []


def test_single_basis_kernel_is_trivial(single_basis):
    a = parity_analysis(incidence_matrix(*single_basis))
    assert a.kernel_dim == 0 and a.proof_count == 0


def test_e8_parity_count(e8_parity):
    a = e8_parity
    assert a.rank + a.kernel_dim == 2025
    assert a.odd_weight_exists
    assert a.proof_count == 2 ** (a.kernel_dim - 1) > 10**9


def test_kernel_basis_is_in_kernel(e8, e8_parity):
    bases = list(e8.bases)
    for v in e8_parity.kernel_basis:
        assert e8_parity.matrix.combine(v) == 0
        chosen = [i for i in range(v.bit_length()) if v >> i & 1]
        counts = [0] * 120
        for i in chosen:
            for r in bases[i]:
                counts[r] += 1
        assert all(c % 2 == 0 for c in counts)


def test_e8_certificates(e8, e8_parity):
    certs = enumerate_parity_proofs(e8_parity, limit=100)
    assert len(certs) == 100
    weights = [len(c) for c in certs]
    assert weights == sorted(weights)
    assert len({c.basis_indices for c in certs}) == 100
    for c in certs:
        assert verify_parity_proof(e8.bases, c.basis_indices).valid


def test_certificate_limits(e8_parity):
    assert enumerate_parity_proofs(e8_parity, limit=0) == []
    capped = enumerate_parity_proofs(e8_parity, limit=5, max_weight=11)
    assert all(len(c) <= 11 for c in capped)


def test_verifier_rejections(e8):
    assert not verify_parity_proof(e8.bases, [])
    full = verify_parity_proof(e8.bases, range(2025))
    assert not full.valid and "135" in full.reason
    assert not verify_parity_proof(e8.bases, [0, 0, 1])
    assert not verify_parity_proof(e8.bases, [5000])


def small_tables():
    # random small incidence structures: up to 12 "bases" over 8 "rays"
    row = st.sets(st.integers(0, 7), min_size=1, max_size=4).map(lambda s: tuple(sorted(s)))
    return st.lists(row, min_size=1, max_size=12)


@settings(max_examples=1000, deadline=None)
@given(small_tables())
def test_proof_count_matches_brute_force(rows):
    a = parity_analysis(incidence_matrix(8, rows))
    n = len(rows)
    kernel = 0
    odd = 0
    for bits in range(1 << n):
        chosen = [i for i in range(n) if bits >> i & 1]
        counts = [0] * 8
        for i in chosen:
            for r in rows[i]:
                counts[r] += 1
        if all(c % 2 == 0 for c in counts):
            kernel += 1
            odd += len(chosen) % 2
    assert kernel == 2**a.kernel_dim
    assert odd == a.proof_count
    for c in enumerate_parity_proofs(a, limit=50):
        assert verify_parity_proof(rows, c.basis_indices).valid
    found = enumerate_parity_proofs(a, limit=10**6)
    assert len(found) == odd


def test_small_kernel_enumeration_is_lightest_first():
    # a triangle plus three copies of one pair: kernel of dimension 3
    rows = [(0, 1), (1, 2), (0, 2), (3, 4), (3, 4), (3, 4)]
    a = parity_analysis(incidence_matrix(5, rows))
    assert a.kernel_dim == 3 and a.proof_count == 4
    certs = enumerate_parity_proofs(a, limit=10)
    assert [c.basis_indices for c in certs] == [(0, 1, 2), (0, 1, 2, 3, 4), (0, 1, 2, 3, 5), (0, 1, 2, 4, 5)]


def test_penrose_noncolorable(penrose):
    out = ks_colorable(penrose.system, penrose.bases)
    assert not out.colorable and out.complete and out.assignment is None
    assert out.nodes_explored > 0


def test_noncolorable_under_random_orders(penrose):
    for seed in range(5):
        assert not ks_colorable(penrose.system, penrose.bases, seed=seed).colorable


def test_worker_count_does_not_change_outcome(penrose):
    one = ks_colorable(penrose.system, penrose.bases)
    many = ks_colorable(penrose.system, penrose.bases, workers=3)
    assert one == many


def test_f148_noncolorable(f148):
    assert not ks_colorable(f148.system, f148.bases).colorable


def test_single_basis_colorable(single_basis):
    s, b = single_basis
    out = ks_colorable(s, b)
    assert out.colorable and sum(out.assignment.values()) == 1
    assert check_coloring(s, b, out.assignment)


def test_partial_penrose_colorability_is_consistent(penrose):
    # sub-tables: when an assignment is found it must re-check
    for k in (5, 10, 20):
        sub = BasisTable(penrose.bases.bases[:k], 4)
        out = ks_colorable(penrose.system, sub)
        if out.colorable:
            assert check_coloring(penrose.system, sub, out.assignment)
            again = ks_colorable(penrose.system, sub, seed=1)
            assert again.colorable


def test_parity_and_coloring_are_independent(penrose):
    for drop in range(40):
        rest = penrose.bases.bases[:drop] + penrose.bases.bases[drop + 1 :]
        a = parity_analysis(incidence_matrix(penrose.system, rest))
        assert not a.odd_weight_exists
    # the full system is still noncolorable afterwards
    assert not ks_colorable(penrose.system, penrose.bases).colorable


def test_check_coloring_rejects_bad_assignments(single_basis):
    s, b = single_basis
    labels = s.labels
    assert not check_coloring(s, b, {x: 0 for x in labels})
    assert not check_coloring(s, b, {x: 1 for x in labels})
    assert all(check_coloring(s, b, {x: int(x == y) for x in labels}) for y in labels)
