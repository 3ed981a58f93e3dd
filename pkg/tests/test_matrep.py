from itertools import product

import numpy as np
import pytest

from conftest import random_unitary
from weylclifford.matrep import (
    GeneratorSet,
    ReducibleRepresentationError,
    WeylRelationError,
    clifford_generators,
    conjugate_generators,
    conjugated_triple,
    degenerate_pair,
    extract_tau_site,
    fourier,
    lame_residual,
    matrix_from_json,
    matrix_to_json,
    pauli,
    reducible_pair,
    reducible_pair_permutation,
    span_dimension,
    standardize_weyl_pair,
    t_generators,
    tau_triple,
    verify_relations,
    weyl_pair,
)


def zeta(l):
    return np.exp(2j * np.pi / l)


def as_set(mats, l, variant="custom"):
    return GeneratorSet(tuple(mats), l, zeta(l), variant)


def monomials(gens):
    powers = [
        [np.linalg.matrix_power(t, e) for e in range(gens.l)] for t in gens.matrices
    ]
    out = []
    for exps in product(range(gens.l), repeat=len(gens)):
        m = powers[0][exps[0]]
        for j in range(1, len(exps)):
            m = m @ powers[j][exps[j]]
        out.append(m)
    return out


# ---------------------------------------------------------------------------
# small building blocks
# ---------------------------------------------------------------------------

def test_pauli_entries_and_products():
    assert np.array_equal(pauli(1), np.array([[0, 1], [1, 0]]))
    assert np.array_equal(pauli(2), np.array([[0, -1j], [1j, 0]]))
    assert np.array_equal(pauli(3), np.array([[1, 0], [0, -1]]))
    assert np.linalg.norm(pauli(1) @ pauli(2) - 1j * pauli(3)) < 1e-15
    for i in (1, 2, 3):
        assert np.allclose(pauli(i) @ pauli(i), np.eye(2))
    with pytest.raises(ValueError):
        pauli(4)


def test_weyl_pair_basics():
    u, v = weyl_pair(2)
    assert np.allclose(u, pauli(1)) and np.allclose(v, pauli(3))
    _, v3 = weyl_pair(3)
    assert np.allclose(np.diag(v3), [1, zeta(3), zeta(3) ** 2])
    with pytest.raises(ValueError):
        weyl_pair(1)


def test_weyl_pair_relations_and_unitarity():
    for l in range(2, 9):
        u, v = weyl_pair(l)
        assert np.linalg.norm(u @ v - zeta(l) * v @ u) <= 1e-12
        for m in (u, v):
            assert np.linalg.norm(m.conj().T @ m - np.eye(l)) <= 1e-12
            assert np.linalg.norm(np.linalg.matrix_power(m, l) - np.eye(l)) <= 1e-12
        assert abs(np.linalg.det(u @ v)) > 0.5


def test_degenerate_pair():
    for lam in (2.5, 0.3 - 1.1j):
        s, v = degenerate_pair(5, 0.0, lam)
        assert np.allclose(s @ v, lam * v @ s, atol=1e-12)
        assert abs(np.linalg.det(s)) < 1e-14
        assert np.allclose(s[-1], 0)
    s, v = degenerate_pair(4, 1.0, zeta(4))
    u0, v0 = weyl_pair(4)
    assert np.allclose(s, u0) and np.allclose(v, v0)


# ---------------------------------------------------------------------------
# ordered triples
# ---------------------------------------------------------------------------

def test_tau_triple_is_pauli_at_l2():
    t1, t2, t3 = tau_triple(2)
    for got, want in zip((t1, t2, t3), (pauli(1), pauli(2), pauli(3))):
        assert np.allclose(got, want, atol=1e-15)


def test_triple_relations_both_variants():
    for l in range(2, 8):
        for variant in ("tau", "taw"):
            trip = tau_triple(l, variant)
            z = zeta(l)
            for a in range(3):
                for b in range(a + 1, 3):
                    dev = np.linalg.norm(trip[a] @ trip[b] - z * trip[b] @ trip[a])
                    assert dev <= 1e-12, (l, variant, a, b)
                assert (
                    np.linalg.norm(np.linalg.matrix_power(trip[a], l) - np.eye(l))
                    <= 1e-11
                )
    with pytest.raises(ValueError):
        tau_triple(3, "bogus")


def test_taw_third_member_value():
    u, v = weyl_pair(3)
    nu = np.exp(4j * np.pi / 3)
    _, _, t3 = tau_triple(3, "taw")
    assert np.linalg.norm(t3 - nu * u.conj().T @ v) < 1e-14
    for l in (2, 3, 4, 6):
        t3 = tau_triple(l, "taw")[2]
        assert np.linalg.norm(np.linalg.matrix_power(t3, l) - np.eye(l)) <= 1e-12


def test_conjugated_triple():
    for got, want in zip(conjugated_triple(3, np.eye(3)), tau_triple(3, "taw")):
        assert np.allclose(got, want)
    rng = np.random.default_rng(0)
    for m in (fourier(4), random_unitary(4, rng), rng.normal(size=(4, 4)) + np.eye(4) * 3):
        trip = conjugated_triple(4, m)
        rep = verify_relations(as_set(trip, 4), tol=1e-8)
        assert rep.passed
    with pytest.raises(ValueError):
        conjugated_triple(3, np.zeros((3, 3)))
    with pytest.raises(ValueError):
        conjugated_triple(3, np.ones((2, 3)))


def test_representative_diagram_triples():
    # three conjugation-orbit representatives, checked relation-wise
    l = 5
    u, v = weyl_pair(l)
    nu = tau_triple(l, "taw")[2] @ np.linalg.inv(u.conj().T @ v)
    reps = (
        tau_triple(l, "tau"),
        tau_triple(l, "taw"),
        conjugated_triple(l, fourier(l)),
    )
    for trip in reps:
        assert verify_relations(as_set(trip, l), tol=1e-10).passed
    assert np.allclose(nu, nu[0, 0] * np.eye(l))


# ---------------------------------------------------------------------------
# generator sets
# ---------------------------------------------------------------------------

def test_clifford_generators_basics():
    g = clifford_generators(1)
    assert len(g) == 2 and g.dim == 2
    assert np.allclose(g.matrices[0], pauli(1))
    assert np.allclose(g.matrices[1], pauli(2))
    with pytest.raises(ValueError):
        clifford_generators(0)


def test_clifford_anticommutation():
    for n in (1, 2, 3):
        for odd in (False, True):
            g = clifford_generators(n, include_odd=odd)
            mats = g.matrices
            eye = np.eye(g.dim)
            for j in range(len(mats)):
                for k in range(len(mats)):
                    anti = mats[j] @ mats[k] + mats[k] @ mats[j]
                    want = 2 * eye if j == k else 0 * eye
                    assert np.linalg.norm(anti - want) <= 1e-12


def test_clifford_euclidean_square():
    rng = np.random.default_rng(1)
    for n in (1, 2, 3):
        for odd in (False, True):
            g = clifford_generators(n, include_odd=odd)
            x = rng.normal(size=len(g))
            s = sum(c * m for c, m in zip(x, g.matrices))
            assert np.linalg.norm(s @ s - np.sum(x**2) * np.eye(g.dim)) <= 1e-12


def test_t_generators_dimensions_and_relations():
    for l in (2, 3, 4):
        for n_gens in range(1, 7):
            for variant in ("tau", "taw"):
                g = t_generators(n_gens, l, variant)
                assert g.dim == l ** ((n_gens + 1) // 2)
                assert len(g) == n_gens
                assert verify_relations(g, tol=1e-10).passed, (n_gens, l, variant)
    with pytest.raises(ValueError):
        t_generators(0, 3)
    with pytest.raises(ValueError):
        t_generators(2, 1)
    with pytest.raises(ValueError):
        t_generators(2, 3, "pauli")


def test_t_generators_pair_is_weyl_pair_in_taw():
    for l in (2, 3, 5):
        g = t_generators(2, l, "taw")
        u, v = weyl_pair(l)
        assert np.allclose(g.matrices[0], u, atol=1e-14)
        assert np.allclose(g.matrices[1], v, atol=1e-14)


def test_l2_degeneration_matches_clifford():
    for n_gens in range(1, 8):
        g = t_generators(n_gens, 2, "tau")
        c = clifford_generators(n_gens // 2, include_odd=bool(n_gens % 2))
        assert g.dim == c.dim
        for a, b in zip(g.matrices, c.matrices):
            assert np.allclose(a, b, atol=1e-14)


def test_odd_generator_is_diagonal():
    for l in (2, 3, 4):
        for n_gens in (1, 3, 5):
            g = t_generators(n_gens, l, "tau")
            last = g.matrices[-1]
            assert np.linalg.norm(last - np.diag(np.diag(last))) <= 1e-14


def test_numeric_power_sum_identity():
    rng = np.random.default_rng(7)
    for l in (2, 3, 4):
        for n_gens in (2, 3, 5):
            g = t_generators(n_gens, l, "tau")
            for _ in range(3):
                x = rng.normal(size=n_gens) + 1j * rng.normal(size=n_gens)
                assert lame_residual(g, x) <= 1e-9
    with pytest.raises(ValueError):
        lame_residual(t_generators(2, 3), [1.0])


# ---------------------------------------------------------------------------
# site extraction
# ---------------------------------------------------------------------------

def test_extract_tau_site_matches_embedding():
    for l in (2, 3, 4):
        for pairs in (1, 2, 3):
            g = t_generators(2 * pairs, l, "tau")
            trip = tau_triple(l, "tau")
            eye = np.eye(l, dtype=complex)
            for k in range(1, pairs + 1):
                for i in (1, 2, 3):
                    want = np.eye(1, dtype=complex)
                    for s in range(1, pairs + 1):
                        want = np.kron(want, trip[i - 1] if s == k else eye)
                    got = extract_tau_site(g, i, k)
                    assert np.linalg.norm(got - want) <= 1e-10, (l, pairs, i, k)


def test_extract_tau_site_is_jordan_wigner_at_l2():
    g = t_generators(4, 2, "tau")
    s3 = extract_tau_site(g, 3, 2)
    assert np.allclose(s3, np.kron(np.eye(2), pauli(3)), atol=1e-13)


def test_extract_tau_site_validation():
    g = t_generators(4, 3, "tau")
    with pytest.raises(ValueError):
        extract_tau_site(g, 4, 1)
    with pytest.raises(ValueError):
        extract_tau_site(g, 1, 3)
    gw = t_generators(4, 3, "taw")
    with pytest.raises(ValueError):
        extract_tau_site(gw, 1, 1)


# ---------------------------------------------------------------------------
# spans
# ---------------------------------------------------------------------------

def test_span_weyl_words():
    for l in (2, 3, 4):
        u, v = weyl_pair(l)
        words = [
            np.linalg.matrix_power(u, a) @ np.linalg.matrix_power(v, b)
            for a in range(l)
            for b in range(l)
        ]
        assert span_dimension(words) == l * l
    assert span_dimension([np.eye(5)]) == 1
    with pytest.raises(ValueError):
        span_dimension([])


def test_span_even_monomial_grids():
    for n_gens, l in ((2, 2), (2, 3), (2, 4), (4, 2), (4, 3), (4, 4), (6, 2), (6, 3)):
        for variant in ("tau", "taw"):
            g = t_generators(n_gens, l, variant)
            assert span_dimension(monomials(g)) == l**n_gens, (n_gens, l, variant)


def test_span_even_grid_6_4_by_trace_orthogonality():
    # 4^6 = 4096 monomials in 64x64 matrices: pairwise orthogonality
    # under the trace inner product already gives full rank, and for
    # these unitary monomials (t^a)^dag t^b is again a monomial, so it
    # is enough that every nonzero monomial is traceless
    g = t_generators(6, 4, "tau")
    for i, m in enumerate(monomials(g)):
        tr = np.trace(m)
        if i == 0:
            assert abs(tr - g.dim) < 1e-9
        else:
            assert abs(tr) < 1e-9, i


def test_span_odd_grids():
    for n_gens, l in ((1, 3), (3, 2), (3, 3), (5, 2)):
        g = t_generators(n_gens, l, "tau")
        assert span_dimension(monomials(g)) == l**n_gens


# ---------------------------------------------------------------------------
# Fourier matrix
# ---------------------------------------------------------------------------

def test_fourier_hadamard_at_l2():
    assert np.allclose(fourier(2), np.array([[1, 1], [1, -1]]) / np.sqrt(2))


def test_fourier_contract():
    for l in range(2, 13):
        f = fourier(l)
        u, v = weyl_pair(l)
        assert np.linalg.norm(f.conj().T @ f - np.eye(l)) <= 1e-12
        finv = f.conj().T
        assert np.linalg.norm(finv @ u @ f - np.linalg.inv(v)) <= 1e-11
        assert np.linalg.norm(finv @ v @ f - u) <= 1e-11
        assert np.linalg.norm(finv @ u @ f @ v - np.eye(l)) <= 1e-11


# ---------------------------------------------------------------------------
# standardization
# ---------------------------------------------------------------------------

def test_standardize_identity_input():
    for l in (2, 3, 6):
        u, v = weyl_pair(l)
        m, mu = standardize_weyl_pair(u, v, l)
        assert np.linalg.norm(m - np.eye(l)) <= 1e-9
        assert abs(mu - 1) <= 1e-9


def test_standardize_recovers_conjugations():
    rng = np.random.default_rng(17)
    for l in range(2, 7):
        u, v = weyl_pair(l)
        for _ in range(10):
            w = random_unitary(l, rng)
            mu0 = np.exp(2j * np.pi * rng.random())
            up = w.conj().T @ u @ w
            vp = w.conj().T @ (mu0 * v) @ w
            m, mu = standardize_weyl_pair(up, vp, l)
            minv = np.linalg.inv(m)
            assert np.linalg.norm(minv @ up @ m - u) <= 1e-7
            assert np.linalg.norm(minv @ vp @ m - mu * v) <= 1e-7


def test_standardize_fourier_case():
    for l in (2, 3, 5, 8):
        u, v = weyl_pair(l)
        f = fourier(l)
        m, mu = standardize_weyl_pair(np.linalg.inv(v), u, l)
        # the transform connecting the pairs is F itself: M^-1 = F
        assert np.linalg.norm(np.linalg.inv(m) - f) <= 1e-9
        d = m @ f
        assert np.linalg.norm(d - np.diag(np.diag(d))) <= 1e-9
        assert np.allclose(np.abs(np.diag(d)), 1.0, atol=1e-9)


def test_standardize_error_modes():
    u, v = weyl_pair(3)
    with pytest.raises(WeylRelationError):
        standardize_weyl_pair(u, u, 3)
    up = u.copy()
    # note: bumping an entry on u's cyclic superdiagonal keeps the
    # commutation relation exact, so poke one off the pattern
    up[0, 0] += 1e-3
    with pytest.raises(WeylRelationError):
        standardize_weyl_pair(up, v, 3)
    um, vm = reducible_pair(4, 2)
    with pytest.raises(ReducibleRepresentationError):
        standardize_weyl_pair(um, vm, 2)
    with pytest.raises(ValueError):
        standardize_weyl_pair(u, np.eye(2), 3)


# ---------------------------------------------------------------------------
# reducible pairs
# ---------------------------------------------------------------------------

def test_reducible_pair_relation():
    um, v = reducible_pair(4, 2)
    assert np.linalg.norm(um @ v - (-1) * v @ um) <= 1e-12
    for l, m in ((6, 2), (6, 3), (9, 3)):
        um, v = reducible_pair(l, m)
        zp = zeta(l) ** m
        assert np.linalg.norm(um @ v - zp * v @ um) <= 1e-12


def test_reducible_pair_block_structure():
    for l, m in ((4, 2), (6, 2), (6, 3), (9, 3)):
        k = l // m
        um, v = reducible_pair(l, m)
        p = reducible_pair_permutation(l, m)
        uk, vk = weyl_pair(k)
        assert np.allclose(p.T @ um @ p, np.kron(np.eye(m), uk), atol=1e-12)
        scales = np.diag([zeta(l) ** j for j in range(m)])
        assert np.allclose(p.T @ v @ p, np.kron(scales, vk), atol=1e-12)


def test_reducible_pair_validation():
    for bad in ((4, 1), (4, 4), (4, 3), (1, 1)):
        with pytest.raises(ValueError):
            reducible_pair(*bad)
        with pytest.raises(ValueError):
            reducible_pair_permutation(*bad)


# ---------------------------------------------------------------------------
# conjugation and verification plumbing
# ---------------------------------------------------------------------------

def test_conjugate_generators():
    g = t_generators(2, 3, "taw")
    same = conjugate_generators(g, np.eye(3))
    assert all(np.allclose(a, b) for a, b in zip(same.matrices, g.matrices))
    rng = np.random.default_rng(23)
    for m in (random_unitary(3, rng), rng.normal(size=(3, 3)) + 2 * np.eye(3)):
        moved = conjugate_generators(g, m)
        assert verify_relations(moved, tol=1e-8).passed
    with pytest.raises(ValueError):
        conjugate_generators(g, np.zeros((3, 3)))


def test_verify_relations_report():
    rep = verify_relations(as_set(weyl_pair(5), 5))
    assert rep.passed and rep.pair_failures == () and rep.power_failures == ()
    u, v = weyl_pair(5)
    rep = verify_relations(as_set((u + 1e-3, v), 5))
    assert not rep.passed
    assert rep.pair_failures and rep.pair_failures[0][:2] == (1, 2)
    assert rep.max_pair_deviation > 1e-3
    obj = rep.to_json()
    assert obj["passed"] is False and obj["pair_failures"][0][:2] == [1, 2]


def test_verify_relations_skip_powers():
    lam = 1.5
    s, vl = degenerate_pair(3, 0.0, lam)
    g = GeneratorSet((s, vl), 3, lam, "custom")
    assert not verify_relations(g).passed
    assert verify_relations(g, check_powers=False).passed


def test_matrix_json_round_trip():
    u, v = weyl_pair(5)
    m = u @ v + 0.25j * u
    assert np.allclose(matrix_from_json(matrix_to_json(m)), m)
    with pytest.raises(ValueError):
        matrix_from_json({"dim": 2, "entries": [[1.0, 0.0]]})
