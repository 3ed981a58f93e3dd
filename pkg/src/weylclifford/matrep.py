"""Matrix representations: Pauli and clock-shift generator sets.

Conventions.  The clock-shift (Weyl) pair at order l is

    U = cyclic shift, U e_k = e_{k-1 mod l}  (ones on the superdiagonal
        plus the bottom-left corner),
    V = diag(1, zeta, ..., zeta^{l-1}),      zeta = exp(2*pi*i/l),

so that U V = zeta V U.  Ordered site triples

    tau  = (U, conj(nu) U V, V),        taw = (U, V, nu U^dag V),

with nu = zeta^{(l+1)/2} (a 2l-th root of unity when l is even) satisfy
x y = zeta y x for every pair in listed order and x^l = 1; at l = 2 the
tau triple is exactly (sigma_1, sigma_2, sigma_3).

Tensor constructions chain diagonal strings through earlier slots
(tau_3 strings for the tau variant, U^dag V strings with compensating
scalar alpha_k = zeta^{-(k-1)(l-1)/2} for the taw variant) so that any
two generators of different slots pick up exactly one zeta.

Phases that involve half-angles (nu, alpha_k) are computed exactly in
Q(zeta_2l) and converted to complex once, not assembled from floating
half-angle exponentials.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .cyclotomic import root_of_unity

__all__ = [
    "GeneratorSet",
    "RelationReport",
    "WeylRelationError",
    "ReducibleRepresentationError",
    "pauli",
    "weyl_pair",
    "degenerate_pair",
    "tau_triple",
    "conjugated_triple",
    "clifford_generators",
    "t_generators",
    "extract_tau_site",
    "span_dimension",
    "fourier",
    "standardize_weyl_pair",
    "reducible_pair",
    "reducible_pair_permutation",
    "conjugate_generators",
    "verify_relations",
    "lame_residual",
    "matrix_to_json",
    "matrix_from_json",
]

DEFAULT_TOL = 1e-10


class WeylRelationError(ValueError):
    """Input matrices do not satisfy the required exchange relation."""


class ReducibleRepresentationError(ValueError):
    """The pair cannot be standardized: it splits into smaller blocks."""


@dataclass
class GeneratorSet:
    """An ordered tuple of generator matrices with its relation data."""

    matrices: tuple
    l: int
    zeta: complex
    labeling: str = "custom"

    def __post_init__(self):
        self.matrices = tuple(np.asarray(m, dtype=complex) for m in self.matrices)

    @property
    def dim(self) -> int:
        return self.matrices[0].shape[0]

    def __len__(self):
        return len(self.matrices)

    def __iter__(self):
        return iter(self.matrices)


@dataclass
class RelationReport:
    """Outcome of checking exchange relations and unit l-th powers."""

    passed: bool
    tolerance: float
    max_pair_deviation: float
    max_power_deviation: float
    pair_failures: tuple
    power_failures: tuple

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "tolerance": self.tolerance,
            "max_pair_deviation": self.max_pair_deviation,
            "max_power_deviation": self.max_power_deviation,
            "pair_failures": [list(p) for p in self.pair_failures],
            "power_failures": list(self.power_failures),
        }


def _zeta(l: int) -> complex:
    return complex(root_of_unity(l).to_complex())


def _nu(l: int) -> complex:
    # nu = zeta_l^{(l+1)/2} = zeta_{2l}^{l+1}, exact before conversion
    return complex(root_of_unity(2 * l, l + 1).to_complex())


def _kron_all(factors) -> np.ndarray:
    return reduce(np.kron, factors)


def pauli(i: int) -> np.ndarray:
    """Pauli matrix sigma_i, i in {1, 2, 3}."""
    if i == 1:
        return np.array([[0, 1], [1, 0]], dtype=complex)
    if i == 2:
        return np.array([[0, -1j], [1j, 0]], dtype=complex)
    if i == 3:
        return np.array([[1, 0], [0, -1]], dtype=complex)
    raise ValueError("Pauli index must be 1, 2 or 3")


def weyl_pair(l: int):
    """The clock-shift pair (U, V) at order l, U V = zeta V U."""
    if l < 2:
        raise ValueError("order l must be at least 2")
    u = np.zeros((l, l), dtype=complex)
    for j in range(l):
        u[j, (j + 1) % l] = 1.0
    zeta = _zeta(l)
    v = np.diag([zeta**k for k in range(l)]).astype(complex)
    return u, v


def degenerate_pair(l: int, a: complex = 0.0, lam: complex = 1.0):
    """Shift-with-corner S^(a) and clock V^lam at an arbitrary scalar lam.

    S^(0) V^lam = lam V^lam S^(0) holds for every lam, at the price of
    det S^(0) = 0; with a != 0 the relation needs lam^l = 1, and
    a = 1, lam = zeta recovers the invertible pair.
    """
    if l < 2:
        raise ValueError("order l must be at least 2")
    s = np.zeros((l, l), dtype=complex)
    for j in range(l - 1):
        s[j, j + 1] = 1.0
    s[l - 1, 0] = complex(a)
    v = np.diag([complex(lam) ** k for k in range(l)]).astype(complex)
    return s, v


def tau_triple(l: int, variant: str = "tau"):
    """Ordered triple (tau_1, tau_2, tau_3) with x y = zeta y x, x^l = 1.

    variant "tau": (U, conj(nu) U V, V); variant "taw": (U, V, nu U^dag V).
    At l = 2 the tau variant is (sigma_1, sigma_2, sigma_3).
    """
    u, v = weyl_pair(l)
    nu = _nu(l)
    if variant == "tau":
        return u, np.conj(nu) * (u @ v), v
    if variant == "taw":
        return u, v, nu * (u.conj().T @ v)
    raise ValueError("variant must be 'tau' or 'taw'")


def conjugated_triple(l: int, m: np.ndarray):
    """The taw triple transported by an invertible matrix M.

    Returns (M^-1 U M, M^-1 V M, nu M^-1 U^dag V M); the third member
    is nu times the product of the inverse of the first with the second.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("M must be square")
    try:
        minv = np.linalg.inv(m)
    except np.linalg.LinAlgError as exc:
        raise ValueError("M must be invertible") from exc
    t1, t2, t3 = tau_triple(l, "taw")
    return minv @ t1 @ m, minv @ t2 @ m, minv @ t3 @ m


def clifford_generators(n: int, include_odd: bool = False) -> GeneratorSet:
    """Anticommuting generators e_1..e_{2n} (optionally e_{2n+1}).

    e_{2k-1} = sigma_3^(k-1 factors) x sigma_1 x 1...,
    e_{2k}   = sigma_3^(k-1 factors) x sigma_2 x 1...,
    and the odd extension appends e_{2n+1} = sigma_3^(n+1 factors) with
    every generator embedded at dimension 2^(n+1).
    """
    if n < 0 or (n == 0 and not include_odd):
        raise ValueError("need at least one generator")
    slots = n + 1 if include_odd else n
    s1, s2, s3 = pauli(1), pauli(2), pauli(3)
    eye = np.eye(2, dtype=complex)
    mats = []
    for k in range(1, n + 1):
        pre = [s3] * (k - 1)
        post = [eye] * (slots - k)
        mats.append(_kron_all(pre + [s1] + post))
        mats.append(_kron_all(pre + [s2] + post))
    if include_odd:
        mats.append(_kron_all([s3] * slots))
    return GeneratorSet(tuple(mats), 2, -1.0 + 0j, "pauli-clifford")


def t_generators(n_gens: int, l: int, variant: str = "tau") -> GeneratorSet:
    """n_gens generators of T(n_gens, l) at dimension l^ceil(n_gens/2).

    Even counts pair up into ceil(n/2) tensor slots; an odd count adds
    the all-diagonal generator (tau_3 or nu U^dag V in every slot).
    """
    if n_gens < 1:
        raise ValueError("need at least one generator")
    if l < 2:
        raise ValueError("order l must be at least 2")
    if variant not in ("tau", "taw"):
        raise ValueError("variant must be 'tau' or 'taw'")
    slots = (n_gens + 1) // 2
    pairs = n_gens // 2
    eye = np.eye(l, dtype=complex)
    if variant == "tau":
        site1, site2, string = tau_triple(l, "tau")
        diag = string  # tau_3
        scalars = [1.0 + 0j] * (pairs + 1)
    else:
        u, v = weyl_pair(l)
        site1, site2 = u, v
        string = u.conj().T @ v
        diag = _nu(l) * string
        # alpha_k = zeta^{-(k-1)(l-1)/2} = zeta_{2l}^{-(k-1)(l-1)}, exact
        scalars = [
            complex(root_of_unity(2 * l, -(k - 1) * (l - 1)).to_complex())
            for k in range(1, pairs + 2)
        ]
    mats = []
    for k in range(1, pairs + 1):
        pre = [string] * (k - 1)
        post = [eye] * (slots - k)
        mats.append(scalars[k - 1] * _kron_all(pre + [site1] + post))
        mats.append(scalars[k - 1] * _kron_all(pre + [site2] + post))
    if n_gens % 2:
        mats.append(_kron_all([diag] * slots))
    return GeneratorSet(tuple(mats), l, _zeta(l), variant)


def extract_tau_site(gens: GeneratorSet, i: int, k: int) -> np.ndarray:
    """Recover the one-site factor tau_{i;k} from tau-variant generators.

    tau_{3;k} = nu t_{2k-1}^{l-1} t_{2k} (the string slots cancel), and
    multiplying t_{2k-1} or t_{2k} by the accumulated tau_3^{l-1}
    strings of the earlier sites strips them down to tau_{1;k} and
    tau_{2;k}.
    """
    if i not in (1, 2, 3):
        raise ValueError("site index i must be 1, 2 or 3")
    pairs = len(gens) // 2
    if not 1 <= k <= pairs:
        raise ValueError(f"pair index {k} outside 1..{pairs}")
    if gens.labeling != "tau":
        raise ValueError("site extraction is defined for the tau labeling")
    l = gens.l
    nu = _nu(l)
    t = gens.matrices

    def tau3(site: int) -> np.ndarray:
        return nu * np.linalg.matrix_power(t[2 * site - 2], l - 1) @ t[2 * site - 1]

    if i == 3:
        return tau3(k)
    out = t[2 * k - 2] if i == 1 else t[2 * k - 1]
    for j in range(1, k):
        out = out @ np.linalg.matrix_power(tau3(j), l - 1)
    return out


def span_dimension(matrices, rel_tol: float = 1e-9) -> int:
    """Dimension of the linear span of a family of matrices.

    Rank of the stacked vectorizations; singular values below
    rel_tol times the largest are treated as zero.
    """
    mats = [np.asarray(m, dtype=complex) for m in matrices]
    if not mats:
        raise ValueError("need at least one matrix")
    stacked = np.vstack([m.ravel() for m in mats])
    svals = np.linalg.svd(stacked, compute_uv=False)
    if svals.size == 0 or svals[0] == 0.0:
        return 0
    return int(np.sum(svals > rel_tol * svals[0]))


def fourier(l: int) -> np.ndarray:
    """Discrete Fourier matrix F with F^-1 U F = V^-1 and F^-1 V F = U."""
    if l < 1:
        raise ValueError("order l must be at least 1")
    j, k = np.meshgrid(np.arange(l), np.arange(l), indexing="ij")
    return np.exp(-2j * np.pi * j * k / l) / np.sqrt(l)


def standardize_weyl_pair(u: np.ndarray, v: np.ndarray, l: int, tol: float = 1e-8):
    """Transform an abstract exchange pair onto the standard (U, V).

    Given invertible U', V' with U' V' = zeta V' U' and V' carrying l
    distinct eigenvalues, returns (M, mu) with

        M^-1 U' M = U,       M^-1 V' M = mu V.

    The basis is the eigenvector orbit m_k = U'^{-k} e of a chosen
    eigenvector e of V' (V' m_k = mu zeta^k m_k).  Determinism: the
    eigenvalue with argument closest to zero is chosen, and the phase
    of e is fixed by making its first significant entry real positive.

    Raises WeylRelationError if the exchange relation fails beyond tol,
    and ReducibleRepresentationError when the pair splits (dimension
    above l, or a degenerate V' spectrum).
    """
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.shape != v.shape or u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError("U' and V' must be square matrices of equal size")
    dim = u.shape[0]
    if l < 2:
        raise ValueError("order l must be at least 2")
    zeta = _zeta(l)
    scale = max(np.linalg.norm(u @ v), 1.0)
    deviation = np.linalg.norm(u @ v - zeta * (v @ u)) / scale
    if deviation > tol:
        raise WeylRelationError(
            f"exchange relation fails: relative deviation {deviation:.3e}"
        )
    if dim != l:
        raise ReducibleRepresentationError(
            f"dimension {dim} exceeds order {l}: the pair is reducible"
        )
    eigvals, eigvecs = np.linalg.eig(v)
    # a degenerate spectrum cannot host the full zeta-orbit of eigenvalues
    for a in range(l):
        for b in range(a + 1, l):
            if abs(eigvals[a] - eigvals[b]) < 100 * tol * max(1.0, abs(eigvals[a])):
                raise ReducibleRepresentationError(
                    "V' has a (near-)degenerate spectrum: reducible pair"
                )
    idx = int(np.argmin(np.abs(np.angle(eigvals))))
    mu = eigvals[idx]
    e = eigvecs[:, idx]
    e = e / np.linalg.norm(e)
    nz = int(np.argmax(np.abs(e) > 1e-8 * np.max(np.abs(e))))
    e = e * (abs(e[nz]) / e[nz])
    try:
        uinv = np.linalg.inv(u)
    except np.linalg.LinAlgError as exc:
        raise ValueError("U' must be invertible") from exc
    cols = [e]
    for _ in range(l - 1):
        cols.append(uinv @ cols[-1])
    m = np.column_stack(cols)
    if np.linalg.cond(m) > 1.0 / np.finfo(float).eps ** 0.5:
        raise ReducibleRepresentationError(
            "eigenvector orbit does not span: reducible pair"
        )
    return m, mu


def reducible_pair(l: int, m: int):
    """The reducible exchange pair (U^m, V) for a divisor m, 1 < m < l."""
    if l < 2 or m <= 1 or m >= l or l % m:
        raise ValueError("m must be a divisor of l with 1 < m < l")
    u, v = weyl_pair(l)
    return np.linalg.matrix_power(u, m), v


def reducible_pair_permutation(l: int, m: int) -> np.ndarray:
    """Permutation P splitting (U^m, V) into m blocks of size l/m.

    P^T (U^m) P = 1_m x U_{l/m} and P^T V P = diag(zeta^j) x V_{l/m},
    with x the Kronecker product and j = 0..m-1.
    """
    if l < 2 or m <= 1 or m >= l or l % m:
        raise ValueError("m must be a divisor of l with 1 < m < l")
    k = l // m
    p = np.zeros((l, l), dtype=complex)
    for j in range(m):
        for r in range(k):
            p[j + r * m, j * k + r] = 1.0
    return p


def conjugate_generators(gens: GeneratorSet, m: np.ndarray) -> GeneratorSet:
    """Transport every generator through an invertible M."""
    m = np.asarray(m, dtype=complex)
    try:
        minv = np.linalg.inv(m)
    except np.linalg.LinAlgError as exc:
        raise ValueError("M must be invertible") from exc
    mats = tuple(minv @ t @ m for t in gens.matrices)
    return GeneratorSet(mats, gens.l, gens.zeta, "custom")


def verify_relations(
    gens: GeneratorSet, tol: float = DEFAULT_TOL, check_powers: bool = True
) -> RelationReport:
    """Check t_j t_k = zeta t_k t_j (j < k) and t_k^l = 1 numerically."""
    mats = gens.matrices
    zeta = gens.zeta
    eye = np.eye(gens.dim, dtype=complex)
    max_pair = 0.0
    pair_failures = []
    for j in range(len(mats)):
        for k in range(j + 1, len(mats)):
            dev = float(
                np.linalg.norm(mats[j] @ mats[k] - zeta * (mats[k] @ mats[j]))
            )
            max_pair = max(max_pair, dev)
            if dev > tol:
                pair_failures.append((j + 1, k + 1, dev))
    max_power = 0.0
    power_failures = []
    if check_powers:
        for k, t in enumerate(mats):
            dev = float(np.linalg.norm(np.linalg.matrix_power(t, gens.l) - eye))
            max_power = max(max_power, dev)
            if dev > tol:
                power_failures.append(k + 1)
    passed = not pair_failures and not power_failures
    return RelationReport(
        passed=passed,
        tolerance=tol,
        max_pair_deviation=max_pair,
        max_power_deviation=max_power,
        pair_failures=tuple(pair_failures),
        power_failures=tuple(power_failures),
    )


def lame_residual(gens: GeneratorSet, coeffs) -> float:
    """Frobenius norm of (sum_k x_k t_k)^l - sum_k x_k^l t_k^l."""
    coeffs = [complex(c) for c in coeffs]
    if len(coeffs) != len(gens.matrices):
        raise ValueError("need one coefficient per generator")
    lhs = np.zeros((gens.dim, gens.dim), dtype=complex)
    for c, t in zip(coeffs, gens.matrices):
        lhs = lhs + c * t
    lhs = np.linalg.matrix_power(lhs, gens.l)
    rhs = np.zeros_like(lhs)
    for c, t in zip(coeffs, gens.matrices):
        rhs = rhs + c**gens.l * np.linalg.matrix_power(t, gens.l)
    return float(np.linalg.norm(lhs - rhs))


def matrix_to_json(m: np.ndarray) -> dict:
    m = np.asarray(m, dtype=complex)
    return {
        "dim": int(m.shape[0]),
        "entries": [[float(z.real), float(z.imag)] for z in m.ravel()],
    }


def matrix_from_json(obj: dict) -> np.ndarray:
    dim = int(obj["dim"])
    entries = obj["entries"]
    if len(entries) != dim * dim:
        raise ValueError("matrix entry count does not match dimension")
    flat = [complex(re, im) for re, im in entries]
    return np.array(flat, dtype=complex).reshape(dim, dim)
