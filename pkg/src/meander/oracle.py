"""Index from first principles: generic corank of the coadjoint form.

The seaweed ``q(S, T)`` is realised inside gl_N by explicit matrices (so and
sp as matrices skew with respect to an antidiagonal form). For a random
functional ``xi`` the index is ``dim q - rank [xi([x_k, x_l])]``; ranks are
taken over the prime field F_p with ``p = 2^31 - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .compositions import RootSubset
from .roots import Root, positive_roots_of

PRIME = 2**31 - 1


@dataclass(frozen=True)
class RootBasisElement:
    kind: str  # "cartan" or "root"
    label: int | Root  # Cartan index or root in epsilon coordinates
    matrix: np.ndarray


@dataclass(frozen=True)
class SeaweedRealization:
    algebra_type: str
    n: int
    basis: tuple[RootBasisElement, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def stacked(self) -> np.ndarray:
        return np.stack([x.matrix for x in self.basis])


def matrix_size(algebra_type: str, n: int) -> int:
    return {"A": n, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[algebra_type]


def _unit(N: int, *entries: tuple[int, int, int]) -> np.ndarray:
    M = np.zeros((N, N), dtype=np.int64)
    for i, j, c in entries:
        M[i - 1, j - 1] += c
    return M


def cartan_element(algebra_type: str, n: int, i: int) -> np.ndarray:
    N = matrix_size(algebra_type, n)
    if algebra_type == "A":
        return _unit(N, (i, i, 1))
    return _unit(N, (i, i, 1), (N + 1 - i, N + 1 - i, -1))


def root_vector(algebra_type: str, n: int, root: Root) -> np.ndarray:
    """A spanning vector of the root space of ``root`` (positive or negative)."""
    N = matrix_size(algebra_type, n)
    bar = lambda i: N + 1 - i
    idx = [(k + 1, c) for k, c in enumerate(root) if c]
    sign = 1 if algebra_type == "C" else -1  # sp differs from so by this sign
    if len(idx) == 2 and idx[0][1] == -idx[1][1]:
        (i, ci), (j, _) = idx
        if ci < 0:
            i, j = j, i
        # e_i - e_j
        if algebra_type == "A":
            return _unit(N, (i, j, 1))
        return _unit(N, (i, j, 1), (bar(j), bar(i), -1))
    if len(idx) == 2:
        (i, ci), (j, _) = idx
        if ci > 0:  # e_i + e_j
            return _unit(N, (i, bar(j), 1), (j, bar(i), sign))
        return _unit(N, (bar(j), i, 1), (bar(i), j, sign))
    (i, c), = idx
    if algebra_type == "C":  # +-2 e_i
        return _unit(N, (i, bar(i), 1)) if c > 0 else _unit(N, (bar(i), i, 1))
    mid = n + 1  # B: +-e_i
    if c > 0:
        return _unit(N, (i, mid, 1), (mid, bar(i), -1))
    return _unit(N, (mid, i, 1), (bar(i), mid, -1))


def realize_seaweed(n: int, S, T, algebra_type: str = "D") -> SeaweedRealization:
    """Cartan plus ``g_gamma`` for gamma in ``Delta+(T)`` and ``g_-gamma`` for gamma in ``Delta+(S)``."""
    S = S.members if isinstance(S, RootSubset) else frozenset(S)
    T = T.members if isinstance(T, RootSubset) else frozenset(T)
    basis = [RootBasisElement("cartan", i, cartan_element(algebra_type, n, i))
             for i in range(1, n + 1)]
    for r in positive_roots_of(algebra_type, n, T):
        basis.append(RootBasisElement("root", r, root_vector(algebra_type, n, r)))
    for r in positive_roots_of(algebra_type, n, S):
        neg = tuple(-x for x in r)
        basis.append(RootBasisElement("root", neg, root_vector(algebra_type, n, neg)))
    return SeaweedRealization(algebra_type, n, tuple(basis))


def invariant_form(algebra_type: str, n: int) -> np.ndarray | None:
    """``J`` with ``X^T J + J X = 0`` on the algebra; None for gl_n."""
    N = matrix_size(algebra_type, n)
    if algebra_type == "A":
        return None
    J = np.fliplr(np.eye(N, dtype=np.int64))
    if algebra_type == "C":
        J[n:, :] *= -1
    return J


def rank_mod_p(M: np.ndarray, p: int = PRIME) -> int:
    """Rank over F_p by Gaussian elimination; entries must be reduced mod p."""
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        below = np.nonzero(A[r + 1:, c])[0] + r + 1
        if below.size:
            f = A[below, c][:, None]
            A[below] = (A[below] - f * A[r]) % p
        r += 1
        if r == rows:
            break
    return r


def structure_matrix(real: SeaweedRealization, functional: np.ndarray, p: int = PRIME) -> np.ndarray:
    """``M[k, l] = xi([x_k, x_l])`` mod p with ``xi(X) = sum functional * X``."""
    X = real.stacked()
    d = X.shape[0]
    C = functional % p
    # xi(x_k x_l) = <x_k^T C, x_l> (Frobenius pairing); entries stay far below 2^63
    Z = np.einsum("kim,ij->kmj", X, C).reshape(d, -1) % p
    P = (Z @ X.reshape(d, -1).T) % p
    return (P - P.T) % p


@dataclass(frozen=True)
class OracleResult:
    index: int
    dim: int
    ranks: tuple[int, ...]
    seed: int
    prime: int = PRIME


def oracle_index_detail(n: int, S, T, trials: int = 5, seed: int = 0,
                        algebra_type: str = "D") -> OracleResult:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    real = realize_seaweed(n, S, T, algebra_type)
    N = matrix_size(algebra_type, n)
    ranks = []
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        xi = rng.integers(0, PRIME, size=(N, N), dtype=np.int64)
        ranks.append(rank_mod_p(structure_matrix(real, xi)))
    return OracleResult(real.dim - max(ranks), real.dim, tuple(ranks), seed)


def oracle_index(n: int, S, T, trials: int = 5, seed: int = 0, algebra_type: str = "D") -> int:
    return oracle_index_detail(n, S, T, trials, seed, algebra_type).index
