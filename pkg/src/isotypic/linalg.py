"""Dense exact linear algebra over a prime field.

Matrices are numpy int64 arrays with entries reduced into [0, p).  All
eliminations use first-nonzero pivoting, so every derived basis (row
space, null space, image) is deterministic for a given input.
"""

from __future__ import annotations

import numpy as np

from .errors import SingularMatrix


def inv_mod(a: int, p: int) -> int:
    """Inverse of a nonzero residue mod the prime p."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(a, p - 2, p)


def asmat(a, p: int) -> np.ndarray:
    """Coerce to an int64 array reduced mod p."""
    return np.asarray(a, dtype=np.int64) % p


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row-echelon form.

    Returns (R, pivot_columns).  Pivots are normalized to 1 and chosen as
    the first nonzero entry in each column, scanning columns left to right.
    """
    r = asmat(a, p).copy()
    m, n = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        r[row] = (r[row] * inv_mod(int(r[row, col]), p)) % p
        other = np.nonzero(r[:, col])[0]
        other = other[other != row]
        if other.size:
            r[other] = (r[other] - np.outer(r[other, col], r[row])) % p
        pivots.append(col)
        row += 1
    return r, tuple(pivots)


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def row_space(a: np.ndarray, p: int) -> np.ndarray:
    """Canonical (RREF) basis of the row space, one vector per row."""
    r, pivots = rref(a, p)
    return r[: len(pivots)].copy()


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Canonical basis of the right null space, one vector per row.

    Basis vectors carry a 1 in their free column, listed in ascending
    free-column order.
    """
    a = asmat(a, p)
    m, n = a.shape
    r, pivots = rref(a, p)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-r[i, fc]) % p
    return basis


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Solve a @ x = b for x, where a has full column rank.

    b may be a matrix (one system per column).  Raises SingularMatrix when
    the system is inconsistent or underdetermined.
    """
    a = asmat(a, p)
    b = asmat(b, p)
    single = b.ndim == 1
    if single:
        b = b[:, None]
    m, n = a.shape
    aug = np.concatenate([a, b], axis=1)
    r, pivots = rref(aug, p)
    if any(c >= n for c in pivots):
        raise SingularMatrix("inconsistent linear system")
    if len(pivots) < n:
        raise SingularMatrix("matrix does not have full column rank")
    x = r[:n, n:] % p
    return x[:, 0] if single else x


def inverse(a: np.ndarray, p: int) -> np.ndarray:
    a = asmat(a, p)
    n = a.shape[0]
    if a.shape != (n, n):
        raise SingularMatrix("only square matrices are invertible")
    return solve(a, identity(n), p)


def coords_in_rowspace(basis: np.ndarray, vectors: np.ndarray, p: int) -> np.ndarray:
    """Coordinates of row vectors with respect to a row basis.

    Returns c with c @ basis = vectors; raises SingularMatrix when some
    vector lies outside the span.
    """
    c = solve(basis.T % p, vectors.T % p, p)
    return c.T


def same_row_space(a: np.ndarray, b: np.ndarray, p: int) -> bool:
    ra = row_space(asmat(a, p), p)
    rb = row_space(asmat(b, p), p)
    return ra.shape == rb.shape and bool(np.array_equal(ra, rb))
