"""Exact linear algebra over the prime field F_p on numpy integer arrays.

All matrices are ``numpy.int64`` arrays with entries normalized to
``[0, p)``.  A matrix of shape ``(m, n)`` represents a linear map
``F_p^n -> F_p^m`` acting on column vectors.  Everything here is exact;
no floating point is involved anywhere in the package.
"""

from __future__ import annotations

import numpy as np


def normalize(a, p: int) -> np.ndarray:
    """Coerce to an int64 array with entries reduced mod p."""
    arr = np.asarray(a, dtype=np.int64)
    if arr.ndim != 2:
        raise ValueError("expected a 2-d matrix, got ndim=%d" % arr.ndim)
    return np.mod(arr, p)


def zeros(m: int, n: int) -> np.ndarray:
    return np.zeros((m, n), dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError("shape mismatch %s x %s" % (a.shape, b.shape))
    return np.mod(a @ b, p)


def rref(a: np.ndarray, p: int):
    """Reduced row echelon form.

    Returns ``(r, pivots)`` where ``r`` is the reduced matrix and
    ``pivots`` the list of pivot column indices.  Entry dtype stays int64;
    pivots are normalized to 1.
    """
    m = np.mod(np.asarray(a, dtype=np.int64), p).copy()
    nrows, ncols = m.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        nz = np.nonzero(m[row:, col])[0]
        if nz.size == 0:
            continue
        pr = row + int(nz[0])
        if pr != row:
            m[[row, pr]] = m[[pr, row]]
        inv = pow(int(m[row, col]), -1, p)
        m[row] = np.mod(m[row] * inv, p)
        hits = np.nonzero(m[:, col])[0]
        for i in hits:
            if i != row:
                m[i] = np.mod(m[i] - m[i, col] * m[row], p)
        pivots.append(col)
        row += 1
    return m, pivots


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis of ker(a); shape (ncols, nullity)."""
    nrows, ncols = a.shape
    if ncols == 0:
        return zeros(0, 0)
    if nrows == 0:
        return eye(ncols)
    red, pivots = rref(a, p)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = zeros(ncols, len(free))
    for j, fc in enumerate(free):
        basis[fc, j] = 1
        for r, pc in enumerate(pivots):
            basis[pc, j] = (-int(red[r, fc])) % p
    return basis


def solve(a: np.ndarray, b: np.ndarray, p: int):
    """One solution X of a @ X = b (b may have several columns), or None."""
    nrows, ncols = a.shape
    b = np.asarray(b, dtype=np.int64)
    if b.ndim == 1:
        b = b.reshape(-1, 1)
    if b.shape[0] != nrows:
        raise ValueError("rhs has %d rows, expected %d" % (b.shape[0], nrows))
    if nrows == 0:
        return zeros(ncols, b.shape[1])
    aug = np.hstack([np.mod(a, p), np.mod(b, p)])
    red, pivots = rref(aug, p)
    x = zeros(ncols, b.shape[1])
    for r, pc in enumerate(pivots):
        if pc >= ncols:
            return None  # pivot inside the rhs block: inconsistent system
        x[pc] = red[r, ncols:]
    return x


def inverse(a: np.ndarray, p: int):
    """Inverse matrix, or None if singular."""
    n, m = a.shape
    if n != m:
        return None
    if n == 0:
        return zeros(0, 0)
    aug = np.hstack([np.mod(a, p), eye(n)])
    red, pivots = rref(aug, p)
    if pivots != list(range(n)):
        return None
    return red[:, n:].copy()


def is_invertible(a: np.ndarray, p: int) -> bool:
    return a.shape[0] == a.shape[1] and rank(a, p) == a.shape[0]


def column_space_basis(a: np.ndarray, p: int) -> np.ndarray:
    """Matrix whose columns are a basis of col(a) (pivot columns of a)."""
    if a.size == 0:
        return zeros(a.shape[0], 0)
    _, pivots = rref(a, p)
    return a[:, pivots].copy() if pivots else zeros(a.shape[0], 0)


def quotient_presentation(w: np.ndarray, p: int):
    """Present F_p^N / col(w) by a projection and a section.

    Returns ``(proj, section)`` with ``proj`` of shape (q, N) and
    ``section`` of shape (N, q), where q = N - rank(w),
    ``proj @ section = I_q`` and ``ker(proj) = col(w)``.  The section picks
    the standard basis vectors missing from the pivot positions of a
    column basis of w, so the construction is deterministic.
    """
    n = w.shape[0]
    basis = column_space_basis(w, p)
    s = basis.shape[1]
    # Row-reduce the transpose to locate pivot coordinates of col(w).
    if s:
        _, pivots = rref(basis.T, p)
    else:
        pivots = []
    pivot_set = set(pivots)
    free = [i for i in range(n) if i not in pivot_set]
    section = zeros(n, len(free))
    for j, i in enumerate(free):
        section[i, j] = 1
    t = np.hstack([basis, section]) if (s + len(free)) else zeros(n, 0)
    tinv = inverse(t, p)
    if tinv is None:
        raise ArithmeticError("basis completion failed; w not a subspace basis?")
    proj = tinv[s:, :].copy()
    return proj, section


def random_invertible(rng, n: int, p: int) -> np.ndarray:
    """Uniform-ish random invertible n x n matrix via rejection."""
    if n == 0:
        return zeros(0, 0)
    while True:
        m = np.asarray(rng.integers(0, p, size=(n, n)), dtype=np.int64)
        if is_invertible(m, p):
            return m


def kron(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Kronecker product mod p (used to flatten matrix equations)."""
    return np.mod(np.kron(a, b), p)
