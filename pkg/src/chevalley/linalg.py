"""Generic exact linear algebra over any of the coefficient fields.

Matrices are lists of row lists whose entries support +, -, *, / and
truthiness for the zero test (Fraction, FFElement and RatFunc all do).
Plain Gaussian elimination is exact over a field, so nothing fancier
is needed at desk scale.
"""

from __future__ import annotations


def identity(field, n):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def mat_vec(A, x, zero):
    out = []
    for row in A:
        acc = zero
        for a, b in zip(row, x):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


def mat_mul(A, B, zero):
    n, m = len(A), len(B[0])
    k = len(B)
    out = [[zero for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for l in range(k):
            a = A[i][l]
            if a:
                for j in range(m):
                    if B[l][j]:
                        out[i][j] = out[i][j] + a * B[l][j]
    return out


def rref(field, A):
    """Reduced row echelon form; returns (R, pivot column list)."""
    R = [list(row) for row in A]
    rows = len(R)
    cols = len(R[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if R[i][c]), None)
        if pivot is None:
            continue
        R[r], R[pivot] = R[pivot], R[r]
        inv = field.one / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R, pivots


def rank(field, A):
    if not A or not A[0]:
        return 0
    return len(rref(field, A)[1])


def det(field, A):
    """Determinant of a square matrix by fraction-full elimination."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return field.one
    M = [list(row) for row in A]
    result = field.one
    for c in range(n):
        pivot = next((i for i in range(c, n) if M[i][c]), None)
        if pivot is None:
            return field.zero
        if pivot != c:
            M[c], M[pivot] = M[pivot], M[c]
            result = -result
        result = result * M[c][c]
        inv = field.one / M[c][c]
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] * inv
                for j in range(c + 1, n):
                    if M[c][j]:
                        M[i][j] = M[i][j] - f * M[c][j]
                M[i][c] = field.zero
    return result


def solve(field, A, b):
    """One solution of A x = b, or None if the system is inconsistent."""
    if not A:
        return []
    cols = len(A[0])
    aug = [list(row) + [bb] for row, bb in zip(A, b)]
    R, pivots = rref(field, aug)
    for row in R:
        if not any(row[:-1]) and row[-1]:
            return None
    x = [field.zero] * cols
    for r, c in enumerate(pivots):
        if c == cols:
            return None  # pivot in the augmented column
        x[c] = R[r][-1]
    return x


def kernel_basis(field, A):
    """Basis of the right null space of A."""
    if not A or not A[0]:
        return []
    cols = len(A[0])
    R, pivots = rref(field, A)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * cols
        v[f] = field.one
        for r, c in enumerate(pivots):
            v[c] = -R[r][f]
        basis.append(v)
    return basis
