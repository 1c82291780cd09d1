"""Exact linear algebra over F_p on dense lists of ints."""


def rref(rows, p):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    A = [[x % p for x in r] for r in rows]
    piv = []
    r = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        k = next((i for i in range(r, len(A)) if A[i][c]), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        inv = pow(A[r][c], p - 2, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        piv.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], piv


def rank(rows, p):
    return len(rref(rows, p)[1]) if rows else 0


def solve(rows, rhs, p):
    """One solution x of rows * x = rhs, or None when inconsistent."""
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    R, piv = rref(aug, p)
    if n in piv:
        return None
    x = [0] * n
    for row, c in zip(R, piv):
        x[c] = row[n]
    return x
