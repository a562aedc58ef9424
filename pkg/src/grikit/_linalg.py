"""Exact Gaussian elimination over an arbitrary grikit field object."""

from __future__ import annotations


def rank(rows, field) -> int:
    """Rank of the matrix given as a list of coordinate rows."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work))
                      if not field.is_zero(work[i][c])), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = field.inv(work[r][c])
        work[r] = [v * inv for v in work[r]]
        for i in range(len(work)):
            if i != r and not field.is_zero(work[i][c]):
                factor = work[i][c]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def solve(matrix, rhs, field):
    """Solve matrix * x = rhs; returns the solution list or None if singular.

    `matrix` is a square list of rows, `rhs` a list of the same length.
    """
    n = len(matrix)
    aug = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    for c in range(n):
        pivot = next((i for i in range(c, n)
                      if not field.is_zero(aug[i][c])), None)
        if pivot is None:
            return None
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = field.inv(aug[c][c])
        aug[c] = [v * inv for v in aug[c]]
        for i in range(n):
            if i != c and not field.is_zero(aug[i][c]):
                factor = aug[i][c]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[c])]
    return [aug[i][n] for i in range(n)]


def invert(matrix, field):
    """Inverse of a square matrix (list of rows), or None if singular."""
    n = len(matrix)
    zero, one = field.zero(), field.one()
    aug = [list(matrix[i]) + [one if j == i else zero for j in range(n)]
           for i in range(n)]
    for c in range(n):
        pivot = next((i for i in range(c, n)
                      if not field.is_zero(aug[i][c])), None)
        if pivot is None:
            return None
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = field.inv(aug[c][c])
        aug[c] = [v * inv for v in aug[c]]
        for i in range(n):
            if i != c and not field.is_zero(aug[i][c]):
                factor = aug[i][c]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]
