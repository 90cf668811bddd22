"""Pure-Python exact linear-algebra kernels.

These two routines dominate the runtime of the exhaustive search, so they
also exist as a compiled Cython extension (``sgdgs._speedups``) with the
same signatures; ``sgdgs.kernels`` picks one at import time.  Both operate
on plain ``list[list[int]]`` row data and Python big ints, and every
intermediate value is exact.
"""

from __future__ import annotations


def charpoly_coeffs(rows: list[list[int]]) -> list[int]:
    """Coefficients of det(xI - A), ascending degree, via Berkowitz.

    Division-free: the k-th step extends the characteristic polynomial of
    the leading principal k x k submatrix by one Toeplitz product, so all
    intermediates stay integers.
    """
    n = len(rows)
    poly = [1]  # descending coefficients, charpoly of the empty matrix
    for k in range(n):
        r = rows[k]
        neg_row = [-r[j] for j in range(k)]
        col = [rows[i][k] for i in range(k)]
        # items = [1, -a_kk, R·C, R·M·C, ..., R·M^(k-1)·C] with R = -A[k,:k],
        # C = A[:k,k], M = A[:k,:k]
        items = [1, -r[k]]
        v = col
        for step in range(k):
            acc = 0
            for j in range(k):
                acc += neg_row[j] * v[j]
            items.append(acc)
            if step == k - 1:
                break
            v = [sum(rows[i][j] * v[j] for j in range(k)) for i in range(k)]
        new = [0] * (k + 2)
        for i in range(k + 2):
            acc = 0
            for j in range(max(0, i - k - 1), min(i, k) + 1):
                acc += items[i - j] * poly[j]
            new[i] = acc
        poly = new
    poly.reverse()
    return poly


def det_int(rows: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination.

    Bareiss two-step scheme: every division by the previous pivot is exact,
    so entries remain integers throughout.
    """
    n = len(rows)
    if n == 0:
        return 1
    a = [list(row) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]
