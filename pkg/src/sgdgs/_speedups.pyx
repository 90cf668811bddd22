# cython: language_level=3
"""Compiled exact linear-algebra kernels.

Same contract as sgdgs._kernels_py: arithmetic stays on Python big ints
(int64 would overflow; Berkowitz intermediates reach ~10^28 already at
n = 14), the speedup comes from compiled loop and indexing machinery.
"""


def charpoly_coeffs(rows):
    """Coefficients of det(xI - A), ascending degree, via Berkowitz."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t k, i, j, step, lo, hi
    cdef list poly = [1]
    cdef list new, items, v, w, neg_row, col, r
    cdef object acc
    for k in range(n):
        r = rows[k]
        neg_row = [-r[j] for j in range(k)]
        col = [rows[i][k] for i in range(k)]
        items = [1, -r[k]]
        v = col
        for step in range(k):
            acc = 0
            for j in range(k):
                acc = acc + neg_row[j] * v[j]
            items.append(acc)
            if step == k - 1:
                break
            w = [None] * k
            for i in range(k):
                acc = 0
                row_i = rows[i]
                for j in range(k):
                    acc = acc + row_i[j] * v[j]
                w[i] = acc
            v = w
        new = [0] * (k + 2)
        for i in range(k + 2):
            acc = 0
            lo = i - k - 1
            if lo < 0:
                lo = 0
            hi = i if i < k else k
            for j in range(lo, hi + 1):
                acc = acc + items[i - j] * poly[j]
            new[i] = acc
        poly = new
    poly.reverse()
    return poly


def det_int(rows):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef list a = [list(row) for row in rows]
    cdef Py_ssize_t k, i, j
    cdef int sign = 1
    cdef object prev = 1
    cdef object pivot, aik
    cdef list row_i, row_k
    cdef bint found
    for k in range(n - 1):
        if a[k][k] == 0:
            found = False
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    found = True
                    break
            if not found:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    if sign > 0:
        return a[n - 1][n - 1]
    return -a[n - 1][n - 1]
