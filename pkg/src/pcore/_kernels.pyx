# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Mirrors ``pcore._kernels_py`` exactly."""
from libc.stdlib cimport malloc, calloc, free

ctypedef long long i64


cdef struct Search:
    int p
    i64 max_len
    i64 count
    i64 best
    i64 n_best
    int *m
    int *best_m


cdef void _level(Search *s, int i, int v, i64 total, i64 s0, i64 s1, i64 s2) nogil:
    cdef int x = 0
    cdef int w = v
    cdef int p = s.p
    cdef i64 t, n0, n1, n2, size
    cdef int k
    while True:
        t = total + x
        if s.max_len >= 0 and t > s.max_len:
            break
        s.m[i - 1] = x
        n0 = s0 + t
        n1 = s1 + i * t
        n2 = s2 + t * t
        if i == p - 1:
            s.count += 1
            size = (n0 * (1 - n0 - p) + p * n2) // 2 + n1
            if size > s.best:
                s.best = size
                s.n_best = 1
                for k in range(p - 1):
                    s.best_m[k] = s.m[k]
            elif size == s.best:
                s.n_best += 1
        else:
            _level(s, i + 1, w, t, n0, n1, n2)
        w = (w + i) % p
        x += 1
        if w == 0 or x >= p:
            break
    s.m[i - 1] = 0


def search_walks(int p, i64 max_len=-1):
    """Enumerate every restricted walk mod ``p``; see ``_kernels_py.search_walks``."""
    cdef Search s
    s.p = p
    s.max_len = max_len
    s.count = 0
    s.best = -1
    s.n_best = 0
    s.m = <int *> calloc(p, sizeof(int))
    s.best_m = <int *> calloc(p, sizeof(int))
    if s.m == NULL or s.best_m == NULL:
        free(s.m)
        free(s.best_m)
        raise MemoryError()
    try:
        with nogil:
            _level(&s, 1, 0, 0, 0, 0, 0)
        best_m = tuple(s.best_m[k] for k in range(p - 1)) if s.count else ()
        return s.count, s.best, s.n_best, best_m
    finally:
        free(s.m)
        free(s.best_m)


def first_hook_multiple(beta, int p):
    """Find the first hook length divisible by ``p``; see ``_kernels_py``.

    A hook b - g is divisible by p only when g = b (mod p), so each row steps
    through those gaps alone and reads the column off a prefix count of gaps.
    """
    cdef Py_ssize_t n = len(beta)
    if n == 0:
        return None
    cdef i64[::1] bv = memoryview(bytearray(n * sizeof(i64))).cast("q")
    cdef Py_ssize_t k
    for k in range(n):
        bv[k] = beta[k]
    cdef i64 top = bv[0]
    cdef unsigned char *occ = <unsigned char *> calloc(top + 1, 1)
    cdef i64 *gaps_upto = <i64 *> malloc((top + 1) * sizeof(i64))
    if occ == NULL or gaps_upto == NULL:
        free(occ)
        free(gaps_upto)
        raise MemoryError()
    cdef i64 b, g, running
    cdef Py_ssize_t hit_row = -1
    cdef i64 hit_col = -1
    try:
        with nogil:
            for k in range(n):
                occ[bv[k]] = 1
            running = 0
            for g in range(top + 1):
                if not occ[g]:
                    running += 1
                gaps_upto[g] = running
            for k in range(n):
                b = bv[k]
                g = b % p
                while g < b:
                    if not occ[g]:
                        hit_row = k
                        hit_col = gaps_upto[g]
                        break
                    g += p
                if hit_row >= 0:
                    break
    finally:
        free(occ)
        free(gaps_upto)
    if hit_row < 0:
        return None
    return hit_row + 1, hit_col
