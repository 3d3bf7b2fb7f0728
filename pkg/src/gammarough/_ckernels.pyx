# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Mirrors ``_kernels_py`` exactly; see that module for layouts."""

from array import array

ctypedef unsigned long long u64

BACKEND = "cython"


cdef inline int lowbit(u64 x) nogil:
    cdef int i = 0
    while not (x & 1):
        x >>= 1
        i += 1
    return i


def product_table(const long long[:] table, int n, int m):
    pm = array("Q", bytes(8 * n * n))
    cdef u64[:] out = pm
    cdef int g, ab
    cdef Py_ssize_t base
    for g in range(m):
        base = <Py_ssize_t>g * n * n
        for ab in range(n * n):
            out[ab] |= (<u64>1) << table[base + ab]
    return pm


cdef inline u64 _set_product(const u64[:] pm, int n, u64 A, u64 B) nogil:
    cdef u64 out = 0
    cdef u64 bb
    cdef int a = 0
    cdef int b
    while A:
        if A & 1:
            bb = B
            b = 0
            while bb:
                if bb & 1:
                    out |= pm[a * n + b]
                bb >>= 1
                b += 1
        A >>= 1
        a += 1
    return out


def set_product(const u64[:] pm, int n, u64 A, u64 B):
    return _set_product(pm, n, A, B)


cdef inline void _approx(const u64[:] images, int n_src, u64 B, u64* lower, u64* upper) nogil:
    cdef u64 lo = 0, up = 0, img
    cdef int x
    for x in range(n_src):
        img = images[x]
        if img & ~B == 0:
            lo |= (<u64>1) << x
        if img & B:
            up |= (<u64>1) << x
    lower[0] = lo
    upper[0] = up


def approximations(const u64[:] images, int n_src, u64 B):
    cdef u64 lo, up
    _approx(images, n_src, B, &lo, &up)
    return lo, up


def all_approximations(const u64[:] images, int n_src, int n_tgt):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n_tgt
    lowers = array("Q", bytes(8 * size))
    uppers = array("Q", bytes(8 * size))
    cdef u64[:] lo = lowers
    cdef u64[:] up = uppers
    cdef Py_ssize_t B
    for B in range(size):
        _approx(images, n_src, <u64>B, &lo[B], &up[B])
    return lowers, uppers


def associativity_failures(const long long[:] table, int n, int m, long limit=-1):
    out = []
    cdef int a, g1, b, g2, c
    cdef long long ab, left, right
    cdef Py_ssize_t nn = n * n
    cdef long found = 0
    for a in range(n):
        for g1 in range(m):
            for b in range(n):
                ab = table[g1 * nn + a * n + b]
                for g2 in range(m):
                    for c in range(n):
                        left = table[g2 * nn + ab * n + c]
                        right = table[g1 * nn + a * n + table[g2 * nn + b * n + c]]
                        if left != right:
                            out.append((a, g1, b, g2, c, left, right))
                            found += 1
                            if 0 <= limit <= found:
                                return out
    return out


cdef inline u64 _anti_product(const long long[:] table, int n, int g, u64 left_set, u64 right_set) nogil:
    cdef u64 out = 0
    cdef u64 ru
    cdef Py_ssize_t base = <Py_ssize_t>g * n * n
    cdef int v = 0, u
    while left_set:
        if left_set & 1:
            ru = right_set
            u = 0
            while ru:
                if ru & 1:
                    out |= (<u64>1) << table[base + v * n + u]
                ru >>= 1
                u += 1
        left_set >>= 1
        v += 1
    return out


def anti_product(const long long[:] table, int n, int g, u64 left_set, u64 right_set):
    return _anti_product(table, n, g, left_set, right_set)


def antihom_scan(const long long[:] src_table, int n1, const long long[:] tgt_table,
                 int n2, int m, const u64[:] images):
    cdef int a, g, b
    cdef u64 rhs, lhs, extra
    cdef Py_ssize_t nn = n1 * n1
    strong_w = None
    for a in range(n1):
        for g in range(m):
            for b in range(n1):
                rhs = _anti_product(tgt_table, n2, g, images[b], images[a])
                lhs = images[src_table[g * nn + a * n1 + b]]
                if rhs != lhs:
                    if strong_w is None:
                        strong_w = (a, g, b)
                    extra = rhs & ~lhs
                    if extra:
                        return 0, (a, g, b, lowbit(extra)), strong_w
    if strong_w is None:
        return 2, None, None
    return 1, None, strong_w


def prime_witness(const long long[:] table, int n, int m, u64 A):
    cdef int x, g, y
    cdef Py_ssize_t nn = n * n, row
    for x in range(n):
        if (A >> x) & 1:
            continue
        for g in range(m):
            row = g * nn + x * n
            for y in range(n):
                if (A >> y) & 1:
                    continue
                if (A >> table[row + y]) & 1:
                    return (x, g, y)
    return None
