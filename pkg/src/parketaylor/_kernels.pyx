# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_kernels_py``.

Every function returns exactly what its pure-Python twin returns.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    static inline unsigned long long pt_mulmod(unsigned long long a, unsigned long long b, unsigned long long p) {
        return (unsigned long long)(((unsigned __int128)a * b) % p);
    }
    """
    unsigned long long pt_mulmod(unsigned long long a, unsigned long long b, unsigned long long p) nogil

ctypedef unsigned long long u64


cdef u64 _powmod(u64 a, u64 e, u64 p) noexcept nogil:
    cdef u64 r = 1
    while e:
        if e & 1:
            r = pt_mulmod(r, a, p)
        a = pt_mulmod(a, a, p)
        e >>= 1
    return r


def rank_mod_p(dense, p):
    """Rank of an integer matrix over GF(p), p < 2**63."""
    cdef Py_ssize_t nrows = len(dense)
    if nrows == 0:
        return 0
    cdef Py_ssize_t ncols = len(dense[0])
    if ncols == 0:
        return 0
    cdef u64 P = p
    cdef u64 *a = <u64 *> malloc(nrows * ncols * sizeof(u64))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t r, c, k, piv, rank = 0
    cdef u64 inv, f, tmp, x
    try:
        for r in range(nrows):
            row = dense[r]
            for c in range(ncols):
                a[r * ncols + c] = <u64> (row[c] % p)
        with nogil:
            for c in range(ncols):
                if rank == nrows:
                    break
                piv = -1
                for r in range(rank, nrows):
                    if a[r * ncols + c]:
                        piv = r
                        break
                if piv < 0:
                    continue
                if piv != rank:
                    for k in range(ncols):
                        tmp = a[piv * ncols + k]
                        a[piv * ncols + k] = a[rank * ncols + k]
                        a[rank * ncols + k] = tmp
                inv = _powmod(a[rank * ncols + c], P - 2, P)
                for r in range(rank + 1, nrows):
                    f = a[r * ncols + c]
                    if f:
                        f = pt_mulmod(f, inv, P)
                        for k in range(c, ncols):
                            x = a[rank * ncols + k]
                            if x:
                                a[r * ncols + k] = (a[r * ncols + k] + P - pt_mulmod(f, x, P)) % P
                rank += 1
    finally:
        free(a)
    return rank


cdef tuple _xgcd(object a, object b):
    x, nx, y, ny = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
    if a < 0:
        a, x, y = -a, -x, -y
    return x, y, a


cdef void _sub_multiple(dict v, object q, dict row):
    for k, x in row.items():
        w = v.get(k, 0) - q * x
        if w:
            v[k] = w
        else:
            del v[k]


def lattice_insert(dict rows, v):
    """Reduce sparse ``v`` into the echelon ``rows`` (mutated in place)."""
    cdef long steps = 0
    cdef dict vv = v
    while vv:
        c = min(vv)
        row = rows.get(c)
        if row is None:
            if vv[c] < 0:
                vv = {k: -x for k, x in vv.items()}
            rows[c] = vv
            return True, steps
        steps += 1
        a = row[c]
        b = vv[c]
        if b % a == 0:
            _sub_multiple(vv, b // a, row)
            continue
        x, y, g = _xgcd(a, b)
        ag = a // g
        bg = b // g
        new_row = {}
        new_v = {}
        for k in row.keys() | vv.keys():
            p = row.get(k, 0)
            q = vv.get(k, 0)
            s = x * p + y * q
            t = ag * q - bg * p
            if s:
                new_row[k] = s
            if t:
                new_v[k] = t
        rows[c] = new_row
        vv = new_v
    return False, steps


def lattice_reduce(dict rows, v):
    """Membership test of sparse ``v`` in the lattice spanned by ``rows``."""
    cdef dict vv = dict(v)
    while vv:
        c = min(vv)
        row = rows.get(c)
        if row is None:
            return False
        a = row[c]
        b = vv[c]
        if b % a:
            return False
        _sub_multiple(vv, b // a, row)
    return True


def binomial_normal_form(m, leads, trails, masks):
    """Normal form of the monomial ``m`` modulo pure binomials ``lead - trail``."""
    cdef Py_ssize_t nv = len(m)
    cdef Py_ssize_t nb = len(leads)
    if nb == 0:
        return tuple(m)
    cdef int *cur = <int *> malloc(nv * sizeof(int))
    cdef int *L = <int *> malloc(nb * nv * sizeof(int))
    cdef int *T = <int *> malloc(nb * nv * sizeof(int))
    if cur == NULL or L == NULL or T == NULL:
        free(cur); free(L); free(T)
        raise MemoryError()
    cdef Py_ssize_t i, k
    cdef bint ok, changed
    try:
        for i in range(nv):
            cur[i] = m[i]
        for k in range(nb):
            a = leads[k]
            t = trails[k]
            for i in range(nv):
                L[k * nv + i] = a[i]
                T[k * nv + i] = t[i]
        with nogil:
            changed = True
            while changed:
                changed = False
                for k in range(nb):
                    ok = True
                    for i in range(nv):
                        if L[k * nv + i] > cur[i]:
                            ok = False
                            break
                    if ok:
                        for i in range(nv):
                            cur[i] = cur[i] - L[k * nv + i] + T[k * nv + i]
                        changed = True
                        break
        return tuple([cur[i] for i in range(nv)])
    finally:
        free(cur); free(L); free(T)
