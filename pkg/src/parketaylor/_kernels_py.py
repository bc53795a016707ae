"""Pure-Python versions of the hot loops.

These are the reference implementations; ``_kernels.pyx`` mirrors them
function by function and must return identical results.
"""

from __future__ import annotations


def rank_mod_p(dense, p):
    """Rank of an integer matrix over GF(p), p < 2**63."""
    rows = [[x % p for x in r] for r in dense]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    rank = 0
    for c in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for r in range(rank, nrows):
            if rows[r][c]:
                piv = r
                break
        if piv < 0:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = pow(prow[c], p - 2, p)
        for r in range(rank + 1, nrows):
            row = rows[r]
            f = row[c]
            if f:
                f = f * inv % p
                for k in range(c, ncols):
                    if prow[k]:
                        row[k] = (row[k] - f * prow[k]) % p
        rank += 1
    return rank


def _xgcd(a, b):
    x, nx, y, ny = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
    if a < 0:
        a, x, y = -a, -x, -y
    return x, y, a


def _sub_multiple(v, q, row):
    for k, x in row.items():
        w = v.get(k, 0) - q * x
        if w:
            v[k] = w
        else:
            del v[k]


def lattice_insert(rows, v):
    """Reduce sparse ``v`` into the echelon ``rows`` (mutated in place).

    Returns ``(grew, steps)`` where ``grew`` says whether a new pivot row
    was created.
    """
    steps = 0
    while v:
        c = min(v)
        row = rows.get(c)
        if row is None:
            if v[c] < 0:
                v = {k: -x for k, x in v.items()}
            rows[c] = v
            return True, steps
        steps += 1
        a = row[c]
        b = v[c]
        if b % a == 0:
            _sub_multiple(v, b // a, row)
            continue
        x, y, g = _xgcd(a, b)
        ag = a // g
        bg = b // g
        new_row = {}
        new_v = {}
        for k in row.keys() | v.keys():
            p = row.get(k, 0)
            q = v.get(k, 0)
            s = x * p + y * q
            t = ag * q - bg * p
            if s:
                new_row[k] = s
            if t:
                new_v[k] = t
        rows[c] = new_row
        v = new_v
    return False, steps


def lattice_reduce(rows, v):
    """Membership test of sparse ``v`` in the lattice spanned by ``rows``."""
    v = dict(v)
    while v:
        c = min(v)
        row = rows.get(c)
        if row is None:
            return False
        a = row[c]
        b = v[c]
        if b % a:
            return False
        _sub_multiple(v, b // a, row)
    return True


def binomial_normal_form(m, leads, trails, masks):
    """Normal form of the monomial ``m`` modulo pure binomials ``lead - trail``.

    Each step replaces ``m`` by ``m - lead + trail``; this is again a
    monomial, so the normal form of a monomial is a monomial.
    """
    n = len(leads)
    while True:
        mm = 0
        for i, e in enumerate(m):
            if e:
                mm |= 1 << i
        for k in range(n):
            if masks[k] & ~mm:
                continue
            a = leads[k]
            ok = True
            for x, y in zip(a, m):
                if x > y:
                    ok = False
                    break
            if ok:
                t = trails[k]
                m = tuple([y - x + z for x, y, z in zip(a, m, t)])
                break
        else:
            return m
