"""Exact integer linear algebra: Hermite normal form, rank, kernels, lattices.

Everything is arbitrary precision.  Sparse rows are ``dict[col, int]`` with
no zero entries.  The only fixed-width arithmetic is the modular rank filter
in :mod:`parketaylor.kernels`, whose answer is always certified exactly
before it is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from . import kernels

#: 2**62 - 57, the largest prime below 2**62.
MODULAR_PRIME = 4611686018427387847

SparseRow = dict[int, int]


class ExactMatrix:
    """Sparse matrix of Python integers keyed by ``(row, col)``."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: dict[tuple[int, int], int] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], int] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry {(r, c)} outside a {rows}x{cols} matrix")
            if v:
                self.entries[(r, c)] = int(v)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> "ExactMatrix":
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        ent = {(r, c): v for r, row in enumerate(data) for c, v in enumerate(row) if v}
        return cls(rows, cols, ent)

    @classmethod
    def from_rows(cls, rows: Sequence[SparseRow], cols: int) -> "ExactMatrix":
        ent = {(r, c): v for r, row in enumerate(rows) for c, v in row.items() if v}
        return cls(len(rows), cols, ent)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def __getitem__(self, rc: tuple[int, int]) -> int:
        return self.entries.get(rc, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def sparse_rows(self) -> list[SparseRow]:
        out: list[SparseRow] = [{} for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def column(self, c: int) -> list[int]:
        return [self.entries.get((r, c), 0) for r in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        right = other.sparse_rows()
        acc: dict[tuple[int, int], int] = {}
        for (r, k), v in self.entries.items():
            for c, w in right[k].items():
                acc[(r, c)] = acc.get((r, c), 0) + v * w
        return ExactMatrix(self.rows, other.cols, acc)

    def apply(self, vec: Sequence[int]) -> list[int]:
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        out = [0] * self.rows
        for (r, c), v in self.entries.items():
            out[r] += v * vec[c]
        return out

    def dumps(self) -> str:
        """Plain-text form: ``rows cols`` then sorted ``r c value`` triples."""
        lines = [f"{self.rows} {self.cols}"]
        lines += [f"{r} {c} {v}" for (r, c), v in sorted(self.entries.items())]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "ExactMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        rows, cols = (int(x) for x in lines[0].split())
        ent = {}
        for ln in lines[1:]:
            r, c, v = (int(x) for x in ln.split())
            ent[(r, c)] = v
        return cls(rows, cols, ent)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx, y, ny = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
    if a < 0:
        a, x, y = -a, -x, -y
    return x, y, a


def _axpy(dst: SparseRow, q: int, src: SparseRow) -> None:
    """dst -= q * src, in place, dropping zeros."""
    for c, v in src.items():
        w = dst.get(c, 0) - q * v
        if w:
            dst[c] = w
        else:
            dst.pop(c, None)


def _combine(a: SparseRow, b: SparseRow, x: int, y: int, u: int, v: int) -> tuple[SparseRow, SparseRow]:
    """Return (x*a + y*b, u*a + v*b)."""
    na: SparseRow = {}
    nb: SparseRow = {}
    for c in a.keys() | b.keys():
        p = a.get(c, 0)
        q = b.get(c, 0)
        s = x * p + y * q
        t = u * p + v * q
        if s:
            na[c] = s
        if t:
            nb[c] = t
    return na, nb


def hnf(M: ExactMatrix) -> tuple[ExactMatrix, ExactMatrix]:
    """Row Hermite normal form ``H = U @ M`` with ``U`` unimodular.

    Pivots are positive and the entries above each pivot are reduced into
    ``[0, pivot)``.  Zero rows of ``H`` come last.
    """
    rows = M.sparse_rows()
    trans: list[SparseRow] = [{i: 1} for i in range(M.rows)]
    pivots: list[int] = []
    top = 0
    for c in range(M.cols):
        if top == M.rows:
            break
        active = [r for r in range(top, M.rows) if c in rows[r]]
        if not active:
            continue
        while len(active) > 1:
            # smallest |entry| first, sparsest row as tie-break
            active.sort(key=lambda r: (abs(rows[r][c]), len(rows[r])))
            p = active[0]
            piv = rows[p][c]
            keep = [p]
            for r in active[1:]:
                q = rows[r][c] // piv
                _axpy(rows[r], q, rows[p])
                _axpy(trans[r], q, trans[p])
                if c in rows[r]:
                    keep.append(r)
            active = keep
        p = active[0]
        rows[top], rows[p] = rows[p], rows[top]
        trans[top], trans[p] = trans[p], trans[top]
        if rows[top][c] < 0:
            rows[top] = {k: -v for k, v in rows[top].items()}
            trans[top] = {k: -v for k, v in trans[top].items()}
        piv = rows[top][c]
        for r in range(top):
            e = rows[r].get(c, 0)
            if e < 0 or e >= piv:
                q = e // piv
                _axpy(rows[r], q, rows[top])
                _axpy(trans[r], q, trans[top])
        pivots.append(c)
        top += 1
    return ExactMatrix.from_rows(rows, M.cols), ExactMatrix.from_rows(trans, M.rows)


def hnf_pivots(H: ExactMatrix) -> list[int]:
    out = []
    for row in H.sparse_rows():
        if row:
            out.append(min(row))
    return out


def det(M: ExactMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    a = M.to_dense()
    n = M.rows
    sign = 1
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def det_mod(M: ExactMatrix, p: int = MODULAR_PRIME) -> int:
    a = [[v % p for v in row] for row in M.to_dense()]
    n = M.rows
    d = 1
    for k in range(n):
        r = next((r for r in range(k, n) if a[r][k]), None)
        if r is None:
            return 0
        if r != k:
            a[k], a[r] = a[r], a[k]
            d = -d
        d = d * a[k][k] % p
        inv = pow(a[k][k], -1, p)
        for i in range(k + 1, n):
            f = a[i][k] * inv % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[k])]
    return d % p


def _bareiss_rank(dense: list[list[int]]) -> int:
    a = [row[:] for row in dense]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    rank = 0
    prev = 1
    for c in range(ncols):
        if rank == nrows:
            break
        r = next((r for r in range(rank, nrows) if a[r][c]), None)
        if r is None:
            continue
        a[rank], a[r] = a[r], a[rank]
        pv = a[rank][c]
        prow = a[rank]
        for i in range(rank + 1, nrows):
            row = a[i]
            f = row[c]
            if f:
                a[i] = [(x * pv - f * y) // prev for x, y in zip(row, prow)]
            else:
                a[i] = [x * pv // prev for x in row]
        prev = pv
        rank += 1
    return rank


def rank(M: ExactMatrix) -> int:
    """Rank over the rationals.

    A modular elimination gives a lower bound; when it already equals
    ``min(rows, cols)`` that settles it, otherwise exact fraction-free
    elimination decides.
    """
    if not M.entries:
        return 0
    dense = M.to_dense()
    if M.rows > M.cols:
        dense = [list(col) for col in zip(*dense)]
    lower = kernels.rank_mod_p(dense, MODULAR_PRIME)
    if lower == min(M.rows, M.cols):
        return lower
    return _bareiss_rank(dense)


@dataclass
class LatticeBasis:
    vectors: list[list[int]]
    dim: int

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)


def integer_kernel_basis(M: ExactMatrix) -> LatticeBasis:
    """Basis of ``{u in Z^cols : M u = 0}`` read off ``hnf(M^T)``.

    The rows of the unimodular transform whose image row vanishes span the
    whole integer kernel, so the returned lattice is saturated.
    """
    H, U = hnf(M.transpose())
    hrows = H.sparse_rows()
    urows = U.sparse_rows()
    vecs = []
    for hr, ur in zip(hrows, urows):
        if not hr:
            v = [0] * M.cols
            for c, x in ur.items():
                v[c] = x
            vecs.append(_normalize_sign(v))
    return LatticeBasis(vecs, M.cols)


def _normalize_sign(v: list[int]) -> list[int]:
    for x in v:
        if x:
            return v if x > 0 else [-y for y in v]
    return v


class Lattice:
    """Incrementally grown integer lattice kept in sparse echelon form.

    Rows are indexed by their leading (smallest) column.  Insertion reduces
    the new vector against existing rows with extended-gcd row operations,
    so the echelon rows always form a basis of the span of everything added.
    """

    __slots__ = ("dim", "rows")

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def copy(self) -> "Lattice":
        out = Lattice(self.dim)
        out.rows = {k: dict(v) for k, v in self.rows.items()}
        return out

    def add(self, vec: SparseRow | Sequence[int]) -> bool:
        """Add a vector; return True when the rank grew."""
        v = self._sparse(vec)
        grew, _ = kernels.lattice_insert(self.rows, v)
        return grew

    def contains(self, vec: SparseRow | Sequence[int]) -> bool:
        v = self._sparse(vec)
        return kernels.lattice_reduce(self.rows, v)

    __contains__ = contains

    def pivots(self) -> dict[int, int]:
        return {c: row[c] for c, row in self.rows.items()}

    def unit_pivots(self) -> bool:
        return all(abs(row[c]) == 1 for c, row in self.rows.items())

    def basis(self) -> list[list[int]]:
        out = []
        for c in sorted(self.rows):
            v = [0] * self.dim
            for k, x in self.rows[c].items():
                v[k] = x
            out.append(v)
        return out

    def _sparse(self, vec: SparseRow | Sequence[int]) -> SparseRow:
        if isinstance(vec, dict):
            if vec and (min(vec) < 0 or max(vec) >= self.dim):
                raise ValueError("vector index outside lattice dimension")
            return {k: x for k, x in vec.items() if x}
        if len(vec) != self.dim:
            raise ValueError(f"vector of length {len(vec)} in a lattice of dimension {self.dim}")
        return {k: x for k, x in enumerate(vec) if x}


def lattice_from(vectors: Iterable[Sequence[int] | SparseRow], dim: int) -> Lattice:
    L = Lattice(dim)
    for v in vectors:
        L.add(v)
    return L


def lattice_contains(B: LatticeBasis, v: Sequence[int]) -> bool:
    if len(v) != B.dim:
        raise ValueError(f"vector of length {len(v)} against basis vectors of length {B.dim}")
    return lattice_from(B.vectors, B.dim).contains(v)


@dataclass
class SpanReport:
    rank: int
    saturated: bool | None = None
    equals_reference: bool | None = None
    reference_rank: int | None = None
    lattice: Lattice | None = field(default=None, repr=False)


def is_saturated(L: Lattice) -> bool:
    """Whether ``L = (Q L) cap Z^dim``."""
    if L.unit_pivots():
        return True
    basis = L.basis()
    perp = integer_kernel_basis(ExactMatrix.from_dense(basis, L.dim))
    if not perp.vectors:
        sat = [[int(i == j) for j in range(L.dim)] for i in range(L.dim)]
    else:
        sat = integer_kernel_basis(ExactMatrix.from_dense(perp.vectors, L.dim)).vectors
    return all(L.contains(v) for v in sat)


def span_rank(
    vectors: Iterable[Sequence[int] | SparseRow],
    dim: int | None = None,
    reference: LatticeBasis | None = None,
) -> SpanReport:
    """Rank of the integer span of ``vectors``.

    With a reference kernel basis, also decide whether the span is the full
    reference lattice (same rank and every reference vector contained).
    """
    vectors = list(vectors)
    if dim is None:
        if reference is not None:
            dim = reference.dim
        elif vectors and not isinstance(vectors[0], dict):
            dim = len(vectors[0])
        else:
            raise ValueError("span_rank needs the ambient dimension")
    L = lattice_from(vectors, dim)
    rep = SpanReport(rank=L.rank, lattice=L)
    if reference is not None:
        rep.reference_rank = reference.rank
        rep.equals_reference = L.rank == reference.rank and all(L.contains(v) for v in reference.vectors)
        rep.saturated = rep.equals_reference or is_saturated(L)
    return rep


def lattice_index(sub: Lattice, sup: Lattice) -> int | None:
    """``[sup : sub]`` for lattices of equal rank with ``sub`` inside ``sup``.

    Echelon pivots sit in the same columns for lattices spanning the same
    rational space, so the index is the ratio of the pivot products.
    """
    if sub.rank != sup.rank or set(sub.rows) != set(sup.rows):
        return None
    a = b = 1
    for c in sub.rows:
        a *= abs(sub.rows[c][c])
        b *= abs(sup.rows[c][c])
    if a % b:
        return None
    return a // b


def rref(M: ExactMatrix) -> tuple[list[dict[int, Fraction]], list[int]]:
    """Reduced row echelon form over Q as sparse rows, with pivot columns."""
    rows = [{c: Fraction(x) for c, x in r.items()} for r in M.sparse_rows() if r]
    piv_rows: list[dict[int, Fraction]] = []
    pivots: list[int] = []
    for c in range(M.cols):
        k = next((i for i, r in enumerate(rows) if c in r), None)
        if k is None:
            continue
        r = rows.pop(k)
        inv = 1 / r[c]
        r = {j: x * inv for j, x in r.items()}
        for other in rows:
            f = other.get(c)
            if f:
                for j, x in r.items():
                    w = other.get(j, 0) - f * x
                    if w:
                        other[j] = w
                    else:
                        other.pop(j, None)
        piv_rows.append(r)
        pivots.append(c)
    # back substitution
    for i in range(len(piv_rows) - 1, -1, -1):
        c = pivots[i]
        r = piv_rows[i]
        for k in range(i):
            f = piv_rows[k].get(c)
            if f:
                other = piv_rows[k]
                for j, x in r.items():
                    w = other.get(j, 0) - f * x
                    if w:
                        other[j] = w
                    else:
                        other.pop(j, None)
    return piv_rows, pivots


def rational_kernel_basis(M: ExactMatrix) -> list[list[int]]:
    """Kernel over Q, one primitive integer vector per free column (echelon form)."""
    rows, pivots = rref(M)
    pset = set(pivots)
    out = []
    for f in range(M.cols):
        if f in pset:
            continue
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for r, c in zip(rows, pivots):
            x = r.get(f)
            if x:
                v[c] = -x
        den = 1
        for x in v:
            if x:
                den = den * x.denominator // gcd(den, x.denominator)
        iv = [int(x * den) for x in v]
        g = 0
        for x in iv:
            g = gcd(g, x)
        out.append(_normalize_sign([x // g for x in iv]))
    return out
