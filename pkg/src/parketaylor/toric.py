"""Binomials on the toric Parke-Taylor variety.

Covers the adjacency-balance test, conversion between kernel vectors and
binomials, the splice lifting of binomials, the two quadratic families, the
toric ideal itself and the check that the quadratic families span the
integer kernel.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

from .groebner import Budget, BudgetExceeded, Ideal, saturate_by_variable, saturate
from .linalg import Lattice, LatticeBasis, integer_kernel_basis, is_saturated, lattice_index
from .permutations import Perm, cyclic_adjacencies, enumerate_sigma, format_perm, sigma_index, splice_at
from .polys import Polynomial
from .ptcore import build_matrix, ring_perms, z_name, z_ring


class PreconditionFailed(ValueError):
    """A lemma's hypothesis does not hold for the given input."""


def _mono_str(perms: Sequence[Perm]) -> str:
    """Serialized monomial: sorted factors joined by ``*`` with powers."""
    c = Counter(perms)
    return "*".join(z_name(p) + (f"^{e}" if e > 1 else "") for p, e in sorted(c.items()))


@dataclass(frozen=True)
class Binomial:
    """``z^plus - z^minus`` with coprime sides and canonical sign.

    ``plus`` and ``minus`` are sorted tuples of permutations (multisets).
    The side whose serialized monomial is lexicographically smaller is
    stored as ``minus``.
    """

    plus: tuple[Perm, ...]
    minus: tuple[Perm, ...]

    @staticmethod
    def make(plus: Iterable[Sequence[int]], minus: Iterable[Sequence[int]]) -> "Binomial":
        P = Counter(tuple(p) for p in plus)
        M = Counter(tuple(p) for p in minus)
        common = P & M
        P -= common
        M -= common
        a = tuple(sorted(P.elements()))
        b = tuple(sorted(M.elements()))
        if _mono_str(a) < _mono_str(b):
            a, b = b, a
        return Binomial(a, b)

    @property
    def n(self) -> int:
        return len((self.plus or self.minus)[0])

    @property
    def degree(self) -> int:
        return len(self.plus)

    def is_zero(self) -> bool:
        return not self.plus and not self.minus

    def vector(self, n: int | None = None) -> list[int]:
        n = n or self.n
        idx = sigma_index(n)
        v = [0] * len(idx)
        for p in self.plus:
            v[idx[p]] += 1
        for p in self.minus:
            v[idx[p]] -= 1
        return v

    def sparse_vector(self) -> dict[int, int]:
        idx = sigma_index(self.n)
        v: dict[int, int] = {}
        for p in self.plus:
            v[idx[p]] = v.get(idx[p], 0) + 1
        for p in self.minus:
            v[idx[p]] = v.get(idx[p], 0) - 1
        return {k: x for k, x in v.items() if x}

    def polynomial(self, n: int | None = None) -> Polynomial:
        n = n or self.n
        R = z_ring(n)
        idx = sigma_index(n)
        a = [0] * R.nvars
        b = [0] * R.nvars
        for p in self.plus:
            a[idx[p]] += 1
        for p in self.minus:
            b[idx[p]] += 1
        return Polynomial(R, {tuple(a): 1, tuple(b): -1})

    def dumps(self) -> str:
        return f"+1/1*{_mono_str(self.plus)} -1/1*{_mono_str(self.minus)}"

    def tableau(self) -> str:
        left = [format_perm(p) for p in self.plus]
        right = [format_perm(p) for p in self.minus]
        return "[" + " | ".join(left) + "] - [" + " | ".join(right) + "]"

    def __str__(self) -> str:
        return self.dumps()


def binomial_from_polynomial(F: Polynomial) -> Binomial:
    if len(F.terms) != 2 or sorted(F.terms.values()) != [-1, 1]:
        raise ValueError("not a binomial with coefficients +1 and -1")
    perms = ring_perms(F.ring)
    sides = {}
    for m, c in F.terms.items():
        sides[c] = [perms[i] for i, e in enumerate(m) for _ in range(e)]
    return Binomial.make(sides[1], sides[-1])


def _adj_union(perms: Iterable[Perm]) -> Counter:
    out: Counter = Counter()
    for p in perms:
        out.update(cyclic_adjacencies(p))
    return out


def adjacency_balanced(b: Binomial | tuple[Sequence[Perm], Sequence[Perm]]) -> bool:
    """Both sides carry the same multiset of cyclic adjacencies."""
    plus, minus = (b.plus, b.minus) if isinstance(b, Binomial) else b
    if len(plus) != len(minus):
        raise ValueError(f"monomials of different degrees {len(plus)} and {len(minus)}")
    return _adj_union(map(tuple, plus)) == _adj_union(map(tuple, minus))


def binomial_from_vector(u: Sequence[int], n: int | None = None) -> Binomial:
    """Binomial ``z^{u+} - z^{u-}`` of an integer vector indexed by ``Sigma_n``."""
    if n is None:
        n = next(k for k in range(3, 13) if factorial(k - 2) == len(u))
    S = enumerate_sigma(n)
    if len(u) != len(S):
        raise ValueError(f"vector of length {len(u)} does not match (n-2)! = {len(S)}")
    if not any(u):
        raise ValueError("the zero vector has no binomial")
    plus = [S[i] for i, x in enumerate(u) for _ in range(max(x, 0))]
    minus = [S[i] for i, x in enumerate(u) for _ in range(max(-x, 0))]
    return Binomial.make(plus, minus)


# ---------------------------------------------------------------------------
# lifting


def position_pairs(perms: Iterable[Sequence[int]], i: int) -> Counter:
    """Multiset of ordered letter pairs ``(s_i, s_{i+1})``, 1-based, cyclic."""
    out: Counter = Counter()
    for s in perms:
        n = len(s)
        if not 1 <= i <= n:
            raise ValueError(f"position {i} outside 1..{n}")
        out[(s[i - 1], s[i % n])] += 1
    return out


def _check_delta(delta: Sequence[int], n: int) -> tuple[int, ...]:
    delta = tuple(delta)
    if sorted(delta) != list(range(n + 1, n + 1 + len(delta))):
        raise ValueError(f"delta must be a word on {n + 1}..{n + len(delta)}")
    return delta


def lift_binomial(b: Binomial, i: int, delta: Sequence[int]) -> Binomial:
    """Splice ``delta`` between positions ``i`` and ``i + 1`` on both sides.

    Requires the ordered pairs at position ``i`` to agree as multisets.
    """
    n = b.n
    delta = _check_delta(delta, n)
    if not 2 <= i <= n:
        raise ValueError(f"position {i} outside 2..{n}")
    left = position_pairs(b.plus, i)
    right = position_pairs(b.minus, i)
    if left != right:
        raise PreconditionFailed(
            f"position-{i} pairs differ: {sorted(left.elements())} vs {sorted(right.elements())}"
        )
    if not delta:
        return b
    return Binomial.make(
        [splice_at(s, i, delta) for s in b.plus], [splice_at(s, i, delta) for s in b.minus]
    )


def liftable_positions(b: Binomial) -> list[int]:
    return [i for i in range(2, b.n + 1) if position_pairs(b.plus, i) == position_pairs(b.minus, i)]


# ---------------------------------------------------------------------------
# quadratic families


def _splits(rest: Sequence[int], parts: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Words on ``rest`` cut into ``parts`` consecutive (possibly empty) blocks."""
    L = len(rest)
    for w in permutations(sorted(rest)):
        if parts == 2:
            for a in range(L + 1):
                yield (w[:a], w[a:])
        else:
            for a in range(L + 1):
                for b in range(a, L + 1):
                    yield (w[:a], w[a:b], w[b:])


def family_one(n: int) -> Iterator[Binomial]:
    letters = range(3, n + 1)
    for quad in _quads(n):
        i, j, k, l = quad
        rest = [x for x in letters if x not in quad]
        for alpha, gamma in _splits(rest, 2):
            h = (1, 2) + alpha
            yield Binomial.make(
                [h + (i, j, k, l) + gamma, h + (j, l, i, k) + gamma],
                [h + (i, j, l, k) + gamma, h + (j, k, i, l) + gamma],
            )


def family_two(n: int) -> Iterator[Binomial]:
    letters = range(3, n + 1)
    for quad in _quads(n):
        i, j, k, l = quad
        rest = [x for x in letters if x not in quad]
        for alpha, beta, gamma in _splits(rest, 3):
            if not beta:
                continue
            h = (1, 2) + alpha
            yield Binomial.make(
                [h + (i, j) + beta + (k, l) + gamma, h + (j, i) + beta + (l, k) + gamma],
                [h + (i, j) + beta + (l, k) + gamma, h + (j, i) + beta + (k, l) + gamma],
            )


def _quads(n: int) -> Iterator[tuple[int, int, int, int]]:
    # quadruples ascending as sets, then every assignment of the four roles
    from itertools import combinations

    for q in combinations(range(3, n + 1), 4):
        yield from permutations(q)


@lru_cache(maxsize=None)
def quadratic_family(n: int) -> tuple[Binomial, ...]:
    """Both quadratic families, deduplicated, in first-seen order."""
    if n < 6:
        raise ValueError(f"the quadratic families need n >= 6, got {n}")
    seen: dict[Binomial, None] = {}
    for gen in (family_one(n), family_two(n)):
        for b in gen:
            if not b.is_zero():
                seen.setdefault(b, None)
    return tuple(seen)


# ---------------------------------------------------------------------------
# kernel and toric ideal


@lru_cache(maxsize=None)
def kernel_basis(n: int) -> LatticeBasis:
    return integer_kernel_basis(build_matrix(n))


def expected_kernel_rank(n: int) -> int:
    return factorial(n - 2) - comb(n - 1, 2) + 1


def kernel_binomials(n: int) -> list[Binomial]:
    if n < 4:
        raise ValueError(f"kernel_binomials needs n >= 4, got {n}")
    return [binomial_from_vector(v, n) for v in kernel_basis(n).vectors]


#: default limit on the number of coordinates for a toric ideal computation
MAX_TORIC_VARIABLES = 24


def toric_ideal(
    n: int,
    budget: Budget | None = None,
    *,
    method: str = "variables",
    max_variables: int | None = MAX_TORIC_VARIABLES,
) -> Ideal:
    """The toric ideal ``I(T_n)`` by saturating the kernel binomials.

    ``method`` is ``variables`` (binomial engine, one variable at a time)
    or ``elimination`` (adjoin ``t`` with ``t * prod z - 1``).  Beyond the
    budget the unsaturated kernel ideal is returned with
    ``flags['budget_exceeded']`` set.
    """
    if n < 5:
        raise ValueError(f"toric_ideal needs n >= 5, got {n}")
    R = z_ring(n)
    gens = [b.polynomial(n) for b in kernel_binomials(n)]
    base = Ideal(gens, R)
    if max_variables is not None and R.nvars > max_variables:
        base.flags.update(budget_exceeded=True, reason=f"{R.nvars} coordinates exceed {max_variables}")
        return base
    try:
        if method == "variables":
            cur = gens
            for v in range(R.nvars):
                cur = saturate_by_variable(cur, v, R, budget=budget)
            out = Ideal(cur, R)
        elif method == "elimination":
            prod = R.monomial([1] * R.nvars)
            out = saturate(base, prod, method="elimination", budget=budget)
        else:
            raise ValueError(f"unknown saturation method {method!r}")
    except BudgetExceeded as exc:
        base.flags.update(budget_exceeded=True, reason=str(exc))
        return base
    out.flags.update(budget_exceeded=False)
    return out


# ---------------------------------------------------------------------------
# the quadratic-span check


@lru_cache(maxsize=None)
def quadratic_kernel_binomials(n: int) -> tuple[Binomial, ...]:
    """Every non-zero quadratic binomial of ``I(T_n)``, one per unordered pair of monomials.

    Quadratic monomials are grouped by the multiset of adjacencies they
    carry; within a group of size ``s`` the ``s - 1`` differences to the
    first member already span the group, and those are what is returned.
    """
    from itertools import combinations_with_replacement

    if n < 4:
        raise ValueError(f"needs n >= 4, got {n}")
    groups: dict[tuple, list[tuple[Perm, Perm]]] = {}
    for a, b in combinations_with_replacement(enumerate_sigma(n), 2):
        key = tuple(sorted((_adj_union([a, b])).items()))
        groups.setdefault(key, []).append((a, b))
    out = []
    for members in groups.values():
        first = members[0]
        for other in members[1:]:
            out.append(Binomial.make(first, other))
    return tuple(out)


def quadratic_part_size(n: int) -> int:
    """Dimension of the degree-2 part of ``I(T_n)``."""
    return len(quadratic_kernel_binomials(n))


@dataclass
class ConjectureReport:
    n: int
    source: str
    family_size: int
    span_rank: int
    kernel_rank: int
    saturated: bool
    verdict: bool
    index: int | None = None
    selected: list[int] = field(default_factory=list)
    outside_families: int = 0
    method: str = "lattice"
    rank_mod_2: int | None = None

    def lines(self) -> list[str]:
        idx = "n/a" if self.index is None else str(self.index)
        return [
            f"n = {self.n}",
            f"source = {self.source}",
            f"family size = {self.family_size}",
            f"span rank = {self.span_rank}",
            f"kernel rank = {self.kernel_rank}",
            f"saturated = {self.saturated}",
            f"index in kernel lattice = {idx}",
            f"verdict = {self.verdict}",
            f"selected basis size = {len(self.selected)}",
            f"kernel basis vectors outside the span = {self.outside_families}",
            f"method = {self.method}",
            f"rank mod 2 = {'n/a' if self.rank_mod_2 is None else self.rank_mod_2}",
        ]


CONJECTURE_SOURCES = ("families", "quadratics")


#: prime for the modular rank; any rank found modulo it is a lower bound for the rational rank
_BIG_PRIME = 2147483647


def _rank_mod_2(vectors: Iterable[dict[int, int]]) -> int:
    piv: dict[int, int] = {}
    for sv in vectors:
        v = 0
        for k, x in sv.items():
            if x % 2:
                v ^= 1 << k
        while v:
            h = v.bit_length() - 1
            r = piv.get(h)
            if r is None:
                piv[h] = v
                break
            v ^= r
    return len(piv)


def _rank_mod_p(vectors: Iterable[dict[int, int]], p: int = _BIG_PRIME) -> tuple[int, list[int]]:
    """Rank modulo ``p`` and the positions of the vectors that raised it."""
    piv: dict[int, dict[int, int]] = {}
    kept = []
    for pos, sv in enumerate(vectors):
        v = {k: x % p for k, x in sv.items() if x % p}
        while v:
            h = max(v)
            r = piv.get(h)
            if r is None:
                inv = pow(v[h], p - 2, p)
                piv[h] = {k: x * inv % p for k, x in v.items()}
                kept.append(pos)
                break
            c = v[h]
            for k, x in r.items():
                y = (v.get(k, 0) - c * x) % p
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return len(piv), kept


def check_conjecture(n: int, source: str = "families", method: str = "auto") -> ConjectureReport:
    """Does a set of quadratic binomials span the whole integer kernel of ``A_n``?

    ``source='families'`` uses :func:`quadratic_family`; ``'quadratics'``
    uses every quadratic binomial of ``I(T_n)``.  The verdict requires full
    rank and saturation.

    ``method='lattice'`` streams the vectors into an exact echelon lattice
    and keeps a member only when it is new.  ``method='modular'`` (the
    default for ``n >= 9``) is much cheaper: the rank modulo a large prime
    bounds the rational rank from below, and since the kernel is saturated
    in ``Z^N``, a span equal to it must also have full rank modulo 2.  So
    full rank modulo the prime with a drop modulo 2 proves the span is a
    proper sublattice of even index.  If nothing is decided this way the
    exact lattice method runs.
    """
    if source == "families":
        fam = quadratic_family(n)
    elif source == "quadratics":
        fam = quadratic_kernel_binomials(n)
    else:
        raise ValueError(f"unknown source {source!r}; expected one of {CONJECTURE_SOURCES}")
    if method == "auto":
        method = "modular" if n >= 9 else "lattice"
    expected = expected_kernel_rank(n)
    if method == "modular":
        vecs = [b.sparse_vector() for b in fam]
        r2 = _rank_mod_2(vecs)
        rp, kept = _rank_mod_p(vecs)
        if rp == expected and r2 < expected:
            return ConjectureReport(n, source, len(fam), rp, expected, False, False, None, kept, 0, "modular", r2)
        method = "lattice"  # undecided: a low modular rank is not a proof of low rational rank
    if method != "lattice":
        raise ValueError(f"unknown method {method!r}")
    dim = factorial(n - 2)
    L = Lattice(dim)
    selected = []
    for k, b in enumerate(fam):
        v = b.sparse_vector()
        if not L.contains(v):
            L.add(v)
            selected.append(k)
    index = None
    if L.rank == expected:
        K = Lattice(dim)
        for v in kernel_basis(n).vectors:
            K.add(v)
        outside = sum(1 for v in kernel_basis(n).vectors if not L.contains(v))
        index = lattice_index(L, K)
        sat = outside == 0
    else:
        sat = is_saturated(L)
        outside = sum(1 for v in kernel_basis(n).vectors if not L.contains(v)) if n <= 8 else 0
    verdict = L.rank == expected and sat
    return ConjectureReport(n, source, len(fam), L.rank, expected, sat, verdict, index, selected, outside)
