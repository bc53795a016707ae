"""The Parke-Taylor matrix, the monomial parametrization and vanishing oracles.

Coordinates ``z[sigma]`` are indexed by ``enumerate_sigma(n)``.  Two
parametrizations are used:

* the toric one, ``z_sigma -> 1 / prod p_{ab}`` over the unordered cyclic
  adjacencies of ``sigma`` with independent symbols ``p[a,b]``;
* the Parke-Taylor one on the moduli chart, ``p_{ab} = p_a - p_b`` taken
  in the order the letters are visited, with ``p_1 = 0``, ``p_2 = 1``,
  ``p_{an} = 1`` and ``p_{na} = -1`` (the last point sent to infinity).

The two differ by the sign ``(-1)^(cyclic descents of sigma)`` on each
coordinate; :func:`to_pt_signs` moves a relation of the first kind to the
second.
"""

from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Mapping, Sequence

from .linalg import ExactMatrix
from .permutations import (
    Perm,
    cyclic_adjacencies,
    enumerate_sigma,
    format_perm,
    parse_perm,
    sigma_index,
)
from .polys import Monomial, Polynomial, Ring
from .ratfun import DegenerateConfiguration, RationalFunction, rf_sum

# ---------------------------------------------------------------------------
# rings


def z_name(sigma: Sequence[int]) -> str:
    return f"z[{format_perm(sigma)}]"


@lru_cache(maxsize=None)
def z_ring(n: int, order: str = "degrevlex") -> Ring:
    return Ring([z_name(s) for s in enumerate_sigma(n)], order)


@lru_cache(maxsize=None)
def plucker_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(1, n + 1), 2))


@lru_cache(maxsize=None)
def p_ring(n: int) -> Ring:
    return Ring([f"p[{a},{b}]" for a, b in plucker_pairs(n)])


@lru_cache(maxsize=None)
def m0n_ring(n: int) -> Ring:
    """Symbols ``x[3] .. x[n-1]`` for the free marked points."""
    return Ring([f"x[{i}]" for i in range(3, n)])


@lru_cache(maxsize=None)
def generic_ring(n: int) -> Ring:
    """Symbols ``x[1] .. x[n]`` for all marked points (no normalisation)."""
    return Ring([f"x[{i}]" for i in range(1, n + 1)])


_Z_RE = re.compile(r"z\[([\d,]+)\]")


def ring_perms(ring: Ring) -> list[Perm]:
    out = []
    for name in ring.names:
        m = _Z_RE.fullmatch(name)
        if not m:
            raise ValueError(f"{name!r} is not a z-coordinate")
        out.append(parse_perm(m.group(1)))
    return out


def ring_n(ring: Ring) -> int:
    return len(ring_perms(ring)[0])


def z_var(sigma: Sequence[int], n: int | None = None) -> Polynomial:
    sigma = tuple(sigma)
    R = z_ring(n or len(sigma))
    return R.var(z_name(sigma))


def z_monomial(perms: Sequence[Sequence[int]], n: int | None = None) -> Polynomial:
    """Product of the coordinates listed (with repetition)."""
    perms = [tuple(p) for p in perms]
    n = n or len(perms[0])
    R = z_ring(n)
    idx = sigma_index(n)
    m = [0] * R.nvars
    for p in perms:
        m[idx[p]] += 1
    return Polynomial(R, {tuple(m): 1})


def parse_z_poly(text: str, n: int) -> Polynomial:
    """Parse shorthand like ``z12354*z12435 + z12345*z12453 - 2*z12345^2``."""
    R = z_ring(n)
    idx = sigma_index(n)
    text = text.replace(" ", "").replace("_", "").replace("{", "").replace("}", "")
    out: dict[Monomial, Fraction] = {}
    for sign, body in re.findall(r"([+-]?)([^+-]+)", text):
        coeff = Fraction(-1 if sign == "-" else 1)
        m = [0] * R.nvars
        for f in body.split("*"):
            base, _, e = f.partition("^")
            if base.startswith("z"):
                m[idx[parse_perm(base[1:].strip("[]"))]] += int(e) if e else 1
            else:
                coeff *= Fraction(base)
        mt = tuple(m)
        out[mt] = out.get(mt, 0) + coeff
    return Polynomial(R, out)


# ---------------------------------------------------------------------------
# the matrix A_n


def column_exponent(sigma: Sequence[int]) -> Counter:
    return cyclic_adjacencies(sigma)


@lru_cache(maxsize=None)
def build_matrix(n: int) -> ExactMatrix:
    """0/1 matrix: rows ``p_ab`` (lex), columns ``enumerate_sigma(n)``."""
    if n < 4:
        raise ValueError(f"build_matrix needs n >= 4, got {n}")
    rows = {pq: r for r, pq in enumerate(plucker_pairs(n))}
    ent = {}
    for c, s in enumerate(enumerate_sigma(n)):
        for pq, m in cyclic_adjacencies(s).items():
            ent[(rows[pq], c)] = m
    return ExactMatrix(len(rows), len(enumerate_sigma(n)), ent)


def exponent_vector(F: Polynomial) -> list[int]:
    """``u+ - u-`` for a binomial with coefficients +1 and -1."""
    if len(F.terms) != 2 or sorted(F.terms.values()) != [-1, 1]:
        raise ValueError("expected a binomial with coefficients +1 and -1")
    plus = next(m for m, c in F.terms.items() if c == 1)
    minus = next(m for m, c in F.terms.items() if c == -1)
    return [a - b for a, b in zip(plus, minus)]


# ---------------------------------------------------------------------------
# signs


def cyclic_descents(sigma: Sequence[int]) -> int:
    n = len(sigma)
    return sum(1 for i in range(n) if sigma[i] > sigma[(i + 1) % n])


def descent_sign(sigma: Sequence[int]) -> int:
    """Sign picked up by ``z_sigma`` when ``p_ba = -p_ab`` is used."""
    return -1 if cyclic_descents(sigma) % 2 else 1


def to_pt_signs(F: Polynomial) -> Polynomial:
    """Apply ``z_sigma -> descent_sign(sigma) * z_sigma``.

    Turns a relation of the toric parametrization into one of the
    oriented Parke-Taylor parametrization (and back: it is an involution).
    """
    signs = [descent_sign(p) for p in ring_perms(F.ring)]
    out = {}
    for m, c in F.terms.items():
        s = 1
        for i, e in enumerate(m):
            if e and signs[i] < 0 and e % 2:
                s = -s
        out[m] = s * c
    return Polynomial(F.ring, out)


# ---------------------------------------------------------------------------
# pullback to Pluecker symbols


def _oriented_pairs(sigma: Sequence[int]):
    n = len(sigma)
    for i in range(n):
        a, b = sigma[i], sigma[(i + 1) % n]
        yield (a, b, 1) if a < b else (b, a, -1)


def pullback_z(F: Polynomial, oriented: bool = False) -> tuple[Polynomial, Monomial]:
    """``F(z_sigma = 1/prod p)`` as ``numerator / p^denominator``.

    Pluecker symbols are independent variables.  With ``oriented`` each
    factor is ``p_{sigma_i sigma_{i+1}}`` with ``p_ba = -p_ab``; otherwise
    the unordered pair is used.  The result is in lowest monomial terms.
    """
    if not F:
        n = ring_n(F.ring)
        R = p_ring(n)
        return R.zero(), R.one_monomial
    perms = ring_perms(F.ring)
    n = len(perms[0])
    R = p_ring(n)
    row = {pq: r for r, pq in enumerate(plucker_pairs(n))}
    col: list[tuple[list[int], int]] = []
    for s in perms:
        e = [0] * R.nvars
        sign = 1
        for a, b, o in _oriented_pairs(s):
            e[row[(a, b)]] += 1
            if oriented:
                sign *= o
        col.append((e, sign))
    dens = {}
    for m, c in F.terms.items():
        d = [0] * R.nvars
        sign = 1
        for i, k in enumerate(m):
            if k:
                e, s = col[i]
                for r, v in enumerate(e):
                    if v:
                        d[r] += v * k
                if s < 0 and k % 2:
                    sign = -sign
        dens[m] = (tuple(d), sign * c)
    D = tuple(max(d[r] for d, _ in dens.values()) for r in range(R.nvars))
    num: dict[Monomial, Fraction] = {}
    for d, c in dens.values():
        mm = tuple(x - y for x, y in zip(D, d))
        num[mm] = num.get(mm, 0) + c
    P = Polynomial(R, num)
    if not P:
        return P, R.one_monomial
    g = tuple(min(m[r] for m in P.terms) for r in range(R.nvars))
    P = Polynomial(R, {tuple(a - b for a, b in zip(m, g)): c for m, c in P.terms.items()})
    return P, tuple(a - b for a, b in zip(D, g))


def vanishes_on_torus(F: Polynomial) -> bool:
    """Whether ``F`` lies in the ideal of the toric variety ``T_n``."""
    if not F:
        return True
    return not pullback_z(F)[0]


# ---------------------------------------------------------------------------
# pullback to the moduli chart


@lru_cache(maxsize=None)
def _point(n: int, a: int) -> Polynomial | None:
    R = m0n_ring(n)
    if a == 1:
        return R.zero()
    if a == 2:
        return R.const(1)
    if a == n:
        return None
    return R.var(f"x[{a}]")


@lru_cache(maxsize=None)
def m0n_plucker(n: int, a: int, b: int) -> Polynomial:
    """Oriented ``p_ab`` on the chart ``p_1 = 0, p_2 = 1, p_n = infinity``."""
    R = m0n_ring(n)
    if a == b:
        raise ValueError("p_aa is not a Pluecker coordinate")
    if b == n:
        return R.const(1)
    if a == n:
        return R.const(-1)
    return _point(n, a) - _point(n, b)


@lru_cache(maxsize=None)
def _factor_key(n: int, a: int, b: int) -> tuple[int, tuple[int, int] | None]:
    """``p_ab = sign * (p_lo - p_hi)``; constant factors have key ``None``."""
    if a == b:
        raise ValueError("p_aa is not a Pluecker coordinate")
    lo, hi = (a, b) if a < b else (b, a)
    s = 1 if a < b else -1
    if hi == n:
        return s, None
    if (lo, hi) == (1, 2):
        return -s, None  # p_1 - p_2 = -1
    return s, (lo, hi)


def pt_parametrization(sigma: Sequence[int], n: int | None = None) -> RationalFunction:
    """``z_sigma`` on the moduli chart as a rational function of ``x[3..n-1]``."""
    sigma = tuple(sigma)
    n = n or len(sigma)
    return pullback_m0n(z_var(sigma, n))


def pullback_m0n(F: Polynomial) -> RationalFunction:
    """``F`` under the oriented Parke-Taylor parametrization on the chart."""
    perms = ring_perms(F.ring)
    n = len(perms[0])
    R = m0n_ring(n)
    if not F:
        return RationalFunction(R.zero())
    info = []
    for s in perms:
        sign = 1
        cnt: Counter = Counter()
        L = len(s)
        for i in range(L):
            o, key = _factor_key(n, s[i], s[(i + 1) % L])
            sign *= o
            if key is not None:
                cnt[key] += 1
        info.append((sign, cnt))
    terms = []
    for m, c in F.terms.items():
        sign = 1
        cnt: Counter = Counter()
        for i, k in enumerate(m):
            if k:
                s, ci = info[i]
                if s < 0 and k % 2:
                    sign = -sign
                for key, v in ci.items():
                    cnt[key] += v * k
        terms.append((sign * c, cnt))
    return _assemble(R, n, terms)


def _linear(n: int, key: tuple[int, int]) -> Polynomial:
    return _point(n, key[0]) - _point(n, key[1])


def _assemble(R: Ring, n: int, terms) -> RationalFunction:
    """Sum of ``c / prod (p_lo - p_hi)^e`` over a common denominator."""
    D: Counter = Counter()
    for _, cnt in terms:
        for k, e in cnt.items():
            if e > D[k]:
                D[k] = e
    powers: dict = {}

    def power(k, e):
        if (k, e) not in powers:
            powers[(k, e)] = _linear(n, k) ** e
        return powers[(k, e)]

    acc: dict = {}
    for c, cnt in terms:
        p = R.const(c)
        for k, e in D.items():
            miss = e - cnt.get(k, 0)
            if miss:
                p = p * power(k, miss)
        for m, v in p.terms.items():
            acc[m] = acc.get(m, 0) + v
    num = Polynomial(R, acc)
    den = Counter({_linear(n, k): e for k, e in D.items()}) if num else None
    return RationalFunction(num, den)


def vanishes_on_pt(F: Polynomial, n: int | None = None) -> bool:
    """Exact membership test for the ideal of the open Parke-Taylor variety."""
    if not F:
        return True
    if n is not None and ring_n(F.ring) != n:
        raise ValueError("polynomial does not live over the requested n")
    return pullback_m0n(F).is_zero()


# ---------------------------------------------------------------------------
# cross-ratios and the telescoping identity


def cross_ratio(
    i: int,
    j: int,
    k: int,
    l: int,
    point: Mapping[int, Fraction | int | None] | None = None,
    n: int | None = None,
):
    """``[ij|kl] = p_ik p_jl / (p_jk p_il)``.

    Without ``point`` the answer is symbolic in the generic symbols
    ``x[1..n]`` with ``p_ab = x_a - x_b`` (``n`` defaults to the largest
    index).  A ``point`` maps letters to rationals, ``None`` marking the
    point at infinity; then an exact ``Fraction`` is returned.
    """
    if len({i, j, k, l}) != 4:
        raise ValueError("cross-ratio needs four distinct indices")
    if point is None:
        n = n or max(i, j, k, l)
        R = generic_ring(n)

        def p(a, b):
            return R.var(a - 1) - R.var(b - 1)

        return RationalFunction.from_factors(R, 1, [p(i, k), p(j, l)], [p(j, k), p(i, l)])
    inf = [a for a, v in point.items() if v is None]
    if len(inf) > 1:
        raise DegenerateConfiguration("at most one point may sit at infinity")

    def pv(a, b):
        if point[a] is None:
            return Fraction(-1)
        if point[b] is None:
            return Fraction(1)
        return Fraction(point[a]) - Fraction(point[b])

    num = pv(i, k) * pv(j, l)
    den = pv(j, k) * pv(i, l)
    if den == 0:
        raise DegenerateConfiguration(f"[{i}{j}|{k}{l}] has a vanishing denominator at this point")
    return num / den


def telescoping_sum(sigma: Sequence[int], i: int) -> RationalFunction:
    """Left minus right side of the shuffle telescoping identity.

    ``sigma`` lies in ``Sigma_{n-1}``; ``n`` is the new letter.  Indices of
    ``sigma`` wrap cyclically.  Returned symbolically in ``x[1..n]`` with
    ``p_ab = x_a - x_b``; the identity holds iff the result is zero.
    """
    sigma = tuple(sigma)
    n = len(sigma) + 1
    if not 3 <= i <= n - 1:
        raise ValueError(f"position {i} outside 3..{n - 1}")
    R = generic_ring(n)

    def p(a, b):
        return R.var(a - 1) - R.var(b - 1)

    terms = []
    for j in range(i, n):
        a = sigma[j - 1]
        b = sigma[j % (n - 1)]
        terms.append(RationalFunction.from_factors(R, 1, [p(a, b)], [p(a, n), p(b, n)]))
    s = sigma[i - 1]
    terms.append(RationalFunction.from_factors(R, 1, [p(1, s)], [p(s, n), p(1, n)]))
    total = rf_sum(terms) if any(t.num for t in terms) else RationalFunction(R.zero())
    return total
