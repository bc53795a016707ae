"""Buchberger's algorithm, saturation, Hilbert series and generator counts.

Two engines share the same pair bookkeeping (normal selection strategy and
Gebauer-Moeller criteria):

* the general engine works on integer-coefficient polynomials and reduces
  fraction-free, so every intermediate result is a rational multiple of the
  textbook one and the final basis is exact over Q;
* the binomial engine handles ideals generated by pure differences of
  monomials ``x^a - x^b``, which stay closed under S-polynomials and
  reduction, so only exponent vectors are ever touched.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Callable, Iterable, Sequence

from . import kernels
from .polys import Monomial, Polynomial, Ring

# ---------------------------------------------------------------------------
# budgets


class BudgetExceeded(RuntimeError):
    """Raised when a computation would exceed its configured work budget.

    ``partial`` carries whatever was computed so far (may be ``None``).
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


@dataclass
class Budget:
    max_pairs: int | None = None
    max_basis: int | None = None
    seconds: float | None = None
    _start: float = field(default_factory=time.monotonic, repr=False)

    def check(self, pairs_done: int, basis_size: int, partial=None) -> None:
        if self.max_pairs is not None and pairs_done > self.max_pairs:
            raise BudgetExceeded(f"more than {self.max_pairs} S-pairs reduced", partial)
        if self.max_basis is not None and basis_size > self.max_basis:
            raise BudgetExceeded(f"basis grew beyond {self.max_basis} elements", partial)
        if self.seconds is not None and time.monotonic() - self._start > self.seconds:
            raise BudgetExceeded(f"time budget of {self.seconds}s exhausted", partial)


# ---------------------------------------------------------------------------
# monomial helpers


def _mask(m: Monomial) -> int:
    b = 0
    for i, e in enumerate(m):
        if e:
            b |= 1 << i
    return b


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x if x > y else y for x, y in zip(a, b)])


def _divides(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _sub(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x - y for x, y in zip(a, b)])


def _add(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x + y for x, y in zip(a, b)])


def _coprime(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


# ---------------------------------------------------------------------------
# pair handling shared by both engines


class _PairQueue:
    """Critical pairs under the normal strategy with Gebauer-Moeller pruning."""

    def __init__(self, key: Callable[[Monomial], tuple], max_degree: int | None):
        self.key = key
        self.max_degree = max_degree
        self.heap: list = []
        self.live: dict[tuple[int, int], Monomial] = {}
        self.skipped_by_degree = False

    def __len__(self) -> int:
        return len(self.live)

    def pop(self):
        while self.heap:
            _, _, i, j = heapq.heappop(self.heap)
            lcm = self.live.pop((i, j), None)
            if lcm is not None:
                return i, j, lcm
        return None

    def update(self, lms: list[Monomial], alive: list[bool], t: int) -> None:
        """Register the new leading monomial ``lms[t]``."""
        lmt = lms[t]
        key = self.key
        # old pairs whose lcm is strictly divisible through the new element
        for (i, j), l in list(self.live.items()):
            if _divides(lmt, l) and _lcm(lms[i], lmt) != l and _lcm(lms[j], lmt) != l:
                del self.live[(i, j)]
        groups: dict[Monomial, list[int]] = {}
        for i in range(t):
            if alive[i]:
                groups.setdefault(_lcm(lms[i], lmt), []).append(i)
        minimal: list[Monomial] = []
        for l in sorted(groups, key=key):
            if any(_divides(m, l) for m in minimal):
                continue
            minimal.append(l)
            idx = groups[l]
            if any(_coprime(lms[i], lmt) for i in idx):
                continue
            i = min(idx)
            deg = sum(l)
            if self.max_degree is not None and deg > self.max_degree:
                self.skipped_by_degree = True
                continue
            self.live[(i, t)] = l
            heapq.heappush(self.heap, (key(l), t, i, t))


# ---------------------------------------------------------------------------
# general engine


class _Basis:
    __slots__ = ("polys", "lms", "lcs", "masks", "degs", "alive")

    def __init__(self):
        self.polys: list[dict[Monomial, int]] = []
        self.lms: list[Monomial] = []
        self.lcs: list[int] = []
        self.masks: list[int] = []
        self.degs: list[int] = []
        self.alive: list[bool] = []

    def add(self, f: dict[Monomial, int], lm: Monomial) -> int:
        self.polys.append(f)
        self.lms.append(lm)
        self.lcs.append(f[lm])
        self.masks.append(_mask(lm))
        self.degs.append(sum(lm))
        self.alive.append(True)
        return len(self.polys) - 1

    def divisor(self, m: Monomial, mm: int, dm: int) -> int:
        lms = self.lms
        masks = self.masks
        degs = self.degs
        for i in range(len(lms)):
            if degs[i] <= dm and not (masks[i] & ~mm) and _divides(lms[i], m):
                return i
        return -1


def _primitive(f: dict[Monomial, int], lm: Monomial | None = None) -> dict[Monomial, int]:
    g = 0
    for c in f.values():
        g = gcd(g, c)
        if g == 1:
            break
    if lm is not None and f[lm] < 0:
        g = -g
    if g in (0, 1):
        return f
    return {m: c // g for m, c in f.items()}


def _to_int_terms(p: Polynomial) -> dict[Monomial, int]:
    if not p.terms:
        return {}
    den = 1
    for c in p.terms.values():
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    return {m: int(c * den) for m, c in p.terms.items()}


def _reduce(f: dict[Monomial, int], B: _Basis, key, full: bool) -> tuple[dict[Monomial, int], Monomial | None]:
    """Reduce ``f`` by the basis.  Returns (result, leading monomial).

    With ``full`` every term is reduced; otherwise stop at the first
    irreducible leading term.  The result is a non-zero rational multiple of
    the textbook remainder.
    """
    f = dict(f)
    if not f:
        return f, None
    neg = lambda m: tuple([-x for x in key(m)])  # noqa: E731
    heap = [(neg(m), m) for m in f]
    heapq.heapify(heap)
    irreducible: set[Monomial] = set()
    lead = None
    polys, lms, lcs = B.polys, B.lms, B.lcs
    while heap:
        _, m = heapq.heappop(heap)
        c = f.get(m)
        if c is None or m in irreducible:
            continue
        i = B.divisor(m, _mask(m), sum(m))
        if i < 0:
            if lead is None:
                lead = m
                if not full:
                    break
            irreducible.add(m)
            continue
        lc = lcs[i]
        d = gcd(c, lc)
        a = lc // d
        b = c // d
        if a < 0:
            a, b = -a, -b
        if a != 1:
            for k in f:
                f[k] *= a
        q = _sub(m, lms[i])
        for mg, cg in polys[i].items():
            mm = _add(mg, q)
            v = f.get(mm)
            if v is None:
                f[mm] = -b * cg
                heapq.heappush(heap, (neg(mm), mm))
            else:
                v -= b * cg
                if v:
                    f[mm] = v
                else:
                    del f[mm]
    if not f:
        return f, None
    if lead is None:
        lead = max(f, key=key)
    return _primitive(f, lead), lead


@dataclass
class GBResult:
    ring: Ring
    basis: list[Polynomial]
    truncated_at: int | None = None
    pairs_reduced: int = 0


def groebner(
    gens: Sequence[Polynomial],
    ring: Ring | None = None,
    *,
    max_degree: int | None = None,
    budget: Budget | None = None,
    method: str = "auto",
) -> list[Polynomial]:
    """Reduced Groebner basis (integral, primitive, positive leading term).

    ``max_degree`` truncates a homogeneous computation: the result is then a
    Groebner basis only up to that degree.  ``method`` is ``auto``,
    ``generic`` or ``binomial``.
    """
    return groebner_full(gens, ring, max_degree=max_degree, budget=budget, method=method).basis


def groebner_full(
    gens: Sequence[Polynomial],
    ring: Ring | None = None,
    *,
    max_degree: int | None = None,
    budget: Budget | None = None,
    method: str = "auto",
) -> GBResult:
    gens = [g for g in gens if g]
    if ring is None:
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    gens = [g.in_ring(ring) if g.ring != ring else g for g in gens]
    if method == "auto":
        method = "binomial" if gens and all(is_pure_binomial(g) for g in gens) else "generic"
    if method == "binomial":
        bins = [binomial_exponents(g) for g in gens]
        res, pairs = _groebner_binomial(bins, ring.key, max_degree, budget)
        basis = [_binomial_poly(ring, a, b) for a, b in res]
        return GBResult(ring, basis, max_degree, pairs)
    if method != "generic":
        raise ValueError(f"unknown Groebner method {method!r}")
    key = ring.key
    B = _Basis()
    Q = _PairQueue(key, max_degree)
    pairs_done = 0
    todo = sorted((_to_int_terms(g) for g in gens), key=lambda f: key(max(f, key=key)))
    for f in todo:
        r, lm = _reduce(f, B, key, full=False)
        if lm is None:
            continue
        t = B.add(r, lm)
        Q.update(B.lms, B.alive, t)
    while True:
        item = Q.pop()
        if item is None:
            break
        i, j, l = item
        pairs_done += 1
        if budget is not None:
            budget.check(pairs_done, len(B.polys), partial=B)
        fi, fj = B.polys[i], B.polys[j]
        ci, cj = B.lcs[i], B.lcs[j]
        g = gcd(ci, cj)
        ai, aj = cj // g, ci // g
        qi, qj = _sub(l, B.lms[i]), _sub(l, B.lms[j])
        s: dict[Monomial, int] = {}
        for m, c in fi.items():
            s[_add(m, qi)] = ai * c
        for m, c in fj.items():
            mm = _add(m, qj)
            v = s.get(mm, 0) - aj * c
            if v:
                s[mm] = v
            else:
                s.pop(mm, None)
        r, lm = _reduce(s, B, key, full=False)
        if lm is None:
            continue
        t = B.add(r, lm)
        for k in range(t):
            if B.alive[k] and _divides(lm, B.lms[k]):
                B.alive[k] = False
        Q.update(B.lms, B.alive, t)
    basis = _interreduce(B, key)
    return GBResult(ring, [Polynomial(ring, f) for f in basis], max_degree, pairs_done)


def _interreduce(B: _Basis, key) -> list[dict[Monomial, int]]:
    order = sorted(range(len(B.polys)), key=lambda i: (key(B.lms[i]), i))
    keep: list[int] = []
    for i in order:
        if not any(_divides(B.lms[k], B.lms[i]) for k in keep):
            keep.append(i)
    M = _Basis()
    for i in keep:
        M.add(B.polys[i], B.lms[i])
    out = []
    for idx in range(len(keep)):
        f = M.polys[idx]
        lm = M.lms[idx]
        head = {lm: f[lm]}
        tail = {m: c for m, c in f.items() if m != lm}
        # reduce the tail against all other basis elements
        others = _Basis()
        for k in range(len(keep)):
            if k != idx:
                others.add(M.polys[k], M.lms[k])
        # scale consistently: reduce tail while tracking the multiplier on head
        r = _reduce_tail(head, tail, others, key)
        out.append(_primitive(r, lm))
    out.sort(key=lambda f: key(max(f, key=key)))
    return out


def _reduce_tail(head: dict[Monomial, int], tail: dict[Monomial, int], B: _Basis, key) -> dict[Monomial, int]:
    f = dict(head)
    f.update(tail)
    (lm,) = head
    # full reduction never touches the leading monomial since nothing divides it
    r, _ = _reduce(f, B, key, full=True)
    if lm not in r:
        raise AssertionError("leading term disappeared during interreduction")
    return r


# ---------------------------------------------------------------------------
# binomial engine


def is_pure_binomial(p: Polynomial) -> bool:
    if len(p.terms) != 2:
        return False
    cs = sorted(p.terms.values())
    return cs == [-1, 1]


def binomial_exponents(p: Polynomial) -> tuple[Monomial, Monomial]:
    """``(lead, trail)`` of a pure binomial under its ring's order."""
    (m1, _), (m2, _) = p.sorted_terms()
    return m1, m2


def _binomial_poly(ring: Ring, a: Monomial, b: Monomial) -> Polynomial:
    return Polynomial(ring, {a: 1, b: -1})


def _groebner_binomial(
    gens: list[tuple[Monomial, Monomial]],
    key,
    max_degree: int | None,
    budget: Budget | None,
) -> tuple[list[tuple[Monomial, Monomial]], int]:
    leads: list[Monomial] = []
    trails: list[Monomial] = []
    masks: list[int] = []
    alive: list[bool] = []
    Q = _PairQueue(key, max_degree)
    reduce_mono = kernels.binomial_normal_form

    def orient(u: Monomial, v: Monomial):
        if u == v:
            return None
        return (u, v) if key(u) > key(v) else (v, u)

    def insert(b):
        a, t = b
        leads.append(a)
        trails.append(t)
        masks.append(_mask(a))
        alive.append(True)
        idx = len(leads) - 1
        for k in range(idx):
            if alive[k] and _divides(a, leads[k]):
                alive[k] = False
        Q.update(leads, alive, idx)

    for u, v in sorted(gens, key=lambda b: key(b[0])):
        b = orient(reduce_mono(u, leads, trails, masks), reduce_mono(v, leads, trails, masks))
        if b is not None:
            insert(b)
    pairs = 0
    while True:
        item = Q.pop()
        if item is None:
            break
        i, j, l = item
        pairs += 1
        if budget is not None:
            budget.check(pairs, len(leads), partial=(leads, trails))
        u = _add(_sub(l, leads[i]), trails[i])
        v = _add(_sub(l, leads[j]), trails[j])
        b = orient(reduce_mono(u, leads, trails, masks), reduce_mono(v, leads, trails, masks))
        if b is not None:
            insert(b)
    # reduced basis
    idx = sorted(range(len(leads)), key=lambda i: (key(leads[i]), i))
    keep: list[int] = []
    for i in idx:
        if not any(_divides(leads[k], leads[i]) for k in keep):
            keep.append(i)
    kl = [leads[i] for i in keep]
    kt = [trails[i] for i in keep]
    km = [masks[i] for i in keep]
    out = []
    for pos in range(len(keep)):
        t = reduce_mono(kt[pos], kl, kt, km)
        b = orient(kl[pos], t)
        out.append(b)
    return out, pairs


# ---------------------------------------------------------------------------
# normal forms and ideals


def normal_form(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Remainder of ``f`` on division by ``basis`` (exact over Q)."""
    if not f:
        return f
    ring = basis[0].ring if basis else f.ring
    key = ring.key
    B = _Basis()
    for g in basis:
        gi = _to_int_terms(g)
        B.add(gi, max(gi, key=key))
    fi = _to_int_terms(f)
    r, lead = _reduce(fi, B, key, full=True)
    if lead is None:
        return ring.zero()
    # rescale to the true remainder: r is a multiple of it; match a coefficient
    true = _exact_remainder(f.in_ring(ring), basis, r, lead)
    return true


def _exact_remainder(f: Polynomial, basis, r: dict[Monomial, int], lead: Monomial) -> Polynomial:
    """Recover the exact Q-remainder from a fraction-free one.

    The fraction-free remainder equals ``lambda * NF(f)``.  ``lambda`` is
    pinned by redoing the division with rational arithmetic on ``f``'s
    irreducible leading term only, which is cheap: the coefficient of an
    irreducible term of ``f - sum q_i g_i`` is determined once the leading
    irreducible term is reached.
    """
    ring = f.ring
    key = ring.key
    g = f.copy()
    lms = [b.leading_monomial() for b in basis]
    lcs = [Fraction(b.leading_coefficient()) for b in basis]
    rem: dict[Monomial, Fraction] = {}
    terms = dict(g.terms)
    while terms:
        m = max(terms, key=key)
        c = terms.pop(m)
        for b, lm, lc in zip(basis, lms, lcs):
            if _divides(lm, m):
                q = _sub(m, lm)
                factor = Fraction(c) / lc
                for mb, cb in b.terms.items():
                    if mb == lm:
                        continue
                    mm = _add(mb, q)
                    v = terms.get(mm, 0) - factor * cb
                    if v:
                        terms[mm] = v
                    else:
                        terms.pop(mm, None)
                break
        else:
            rem[m] = c
    return Polynomial(ring, rem)


def _homogeneous(gens: Iterable[Polynomial]) -> bool:
    return all(g.is_homogeneous() for g in gens)


class Ideal:
    """Ideal given by generators, with a cached reduced Groebner basis."""

    def __init__(self, gens: Iterable[Polynomial], ring: Ring | None = None):
        self.gens = [g for g in gens if g]
        if ring is None:
            if not self.gens:
                raise ValueError("ring required for the zero ideal")
            ring = self.gens[0].ring
        self.ring = ring
        self.gens = [g.in_ring(ring) if g.ring != ring else g for g in self.gens]
        self._gb: list[Polynomial] | None = None
        self.flags: dict[str, object] = {}

    def __repr__(self) -> str:
        return f"Ideal({len(self.gens)} generators in {self.ring.nvars} variables)"

    def groebner(self, budget: Budget | None = None, method: str = "auto") -> list[Polynomial]:
        if self._gb is None:
            self._gb = groebner(self.gens, self.ring, budget=budget, method=method) if self.gens else []
        return self._gb

    def set_groebner(self, basis: list[Polynomial]) -> None:
        self._gb = [b.in_ring(self.ring) for b in basis]

    def is_homogeneous(self) -> bool:
        return _homogeneous(self.gens)

    def contains(self, f: Polynomial) -> bool:
        return membership(f, self)

    __contains__ = contains

    def is_subset(self, other: "Ideal") -> bool:
        return all(other.contains(g) for g in self.gens)

    def equals(self, other: "Ideal") -> bool:
        return self.is_subset(other) and other.is_subset(self)

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial() for g in self.groebner()]

    def saturate(self, f: Polynomial, **kw) -> "Ideal":
        return saturate(self, f, **kw)

    def dumps(self) -> str:
        return "\n".join(g.dumps() for g in self.gens) + "\n"


def membership(f: Polynomial, I: Ideal) -> bool:
    """Whether ``f`` lies in ``I`` (normal form against its Groebner basis)."""
    if not f:
        return True
    gb = I.groebner()
    if not gb:
        return False
    B = _Basis()
    key = I.ring.key
    for g in gb:
        gi = _to_int_terms(g)
        B.add(gi, max(gi, key=key))
    r, lead = _reduce(_to_int_terms(f.in_ring(I.ring)), B, key, full=False)
    return lead is None


# ---------------------------------------------------------------------------
# saturation


def _divide_out(p: Polynomial, var: int) -> Polynomial:
    k = min(m[var] for m in p.terms)
    if not k:
        return p
    return Polynomial(p.ring, {m[:var] + (m[var] - k,) + m[var + 1 :]: c for m, c in p.terms.items()})


def saturate_by_variable(gens: Sequence[Polynomial], var: int, ring: Ring, **kw) -> list[Polynomial]:
    """``<gens> : x_var^inf`` for homogeneous gens via a degrevlex basis with x_var last."""
    r = ring.with_order(order="degrevlex", elim=0, last=var)
    gb = groebner([g.in_ring(r) for g in gens], r, **kw)
    return [_divide_out(g, var).in_ring(ring) for g in gb]


def saturate(I: Ideal, f: Polynomial, *, method: str = "auto", budget: Budget | None = None) -> Ideal:
    """``I : f^inf``.

    When ``f`` is a monomial and ``I`` homogeneous, saturate variable by
    variable (degrevlex with that variable last, then divide it out);
    otherwise adjoin ``t``, add ``t f - 1`` and eliminate ``t``.
    ``method`` may force ``variables`` or ``elimination``.
    """
    ring = I.ring
    if method == "auto":
        method = "variables" if len(f.terms) == 1 and I.is_homogeneous() else "elimination"
    if method == "variables":
        if len(f.terms) != 1:
            raise ValueError("variable-wise saturation needs a monomial")
        (mono,) = f.terms
        gens = list(I.gens)
        for v in [i for i, e in enumerate(mono) if e]:
            gens = saturate_by_variable(gens, v, ring, budget=budget)
        out = Ideal(gens, ring)
        return out
    if method != "elimination":
        raise ValueError(f"unknown saturation method {method!r}")
    tname = "_t"
    while tname in ring.index:
        tname += "_"
    big = Ring((tname,) + ring.names, order="degrevlex", elim=1)

    def lift(p: Polynomial) -> Polynomial:
        return Polynomial(big, {(0,) + m: c for m, c in p.terms.items()})

    t = big.var(0)
    gens = [lift(g) for g in I.gens] + [t * lift(f) - 1]
    gb = groebner(gens, big, budget=budget, method="generic")
    kept = [Polynomial(ring, {m[1:]: c for m, c in g.terms.items()}) for g in gb if all(m[0] == 0 for m in g.terms)]
    return Ideal(kept, ring)


def eliminate(gens: Sequence[Polynomial], ring: Ring, k: int, target: Ring, budget: Budget | None = None) -> list[Polynomial]:
    """Generators of ``<gens> cap Q[last variables]``; ``ring`` lists the ``k`` eliminated variables first."""
    r = ring.with_order(order="degrevlex", elim=k, last=None)
    gb = groebner([g.in_ring(r) for g in gens], r, budget=budget, method="generic")
    out = []
    for g in gb:
        if all(not any(m[:k]) for m in g.terms):
            out.append(Polynomial(target, {m[k:]: c for m, c in g.terms.items()}))
    return out


# ---------------------------------------------------------------------------
# Hilbert series


def _minimalize(gens: list[Monomial]) -> list[Monomial]:
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    out: list[Monomial] = []
    for m in gens:
        if not any(_divides(g, m) for g in out):
            out.append(m)
    return out


def _poly_add(a: list[int], b: list[int], shift: int = 0) -> list[int]:
    n = max(len(a), len(b) + shift)
    out = a + [0] * (n - len(a))
    for i, c in enumerate(b):
        out[i + shift] += c
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _hilbert_num(gens: list[Monomial]) -> list[int]:
    gens = _minimalize(gens)
    if not gens:
        return [1]
    # pairwise coprime generators: product formula
    nv = len(gens[0])
    counts = [0] * nv
    for m in gens:
        for i, e in enumerate(m):
            if e:
                counts[i] += 1
    if max(counts) <= 1:
        out = [1]
        for m in gens:
            d = sum(m)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return out
    x = max(range(nv), key=lambda i: (counts[i], -i))
    exps = sorted(m[x] for m in gens if m[x])
    e = exps[len(exps) // 2]
    # x^e must not already lie in the ideal, otherwise nothing splits
    pure = [m[x] for m in gens if m[x] and sum(m) == m[x]]
    if pure and e >= pure[0]:
        e = exps[0]
    pivot = tuple(e if i == x else 0 for i in range(nv))
    with_p = gens + [pivot]
    colon = [tuple(max(0, a - b) for a, b in zip(m, pivot)) for m in gens]
    n1 = _hilbert_num(with_p)
    n2 = _hilbert_num(colon)
    return _poly_add(n1, n2, shift=e)


def hilbert_numerator(monomials: Sequence[Monomial]) -> list[int]:
    """Numerator ``N(t)`` with ``HS_{R/I}(t) = N(t) / (1 - t)^nvars``."""
    out = _hilbert_num(list(monomials))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def hilbert_function(numerator: Sequence[int], nvars: int, d: int) -> int:
    return sum(c * comb(d - k + nvars - 1, nvars - 1) for k, c in enumerate(numerator) if k <= d)


def dimension_degree(numerator: Sequence[int], nvars: int) -> tuple[int, int]:
    """(projective dimension, degree) from a Hilbert series numerator."""
    h = list(numerator)
    k = 0
    while h and sum(h) == 0:
        # divide by (1 - t)
        q = []
        acc = 0
        for c in h[:-1]:
            acc += c
            q.append(acc)
        h = q
        k += 1
        if not any(h):
            break
    krull = nvars - k
    return krull - 1, sum(h)


def projective_degree_and_dim(I: Ideal) -> tuple[int, int]:
    """(projective dimension, degree) of a homogeneous ideal's variety."""
    if not I.is_homogeneous():
        raise ValueError("projective dimension and degree need a homogeneous ideal")
    num = hilbert_numerator(I.leading_monomials()) if I.gens else [1]
    return dimension_degree(num, I.ring.nvars)


# ---------------------------------------------------------------------------
# minimal generators


@dataclass
class GeneratorCount:
    counts: dict[int, int]
    budget_exceeded: list[int] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not self.budget_exceeded


def minimal_generators_by_degree(
    I: Ideal,
    max_degree: int | None = None,
    monomial_budget: int = 500_000,
    budget: Budget | None = None,
) -> GeneratorCount:
    """Number of minimal generators of a homogeneous ideal in each degree.

    Degree ``d`` contributes ``dim I_d - dim (R_1 I_{d-1})``; both dimensions
    come from Hilbert functions of initial ideals (the full basis, and a
    degree-``d`` truncated basis of the part of ``I`` generated below ``d``).
    Degrees whose monomial space exceeds ``monomial_budget`` are skipped and
    listed in ``budget_exceeded``.
    """
    if not I.is_homogeneous():
        raise ValueError("minimal generator counts need a homogeneous ideal")
    gb = I.groebner(budget=budget)
    if not gb:
        return GeneratorCount({})
    n = I.ring.nvars
    degs = sorted({g.degree() for g in gb})
    top = degs[-1] if max_degree is None else min(max_degree, degs[-1])
    full_num = hilbert_numerator([g.leading_monomial() for g in gb])
    out: dict[int, int] = {}
    skipped: list[int] = []
    for d in range(degs[0], top + 1):
        at_d = [g for g in gb if g.degree() == d]
        if not at_d:
            continue
        if comb(n + d - 1, d) > monomial_budget:
            skipped.append(d)
            continue
        dim_I = comb(n + d - 1, d) - hilbert_function(full_num, n, d)
        below = [g for g in gb if g.degree() < d]
        if below:
            part = groebner(below, I.ring, max_degree=d, budget=budget)
            lower_num = hilbert_numerator([g.leading_monomial() for g in part])
            dim_J = comb(n + d - 1, d) - hilbert_function(lower_num, n, d)
        else:
            dim_J = 0
        if dim_I - dim_J:
            out[d] = dim_I - dim_J
    return GeneratorCount(out, skipped)


# ---------------------------------------------------------------------------
# Pfaffians


def pfaffian4(M: Sequence[Sequence[Polynomial]], idx: Sequence[int]) -> Polynomial:
    a, b, c, d = idx
    return M[a][b] * M[c][d] - M[a][c] * M[b][d] + M[a][d] * M[b][c]


def sub_pfaffians(M: Sequence[Sequence[Polynomial]]) -> list[Polynomial]:
    n = len(M)
    for i in range(n):
        if len(M[i]) != n:
            raise ValueError("Pfaffian matrix must be square")
        for j in range(n):
            if M[i][j] != -M[j][i]:
                raise ValueError("matrix is not antisymmetric")
    out = []
    for drop in range(n):
        keep = [k for k in range(n) if k != drop]
        if len(keep) == 4:
            out.append(pfaffian4(M, keep))
    return out


def pfaffian_check(M: Sequence[Sequence[Polynomial]], I: Ideal) -> bool:
    """Whether the 4x4 sub-Pfaffians of the 5x5 antisymmetric ``M`` generate ``I``."""
    if len(M) != 5:
        raise ValueError("pfaffian_check expects a 5x5 matrix")
    pf = [p for p in sub_pfaffians(M) if p]
    J = Ideal(pf, I.ring)
    if not pf:
        return not I.gens
    return J.equals(I)


# ---------------------------------------------------------------------------
# exchange with other computer algebra systems


def cas_name(name: str) -> str:
    """``z[12345]`` -> ``z12345``; ``p[1,3]`` -> ``p1_3``."""
    inner = name.replace("[", "").replace("]", "")
    return inner.replace(",", "_")


def cas_poly(f: Polynomial) -> str:
    if not f:
        return "0"
    names = [cas_name(x) for x in f.ring.names]
    parts = []
    for m, c in f.sorted_terms():
        c = Fraction(c)
        mono = "*".join(names[i] + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e)
        coef = str(abs(c))
        sign = "-" if c < 0 else "+"
        if mono:
            body = mono if abs(c) == 1 else f"{coef}*{mono}"
        else:
            body = coef
        parts.append(f"{sign} {body}")
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


def cas_script(I: Ideal, name: str = "I", saturate_by_product: bool = False, extra: Sequence[str] = ()) -> str:
    """A Macaulay2 script defining the ring and ``I`` (and optionally its saturation)."""
    names = [cas_name(x) for x in I.ring.names]
    lines = [f"R = QQ[{', '.join(names)}];"]
    gens = ",\n  ".join(cas_poly(g) for g in I.gens)
    lines.append(f"{name} = ideal(\n  {gens}\n);")
    if saturate_by_product:
        lines.append(f"{name}sat = saturate({name}, product gens R);")
        lines.append(f"print toString mingens {name}sat;")
        lines.append(f"print (dim {name}sat - 1, degree {name}sat);")
    lines.extend(extra)
    return "\n".join(lines) + "\n"
