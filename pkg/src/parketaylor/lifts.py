"""Pluecker relations, their lifts to z-coordinates, and the Parke-Taylor ideal.

Every lift is certified before it is returned: its pullback under the
oriented parametrization must be a Laurent monomial times the Pluecker
trinomial it claims to lift.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .groebner import Budget, BudgetExceeded, Ideal, groebner, saturate
from .linalg import ExactMatrix, rational_kernel_basis
from .permutations import Perm, format_perm, splice_at
from .polys import Polynomial
from .ptcore import p_ring, plucker_pairs, pullback_m0n, pullback_z, ring_perms, to_pt_signs, z_monomial, z_ring
from .ratfun import exact_divide
from .toric import PreconditionFailed, _check_delta, kernel_binomials, position_pairs


class CertificationError(AssertionError):
    """A constructed lift failed its pullback identity."""


@dataclass(frozen=True)
class PluckerRelation:
    i: int
    j: int
    k: int
    l: int
    n: int

    def __post_init__(self):
        if not 1 <= self.i < self.j < self.k < self.l <= self.n:
            raise ValueError(f"indices must satisfy 1 <= i < j < k < l <= n, got {self}")

    @property
    def indices(self) -> tuple[int, int, int, int]:
        return (self.i, self.j, self.k, self.l)

    def polynomial(self) -> Polynomial:
        """``p_ij p_kl - p_ik p_jl + p_il p_jk``."""
        R = p_ring(self.n)

        def p(a, b):
            return R.var(f"p[{a},{b}]")

        i, j, k, l = self.indices
        return p(i, j) * p(k, l) - p(i, k) * p(j, l) + p(i, l) * p(j, k)

    def dumps(self) -> str:
        i, j, k, l = self.indices
        return f"p{i}{j}*p{k}{l} - p{i}{k}*p{j}{l} + p{i}{l}*p{j}{k}"


def plucker_relations(n: int, exclude_12: bool = False) -> list[PluckerRelation]:
    if n < 4:
        raise ValueError(f"Pluecker relations need n >= 4, got {n}")
    out = []
    for q in combinations(range(1, n + 1), 4):
        if exclude_12 and 1 in q and 2 in q:
            continue
        out.append(PluckerRelation(*q, n))
    return out


@dataclass(frozen=True)
class LiftedRelation:
    F: Polynomial
    source: PluckerRelation
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    cofactor: tuple[tuple[tuple[int, int], int], ...]  # Laurent exponents of p_ab
    sign: int

    def terms(self) -> list[tuple[Perm, Perm]]:
        perms = ring_perms(self.F.ring)
        out = []
        for m, _ in self.F.sorted_terms():
            ps = [perms[i] for i, e in enumerate(m) for _ in range(e)]
            out.append(tuple(ps))
        return out

    def cofactor_str(self) -> str:
        parts = []
        for (a, b), e in self.cofactor:
            parts.append(f"p[{a},{b}]" + (f"^{e}" if e != 1 else ""))
        return "*".join(parts) if parts else "1"

    def dumps(self) -> str:
        return f"{self.F.dumps()}  |  {self.source.dumps()}  |  {self.cofactor_str()}  |  {self.sign:+d}"


def _lift_words(i, j, k, l, alpha, beta) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    h = (1, 2)
    a, b = tuple(alpha), tuple(beta)
    if i == 1:
        w1, w2, w3, w4 = (h + a + (j, l, k), h + a + (k, j, l), h + a + (j, k, l), h + a + (k, l, j))
    elif i == 2:
        w1, w2, w3, w4 = (h + (k, l, j) + a, h + (l, j, k) + a, h + (l, k, j) + a, h + (j, l, k) + a)
    else:
        w1 = h + a + (j, l, k, i) + b
        w2 = h + a + (k, j, l, i) + b
        w3 = h + a + (j, k, l, i) + b
        w4 = h + a + (k, l, j, i) + b
    # the third product pairs the first word of term one with the second of term two
    return [(w1, w2), (w3, w4), (w1, w4)]


def certify(F: Polynomial, rel: PluckerRelation) -> tuple[tuple[tuple[tuple[int, int], int], ...], int]:
    """Return (Laurent cofactor, sign) with ``phi*(F) = sign * m * rel``."""
    num, den = pullback_z(F, oriented=True)
    q = exact_divide(num, rel.polynomial())
    if q is None or len(q.terms) != 1:
        raise CertificationError(f"{F.dumps()} is not a monomial multiple of {rel.dumps()}")
    (m, c), = q.terms.items()
    if c not in (1, -1):
        raise CertificationError(f"unexpected cofactor coefficient {c}")
    pairs = plucker_pairs(rel.n)
    exps = tuple((pairs[r], m[r] - den[r]) for r in range(len(pairs)) if m[r] != den[r])
    return exps, int(c)


def default_words(i: int, j: int, k: int, l: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Default choice: free letters below ``j`` form ``alpha``, the rest ``beta``.

    For ``i`` in {1, 2} only ``alpha`` is used and it holds all free letters.
    """
    free = [x for x in range(3, n + 1) if x not in (i, j, k, l)]
    if i in (1, 2):
        return tuple(free), ()
    return tuple(x for x in free if x < j), tuple(x for x in free if x > j)


def lift_plucker(
    i: int, j: int, k: int, l: int, alpha: Sequence[int] | None = None, beta: Sequence[int] | None = None, n: int | None = None
) -> LiftedRelation:
    """Certified quadratic trinomial lifting ``p_ij p_kl - p_ik p_jl + p_il p_jk``."""
    if not i < j < k < l:
        raise ValueError("need i < j < k < l")
    if i == 1 and j == 2:
        raise ValueError("relations involving both 1 and 2 are not lifted")
    if n is None:
        n = max(l, *(alpha or ()), *(beta or ()), 4)
        if alpha is None and beta is None:
            raise ValueError("n is required when alpha and beta are left to the default policy")
    if alpha is None and beta is None:
        alpha, beta = default_words(i, j, k, l, n)
    alpha = tuple(alpha or ())
    beta = tuple(beta or ())
    if i in (1, 2) and beta:
        raise ValueError("the i = 1 and i = 2 patterns take a single word")
    letters = sorted(set(range(1, n + 1)) - {1, 2, i, j, k, l})
    if sorted(alpha + beta) != letters:
        raise ValueError(f"alpha and beta must partition {letters}")
    terms = _lift_words(i, j, k, l, alpha, beta)
    R = z_ring(n)
    F = R.zero()
    for a, b in terms:
        F = F + z_monomial([a, b], n)
    rel = PluckerRelation(i, j, k, l, n)
    cof, sign = certify(F, rel)
    return LiftedRelation(F, rel, alpha, beta, cof, sign)


def lift_relation(f: Polynomial, i: int, delta: Sequence[int]) -> Polynomial:
    """Splice ``delta`` after position ``i`` in every coordinate of every term.

    Requires all terms to carry the same multiset of ordered letter pairs at
    position ``i``.
    """
    perms = ring_perms(f.ring)
    n = len(perms[0])
    delta = _check_delta(delta, n)
    if not 2 <= i <= n:
        raise ValueError(f"position {i} outside 2..{n}")
    multisets = []
    for m in f.terms:
        ps = [perms[v] for v, e in enumerate(m) for _ in range(e)]
        multisets.append((ps, position_pairs(ps, i)))
    ref = multisets[0][1] if multisets else Counter()
    for ps, pp in multisets:
        if pp != ref:
            raise PreconditionFailed(
                f"position-{i} pairs differ: {sorted(ref.elements())} vs {sorted(pp.elements())}"
            )
    if not delta:
        return f
    N = n + len(delta)
    R = z_ring(N)
    out = R.zero()
    for (m, c), (ps, _) in zip(f.terms.items(), multisets):
        out = out + z_monomial([splice_at(p, i, delta) for p in ps], N) * c
    return out


def relation_positions(f: Polynomial) -> list[int]:
    """Positions at which :func:`lift_relation` applies to ``f``."""
    perms = ring_perms(f.ring)
    n = len(perms[0])
    out = []
    for i in range(2, n + 1):
        sets = {
            frozenset(position_pairs([perms[v] for v, e in enumerate(m) for _ in range(e)], i).items())
            for m in f.terms
        }
        if len(sets) <= 1:
            out.append(i)
    return out


@lru_cache(maxsize=None)
def plucker_lifts(n: int) -> tuple[LiftedRelation, ...]:
    return tuple(lift_plucker(*r.indices, n=n) for r in plucker_relations(n, exclude_12=True))


def open_pt_generators(n: int) -> Ideal:
    """Kernel binomials (signs adapted to the oriented parametrization) and one lift per relation."""
    if n < 5:
        raise ValueError(f"open_pt_generators needs n >= 5, got {n}")
    R = z_ring(n)
    gens = [to_pt_signs(b.polynomial(n)) for b in kernel_binomials(n)]
    gens += [lr.F for lr in plucker_lifts(n)]
    return Ideal(gens, R)


def vanishing_quadrics(n: int) -> list[Polynomial]:
    """A basis of the quadrics vanishing on ``PT_n``, exactly.

    Every quadratic monomial is pulled back to the moduli chart and put
    over one common denominator; the quadrics are the rational kernel of
    the resulting coefficient matrix, so nothing is sampled.
    """
    R = z_ring(n)
    N = R.nvars
    mons = []
    for a in range(N):
        for b in range(a, N):
            m = [0] * N
            m[a] += 1
            m[b] += 1
            mons.append(tuple(m))
    images = [pullback_m0n(Polynomial(R, {m: 1})) for m in mons]
    D: Counter = Counter()
    for r in images:
        for f, e in r.den.items():
            D[f] = max(D[f], e)
    rows: dict = {}
    ent = {}
    for j, r in enumerate(images):
        p = r.num
        for f, e in D.items():
            k = e - r.den.get(f, 0)
            if k:
                p = p * f**k
        for m, v in p.terms.items():
            ent[(rows.setdefault(m, len(rows)), j)] = int(v)
    M = ExactMatrix(len(rows), len(mons), ent)
    out = []
    for v in rational_kernel_basis(M):
        out.append(Polynomial(R, {m: x for m, x in zip(mons, v) if x}))
    return out


def is_saturated_by_variables(I: Ideal, budget: Budget | None = None) -> list[int]:
    """Variables ``z`` with ``I : z != I``; empty means saturated by their product.

    For a homogeneous ideal and degrevlex with ``z`` last, ``I : z = I``
    exactly when no minimal leading monomial is divisible by ``z``.
    """
    bad = []
    for v in range(I.ring.nvars):
        r = I.ring.with_order(last=v)
        gb = groebner([g.in_ring(r) for g in I.groebner()], r, budget=budget, method="generic")
        if any(g.leading_monomial()[v] for g in gb):
            bad.append(v)
    return bad


def closed_pt_ideal(n: int, budget: Budget | None = None, method: str = "auto") -> Ideal:
    """``<open generators> : (prod z)^infinity``.

    ``method='saturate'`` runs the saturation directly (practical for
    ``n = 5``).  ``method='quadrics'`` (the default for ``n >= 6``) builds the
    ideal ``J`` of all quadrics vanishing on ``PT_n`` and proves
    ``J = saturation`` by checking that ``J`` contains the open generators
    and is saturated with respect to every coordinate; ``J`` then contains
    the saturation, and it lies inside the vanishing ideal, which is the
    saturation.  If either check fails the result is flagged and the
    direct saturation is not attempted.
    """
    if method == "auto":
        method = "saturate" if n <= 5 else "quadrics"
    base = open_pt_generators(n)
    R = base.ring
    if method == "saturate":
        try:
            out = saturate(base, R.monomial([1] * R.nvars), method="variables", budget=budget)
        except BudgetExceeded as exc:
            base.flags.update(budget_exceeded=True, reason=str(exc))
            return base
        out.flags.update(budget_exceeded=False, method="saturate", certified=True)
        return out
    if method != "quadrics":
        raise ValueError(f"unknown method {method!r}")
    try:
        J = Ideal(vanishing_quadrics(n), R)
        J.groebner(budget=budget)
        missing = [g for g in base.gens if g not in J]
        bad = is_saturated_by_variables(J, budget)
    except BudgetExceeded as exc:
        base.flags.update(budget_exceeded=True, reason=str(exc))
        return base
    certified = not missing and not bad
    J.flags.update(
        budget_exceeded=False,
        method="quadrics",
        certified=certified,
        open_generators_missing=len(missing),
        unsaturated_variables=[R.names[v] for v in bad],
    )
    return J


def lift_table(n: int) -> list[str]:
    """One line per lift: ``F | source | cofactor | sign``."""
    return [lr.dumps() for lr in plucker_lifts(n)]


def words_of(lr: LiftedRelation) -> list[str]:
    return [" ".join(format_perm(p) for p in t) for t in lr.terms()]


def all_word_choices(i: int, j: int, k: int, l: int, n: int) -> Iterable[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every admissible (alpha, beta) for the audit mode."""
    from itertools import permutations

    free = [x for x in range(3, n + 1) if x not in (i, j, k, l)]
    for w in permutations(free):
        if i in (1, 2):
            yield tuple(w), ()
        else:
            for cut in range(len(w) + 1):
                yield tuple(w[:cut]), tuple(w[cut:])
