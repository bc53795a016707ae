"""The log canonical side: Kapranov coordinates and the linear map ``L_n``.

Kapranov indices are tuples ``(i_1, ..., i_{n-3})`` with ``1 <= i_m <= m + 1``.
``build_L(n)`` gives, for every index, the set of permutations whose
coordinates sum to ``L_n(t_index)``.  The rational functions live on the
moduli chart ``x[3..n-1]`` with ``p_1 = 0``, ``p_2 = 1`` and ``p_n`` at
infinity, the same chart used by :func:`parketaylor.ptcore.pullback_m0n`.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import product
from typing import Mapping, Sequence

from .groebner import Ideal, eliminate
from .permutations import Perm, enumerate_sigma, format_perm, parse_perm, value_inversions
from .polys import Polynomial, Ring
from .ptcore import _point, m0n_ring, pullback_m0n, sigma_index, z_ring
from .ratfun import RationalFunction

KapranovIndex = tuple[int, ...]


def kapranov_indices(n: int) -> list[KapranovIndex]:
    if n < 4:
        raise ValueError(f"Kapranov indices need n >= 4, got {n}")
    return list(product(*[range(1, m + 2) for m in range(1, n - 2)]))


def _check_index(idx: Sequence[int], n: int) -> KapranovIndex:
    idx = tuple(idx)
    if len(idx) != n - 3 or any(not 1 <= i <= m + 1 for m, i in enumerate(idx, start=1)):
        raise ValueError(f"{idx} is not a Kapranov index for n = {n}")
    return idx


def index_name(idx: Sequence[int]) -> str:
    return "t" + "".join(map(str, idx))


def kapranov_coordinate(idx: Sequence[int], n: int) -> RationalFunction:
    """Segre product of the chosen homogeneous coordinate of each factor.

    Factor ``m`` contributes ``(p_1 - p_{i+1}) / (p_{m+3} - p_{i+1})``.  In
    the last factor ``p_n`` is at infinity; the common ``1 / p_n`` is a
    projective scalar and is dropped.
    """
    idx = _check_index(idx, n)
    R = m0n_ring(n)
    num, den = [], []
    for m, i in enumerate(idx, start=1):
        a = i + 1
        num.append(_point(n, 1) - _point(n, a))
        if m + 3 != n:
            den.append(_point(n, m + 3) - _point(n, a))
    return RationalFunction.from_factors(R, 1, num, den)


# ---------------------------------------------------------------------------
# shuffles and supports


def shuffle_insertions(letter: int, sigma: Sequence[int]) -> list[Perm]:
    """Insert the new largest letter in every gap strictly after ``letter``."""
    sigma = tuple(sigma)
    if letter not in sigma:
        raise ValueError(f"letter {letter} does not occur in {format_perm(sigma)}")
    pos = sigma.index(letter) + 1
    if pos < 2:
        raise ValueError("the shuffle letter must sit at position 2 or later")
    new = len(sigma) + 1
    return [sigma[:g] + (new,) + sigma[g:] for g in range(pos, len(sigma) + 1)]


def shuffle_sum(letter: int, sigma: Sequence[int]) -> Polynomial:
    perms = shuffle_insertions(letter, sigma)
    n = len(perms[0])
    R = z_ring(n)
    idx = sigma_index(n)
    out = {}
    for p in perms:
        m = [0] * R.nvars
        m[idx[p]] = 1
        out[tuple(m)] = 1
    return Polynomial(R, out)


@dataclass(frozen=True)
class SupportSet:
    index: KapranovIndex
    perms: frozenset[Perm]
    allowed: frozenset[tuple[int, int]] | None = None  # inversion set S u T when known

    @property
    def n(self) -> int:
        return len(self.index) + 3

    def sorted(self) -> list[Perm]:
        return sorted(self.perms)

    def linear_form(self) -> Polynomial:
        R = z_ring(self.n)
        idx = sigma_index(self.n)
        out = {}
        for p in self.perms:
            m = [0] * R.nvars
            m[idx[p]] = 1
            out[tuple(m)] = 1
        return Polynomial(R, out)

    def dumps(self) -> str:
        return f"{index_name(self.index)}: " + " ".join(format_perm(p) for p in self.sorted())


_BASE5 = {
    (1, 1): ("12345", "12354", "12435", "12453", "12534", "12543"),
    (1, 2): ("12345", "12354", "12435"),
    (1, 3): ("12345", "12435", "12453"),
    (2, 1): ("12345", "12354", "12534"),
    (2, 2): ("12345", "12354"),
    (2, 3): ("12345",),
}


def _union_inversions(perms) -> frozenset[tuple[int, int]]:
    out: set = set()
    for p in perms:
        out |= value_inversions(p)
    return frozenset(out)


@lru_cache(maxsize=None)
def build_L(n: int) -> dict[KapranovIndex, SupportSet]:
    """Support sets of ``L_n``; the base case ``n = 5`` is tabulated."""
    if n < 5:
        raise ValueError(f"build_L needs n >= 5, got {n}")
    if n == 5:
        out = {}
        for k, words in _BASE5.items():
            perms = frozenset(parse_perm(w) for w in words)
            out[k] = SupportSet(k, perms, _union_inversions(perms))
        return out
    prev = build_L(n - 1)
    out = {}
    for idx in kapranov_indices(n):
        base = prev[idx[:-1]]
        letter = idx[-1] + 1
        perms: set[Perm] = set()
        tail: set[tuple[int, int]] = set()
        for s in base.perms:
            perms.update(shuffle_insertions(letter, s))
            pos = s.index(letter)
            tail.update((n, x) for x in s[pos + 1 :])
        allowed = (base.allowed or frozenset()) | frozenset(tail)
        out[idx] = SupportSet(idx, frozenset(perms), allowed)
    return out


def L_image(idx: Sequence[int], n: int) -> Polynomial:
    return build_L(n)[_check_index(idx, n)].linear_form()


# ---------------------------------------------------------------------------
# weak order checks


def lower_covers(sigma: Sequence[int]) -> list[Perm]:
    """Elements covered by ``sigma`` in the right weak order on ``Sigma_n``."""
    s = list(sigma)
    out = []
    for i in range(2, len(s) - 1):
        if s[i] > s[i + 1]:
            t = s[:]
            t[i], t[i + 1] = t[i + 1], t[i]
            out.append(tuple(t))
    return out


@dataclass
class LowerIdealReport:
    downward_closed: bool
    inversion_characterized: bool
    witnesses: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.downward_closed and self.inversion_characterized


def verify_lower_order_ideal(S: SupportSet) -> LowerIdealReport:
    """Downward closure and the description by an allowed inversion set.

    The allowed set is ``S.allowed`` when the support came from the
    recursion, else the union of the inversions of its members.
    """
    wit = []
    closed = True
    for p in S.perms:
        for q in lower_covers(p):
            if q not in S.perms:
                closed = False
                wit.append(f"{format_perm(q)} < {format_perm(p)} missing")
    allowed = S.allowed if S.allowed is not None else _union_inversions(S.perms)
    n = len(next(iter(S.perms)))
    C = {p for p in enumerate_sigma(n) if value_inversions(p) <= allowed}
    charac = C == set(S.perms)
    for p in sorted(C ^ set(S.perms)):
        wit.append(f"{format_perm(p)} breaks the inversion description")
    return LowerIdealReport(closed, charac, wit)


# ---------------------------------------------------------------------------
# the linear isomorphism


@dataclass
class IsoReport:
    n: int
    pairs: int
    failures: list[tuple[KapranovIndex, KapranovIndex]]
    zero_images: list[KapranovIndex]
    scalar: str

    @property
    def ok(self) -> bool:
        return not self.failures and not self.zero_images


def verify_linear_iso(n: int) -> IsoReport:
    """Check ``phi*(L t_a) * Phi*(t_b) = phi*(L t_b) * Phi*(t_a)`` for all pairs.

    Both sides are exact rational functions on the moduli chart.  The
    ratio ``phi*(L t_a) / Phi*(t_a)`` is computed per index and the indices
    are grouped by exact equality of ratios; a pair passes exactly when both
    indices fall in the same group.
    """
    L = build_L(n)
    group: dict[KapranovIndex, int] = {}
    reps: list[RationalFunction] = []
    zeros = []
    for idx, S in L.items():
        left = pullback_m0n(S.linear_form())
        if left.is_zero():
            zeros.append(idx)
            continue
        r = left / kapranov_coordinate(idx, n)
        for g, rep in enumerate(reps):
            if r == rep:
                group[idx] = g
                break
        else:
            group[idx] = len(reps)
            reps.append(r)
    ratio = reps[0].reduced() if reps else None
    idxs = sorted(group)
    failures = [(a, b) for k, a in enumerate(idxs) for b in idxs[k + 1 :] if group[a] != group[b]]
    npairs = len(L) * (len(L) - 1) // 2
    return IsoReport(n, npairs, failures, zeros, ratio.dumps() if ratio is not None else "")


# ---------------------------------------------------------------------------
# the log canonical ideal for n = 5


def t_ring(n: int) -> Ring:
    return Ring([index_name(i) for i in kapranov_indices(n)])


def lc_ideal(n: int = 5) -> Ideal:
    """Kernel of the Kapranov parametrization, by elimination."""
    if n != 5:
        raise NotImplementedError("lc_ideal is only provided for n = 5")
    idxs = kapranov_indices(n)
    coords = [kapranov_coordinate(i, n) for i in idxs]
    D: Counter = Counter()
    for c in coords:
        for f, e in c.den.items():
            D[f] = max(D[f], e)
    polys = []
    for c in coords:
        p = c.num
        for f, e in D.items():
            p = p * f ** (e - c.den.get(f, 0))
        polys.append(p)
    xr = m0n_ring(n)
    T = t_ring(n)
    names = ["_s"] + list(xr.names) + list(T.names)
    big = Ring(names)
    k = 1 + xr.nvars
    s = big.var(0)
    xs = [big.var(1 + i) for i in range(xr.nvars)]
    gens = []
    for a, p in enumerate(polys):
        img = p.substitute(xs, big)
        gens.append(big.var(k + a) - s * img)
    return Ideal(eliminate(gens, big, k, T), T)


def pull_to_pt(I: Ideal, n: int = 5) -> Ideal:
    """Substitute ``t_a -> L_n(t_a)`` into the generators of ``I``."""
    R = z_ring(n)
    images = [L_image(i, n) for i in kapranov_indices(n)]
    return Ideal([g.substitute(images, R) for g in I.gens], R)


# ---------------------------------------------------------------------------
# the degree formula


def compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts with ``i_1 + ... + i_m >= m``."""
    out = []
    for c in product(range(total + 1), repeat=parts):
        if sum(c) != total:
            continue
        if all(sum(c[:m]) >= m for m in range(1, parts + 1)):
            out.append(c)
    return out


def multinomial(total: int, parts: Sequence[int]) -> int:
    from math import factorial

    out = factorial(total)
    for p in parts:
        out //= factorial(p)
    return out


def load_asym_table() -> dict[tuple[int, ...], int]:
    """Shipped asymmetric multinomial values keyed by composition."""
    raw = json.loads(resources.files("parketaylor").joinpath("data/asym_multinomial.json").read_text())
    return {tuple(int(x) for x in k.split(",")): v["value"] for k, v in raw["values"].items()}


def degree_formula(n: int, asym_table: Mapping[tuple[int, ...], int] | None = None) -> int:
    """Sum over compositions of ``n - 3`` of multinomial times asymmetric multinomial."""
    if n < 4:
        raise ValueError(f"degree_formula needs n >= 4, got {n}")
    if n == 4:
        return 1
    table = load_asym_table() if asym_table is None else asym_table
    k = n - 3
    total = 0
    for c in compositions(k, k):
        if c not in table:
            raise ValueError(f"asymmetric multinomial table has no entry for <{k};{','.join(map(str, c))}>")
        total += multinomial(k, c) * table[c]
    return total
