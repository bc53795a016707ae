"""Rational functions with factored denominators.

A :class:`RationalFunction` is ``num / prod(f ** e)`` where the factors ``f``
are primitive polynomials with positive leading coefficient.  All the
denominators met in this package are products of linear forms, so keeping
them factored makes addition (least common multiple of the factor counts)
and cancellation (exact division by a known factor) cheap.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping

from .polys import Number, Polynomial, Ring


class DegenerateConfiguration(ZeroDivisionError):
    """A denominator vanished at the requested point."""


def exact_divide(p: Polynomial, f: Polynomial) -> Polynomial | None:
    """``p / f`` if ``f`` divides ``p`` exactly, else ``None``."""
    if not f:
        raise ZeroDivisionError("division by the zero polynomial")
    key = p.ring.key
    lmf = max(f.terms, key=key)
    lcf = Fraction(f.terms[lmf])
    rest = [(m, c) for m, c in f.terms.items() if m != lmf]
    terms = dict(p.terms)
    quot: dict = {}
    while terms:
        m = max(terms, key=key)
        c = terms.pop(m)
        q = tuple([a - b for a, b in zip(m, lmf)])
        if min(q) < 0:
            return None
        qc = Fraction(c) / lcf
        quot[q] = qc
        for mf, cf in rest:
            mm = tuple([a + b for a, b in zip(mf, q)])
            v = terms.get(mm, 0) - qc * cf
            if v:
                terms[mm] = v
            else:
                terms.pop(mm, None)
    return Polynomial(p.ring, quot)


def normalize_factor(f: Polynomial) -> tuple[Number, Polynomial]:
    """Split ``f = c * g`` with ``g`` primitive and positive-leading."""
    g = f.primitive()
    lm = g.leading_monomial()
    return Fraction(f.terms[lm]) / g.terms[lm], g


class RationalFunction:
    __slots__ = ("ring", "num", "den")

    def __init__(self, num: Polynomial, den: Mapping[Polynomial, int] | None = None):
        self.ring: Ring = num.ring
        self.num = num
        self.den: Counter = Counter()
        scale: Fraction = Fraction(1)
        for f, e in (den or {}).items():
            if e <= 0:
                continue
            if not f:
                raise DegenerateConfiguration("zero factor in a denominator")
            if len(f.terms) == 1 and not any(next(iter(f.terms))):
                scale /= Fraction(next(iter(f.terms.values()))) ** e
                continue
            c, g = normalize_factor(f)
            scale /= c**e
            self.den[g] += e
        if scale != 1:
            self.num = num * scale
        if not self.num:
            self.den = Counter()

    # construction -----------------------------------------------------------
    @classmethod
    def const(cls, ring: Ring, c: Number) -> "RationalFunction":
        return cls(ring.const(c))

    @classmethod
    def from_factors(
        cls, ring: Ring, coeff: Number, num_factors: Iterable[Polynomial], den_factors: Iterable[Polynomial]
    ) -> "RationalFunction":
        num = ring.const(coeff)
        for f in num_factors:
            num = num * f
        return cls(num, Counter(den_factors))

    # arithmetic --------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.const(self.ring, other)
        raise TypeError(f"cannot combine RationalFunction with {type(other).__name__}")

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if not other.num:
            return self
        if not self.num:
            return other
        return rf_sum([self, other])

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        out = RationalFunction(self.num * other.num)
        if out.num:
            out.den = self.den + other.den
        return out

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        num = self.ring.const(1)
        for f, e in self.den.items():
            num = num * f**e
        return RationalFunction(num, {self.num: 1})

    def __truediv__(self, other) -> "RationalFunction":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "RationalFunction":
        return self._coerce(other) / self

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return self.inverse() ** (-k)
        out = RationalFunction.const(self.ring, 1)
        for _ in range(k):
            out = out * self
        return out

    # comparison ---------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (RationalFunction, Polynomial, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        return not (self - other).num

    def __hash__(self):  # mutable-ish value object; equality is semantic
        raise TypeError("RationalFunction is unhashable")

    def reduced(self) -> "RationalFunction":
        """Cancel denominator factors that divide the numerator."""
        num = self.num
        den = Counter(self.den)
        if not num:
            return self
        for f in list(den):
            while den[f]:
                q = exact_divide(num, f)
                if q is None:
                    break
                num = q
                den[f] -= 1
        return RationalFunction(num, +den)

    def is_polynomial(self) -> bool:
        return not self.reduced().den

    # evaluation ---------------------------------------------------------------
    def evaluate(self, values: Mapping[int, Number]) -> Fraction:
        """Exact value at a point given as ``{variable index: value}``."""

        def ev(p: Polynomial) -> Fraction:
            tot = Fraction(0)
            for m, c in p.terms.items():
                t = Fraction(c)
                for i, e in enumerate(m):
                    if e:
                        t *= Fraction(values[i]) ** e
                tot += t
            return tot

        d = Fraction(1)
        for f, e in self.den.items():
            d *= ev(f) ** e
        if d == 0:
            raise DegenerateConfiguration("denominator vanishes at this point")
        return ev(self.num) / d

    def dumps(self) -> str:
        if not self.den:
            return self.num.dumps()
        parts = []
        for f, e in sorted(self.den.items(), key=lambda fe: fe[0].dumps()):
            s = f"({f.dumps()})"
            parts.append(s if e == 1 else f"{s}^{e}")
        return f"({self.num.dumps()}) / ({' * '.join(parts)})"

    def __repr__(self) -> str:
        return f"RationalFunction({self.dumps()})"


def rf_sum(items: Iterable[RationalFunction]) -> RationalFunction:
    """Sum over the least common multiple of the factored denominators."""
    items = [r for r in items if r.num]
    if not items:
        raise ValueError("rf_sum needs at least one non-zero summand")
    ring = items[0].ring
    D: Counter = Counter()
    for r in items:
        for f, e in r.den.items():
            if e > D[f]:
                D[f] = e
    powers: dict[tuple[Polynomial, int], Polynomial] = {}

    def power(f: Polynomial, e: int) -> Polynomial:
        k = (f, e)
        if k not in powers:
            powers[k] = f**e
        return powers[k]

    acc: dict = {}
    for r in items:
        p = r.num
        for f, e in D.items():
            miss = e - r.den.get(f, 0)
            if miss:
                p = p * power(f, miss)
        for m, c in p.terms.items():
            acc[m] = acc.get(m, 0) + c
    num = Polynomial(ring, acc)
    out = RationalFunction(num)
    if num:
        out.den = D
    return out
