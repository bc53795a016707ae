"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Ring` fixes the variable names and a monomial order.  Monomials are
exponent tuples; a :class:`Polynomial` maps monomials to non-zero ``int`` or
``Fraction`` coefficients.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Callable, Iterable, Iterator, Mapping, Sequence

Monomial = tuple[int, ...]
Number = int | Fraction

ORDERS = ("degrevlex", "deglex", "lex")


class Ring:
    """Polynomial ring over Q with named variables and a monomial order.

    ``order`` is one of ``degrevlex``, ``deglex``, ``lex``.  ``elim`` > 0
    turns it into a block order that first compares the total degree in the
    first ``elim`` variables.  ``last`` names a variable index that is
    treated as the smallest one by degrevlex (used for saturation).
    """

    def __init__(self, names: Sequence[str], order: str = "degrevlex", elim: int = 0, last: int | None = None):
        if order not in ORDERS:
            raise ValueError(f"unknown monomial order {order!r}")
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.order = order
        self.elim = elim
        self.last = last
        self.index = {name: i for i, name in enumerate(self.names)}
        if len(self.index) != self.nvars:
            raise ValueError("duplicate variable names")
        rev = list(range(self.nvars - 1, -1, -1))
        if last is not None:
            rev.remove(last)
            rev.insert(0, last)
        self._rev = tuple(rev)
        self.key = self._make_key()

    def _make_key(self) -> Callable[[Monomial], tuple]:
        rev = self._rev
        e = self.elim
        # keys are flat int tuples so they can be negated for heap use
        if self.order == "lex":
            base = lambda m: m  # noqa: E731
        elif self.order == "deglex":
            base = lambda m: (sum(m),) + m  # noqa: E731
        else:
            base = lambda m: (sum(m),) + tuple([-m[i] for i in rev])  # noqa: E731
        if e:
            return lambda m: (sum(m[:e]),) + base(m)
        return base

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and (self.names, self.order, self.elim, self.last) == (
            other.names,
            other.order,
            other.elim,
            other.last,
        )

    def __hash__(self) -> int:
        return hash((self.names, self.order, self.elim, self.last))

    def __repr__(self) -> str:
        return f"Ring({self.nvars} vars, {self.order}, elim={self.elim}, last={self.last})"

    def with_order(self, order: str | None = None, elim: int | None = None, last: int | None = -1) -> "Ring":
        return Ring(
            self.names,
            self.order if order is None else order,
            self.elim if elim is None else elim,
            self.last if last == -1 else last,
        )

    @property
    def one_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def var(self, name_or_index: str | int) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index[name_or_index]
        m = [0] * self.nvars
        m[i] = 1
        return Polynomial(self, {tuple(m): 1})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def const(self, c: Number) -> "Polynomial":
        return Polynomial(self, {self.one_monomial: c} if c else {})

    def monomial(self, exps: Mapping[int, int] | Sequence[int], coeff: Number = 1) -> "Polynomial":
        if isinstance(exps, Mapping):
            m = [0] * self.nvars
            for i, e in exps.items():
                m[i] += e
            exps = m
        return Polynomial(self, {tuple(exps): coeff} if coeff else {})

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for i, e in enumerate(m):
            if e == 1:
                parts.append(self.names[i])
            elif e:
                parts.append(f"{self.names[i]}^{e}")
        return "*".join(parts)

    def parse(self, text: str) -> "Polynomial":
        """Parse the canonical term format written by :meth:`Polynomial.dumps`."""
        text = text.strip()
        if text == "0":
            return self.zero()
        terms: dict[Monomial, Number] = {}
        for tok in re.findall(r"[+-]?\d+/\d+(?:\*[^\s+]+)?", text):
            coeff_s, _, mono_s = tok.partition("*")
            coeff = Fraction(coeff_s)
            m = [0] * self.nvars
            if mono_s:
                for f in mono_s.split("*"):
                    name, _, e = f.partition("^")
                    m[self.index[name]] += int(e) if e else 1
            mt = tuple(m)
            terms[mt] = terms.get(mt, 0) + coeff
        return Polynomial(self, terms)


def _norm(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, Number] | None = None):
        self.ring = ring
        self.terms: dict[Monomial, Number] = {m: _norm(c) for m, c in (terms or {}).items() if c}

    # construction helpers -------------------------------------------------
    def copy(self) -> "Polynomial":
        return Polynomial(self.ring, self.terms)

    def in_ring(self, ring: Ring) -> "Polynomial":
        """Same terms, reinterpreted under another order on the same variables."""
        if ring.names != self.ring.names:
            raise ValueError("rings have different variables")
        p = Polynomial.__new__(Polynomial)
        p.ring = ring
        p.terms = self.terms
        return p

    # inspection -----------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Number]]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> list[tuple[Monomial, Number]]:
        key = self.ring.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=self.ring.key)

    LM = property(leading_monomial)

    def leading_coefficient(self) -> Number:
        return self.terms[self.leading_monomial()]

    LC = property(leading_coefficient)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def variables(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    # arithmetic -------------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring.names != self.ring.names:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m, 0) + c
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(self.ring, {m: c * other for m, c in self.terms.items()}) if other else self.ring.zero()
        other = self._coerce(other)
        acc: dict[Monomial, Number] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple([a + b for a, b in zip(m1, m2)])
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_monomial(self, mono: Monomial, coeff: Number = 1) -> "Polynomial":
        return Polynomial(
            self.ring, {tuple([a + b for a, b in zip(m, mono)]): c * coeff for m, c in self.terms.items()}
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.names == other.ring.names and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # normalisation ----------------------------------------------------------
    def content(self) -> Fraction:
        """Positive rational c with self / c integral and primitive."""
        if not self.terms:
            return Fraction(0)
        nums = [Fraction(c).numerator for c in self.terms.values()]
        dens = [Fraction(c).denominator for c in self.terms.values()]
        g = reduce(gcd, nums)
        lcm = reduce(lambda a, b: a * b // gcd(a, b), dens, 1)
        return Fraction(abs(g), lcm)

    def primitive(self) -> "Polynomial":
        """Integral primitive multiple with positive leading coefficient."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading_coefficient() < 0:
            c = -c
        return Polynomial(self.ring, {m: _norm(v / c) for m, v in self.terms.items()})

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = Fraction(self.leading_coefficient())
        return Polynomial(self.ring, {m: _norm(v / lc) for m, v in self.terms.items()})

    # evaluation --------------------------------------------------------------
    def substitute(self, images: Sequence["Polynomial | Number"], ring: Ring) -> "Polynomial":
        """Ring map sending variable i to ``images[i]`` (a polynomial in ``ring``)."""
        imgs = [img if isinstance(img, Polynomial) else ring.const(img) for img in images]
        cache: dict[tuple[int, int], Polynomial] = {}
        out = ring.zero()
        for m, c in self.terms.items():
            term = ring.const(c)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in cache:
                        cache[key] = imgs[i] ** e
                    term = term * cache[key]
            out = out + term
        return out

    # text ---------------------------------------------------------------------
    def dumps(self) -> str:
        """Canonical term format: ``num/den*var^e*...`` sorted by the ring order."""
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            c = Fraction(c)
            s = f"{c.numerator:+d}/{c.denominator}"
            mono = self.ring.format_monomial(m)
            out.append(f"{s}*{mono}" if mono else s)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({self.dumps()})"

    __str__ = dumps


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x if x > y else y for x, y in zip(a, b)])


def monomial_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x if x < y else y for x, y in zip(a, b)])


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x - y for x, y in zip(a, b)])


def poly_sum(ring: Ring, polys: Iterable[Polynomial]) -> Polynomial:
    acc: dict[Monomial, Number] = {}
    for p in polys:
        for m, c in p.terms.items():
            acc[m] = acc.get(m, 0) + c
    return Polynomial(ring, acc)
