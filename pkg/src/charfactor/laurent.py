"""Sparse multivariate Laurent polynomials with cyclotomic coefficients.

Terms live in a dict mapping integer exponent tuples (negative exponents
allowed) to nonzero Cyclotomic coefficients:

    {(2, -1): z, (0, 3): 2}   <->   (z) * t1^2 t2^-1  +  (2) * t2^3

All coefficients of one polynomial are held at a single field order, the
lcm of the orders seen on input; mixed-order operands are lifted on entry,
so equality stays a straight term-map comparison.  Values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .cyclotomic import Cyclotomic, as_cyclotomic, zeta

_SCALARS = (int, Fraction, Cyclotomic)


class LaurentPoly:
    __slots__ = ("nvars", "order", "terms")

    def __init__(self, nvars, terms=None, order=1):
        normalized = []
        for exps, value in (terms or {}).items():
            value = as_cyclotomic(value)
            if not value:
                continue
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} does not have {nvars} entries")
            normalized.append((exps, value))
            order = lcm(order, value.order)
        self.nvars = nvars
        self.order = order
        self.terms = {e: c.embed(order) for e, c in normalized}

    @classmethod
    def _raw(cls, nvars, order, terms):
        # internal: terms already pruned and at the stated order
        poly = object.__new__(cls)
        poly.nvars = nvars
        poly.order = order
        poly.terms = terms
        return poly

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, 1, {})

    @classmethod
    def constant(cls, value, nvars):
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars):
        return cls.constant(1, nvars)

    @classmethod
    def variable(cls, index, nvars):
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls(len(exps), {tuple(exps): coeff})

    def _lift(self, order):
        if order == self.order:
            return self
        return LaurentPoly._raw(self.nvars, order,
                                {e: c.embed(order) for e, c in self.terms.items()})

    def _coerce(self, other):
        if isinstance(other, _SCALARS):
            other = LaurentPoly.constant(other, self.nvars)
        elif not isinstance(other, LaurentPoly):
            return None
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = lcm(self.order, other.order)
        terms = dict(self._lift(order).terms)
        for exps, value in other._lift(order).terms.items():
            total = terms.get(exps)
            total = value if total is None else total + value
            if total:
                terms[exps] = total
            else:
                terms.pop(exps, None)
        return LaurentPoly._raw(self.nvars, order, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.nvars, self.order,
                                {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = lcm(self.order, other.order)
        left = self._lift(order).terms
        right = other._lift(order).terms
        terms = {}
        for ea, ca in left.items():
            for eb, cb in right.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                value = ca * cb
                total = terms.get(exps)
                total = value if total is None else total + value
                if total:
                    terms[exps] = total
                else:
                    terms.pop(exps, None)
        return LaurentPoly._raw(self.nvars, order, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = LaurentPoly.one(self.nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, value):
        value = as_cyclotomic(value)
        if not value:
            return LaurentPoly.zero(self.nvars)
        order = lcm(self.order, value.order)
        value = value.embed(order)
        return LaurentPoly._raw(self.nvars, order,
                                {e: c.embed(order) * value for e, c in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            other = LaurentPoly.constant(other, self.nvars)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        order = lcm(self.order, other.order)
        return self._lift(order).terms == other._lift(order).terms

    def evaluate(self, point):
        """Substitute the coordinates of `point` for the variables; exact.

        Coordinates may be ints, Fractions, or Cyclotomic values.  A zero
        coordinate under a variable that occurs with a negative exponent is
        rejected as a pole.
        """
        if len(point) != self.nvars:
            raise ValueError("point arity mismatch")
        coords = [as_cyclotomic(x) for x in point]
        for i in range(self.nvars):
            if any(e[i] < 0 for e in self.terms) and not coords[i]:
                raise ValueError("pole at evaluation point")
        order = self.order
        for c in coords:
            order = lcm(order, c.order)
        powers = [{} for _ in coords]
        total = Cyclotomic.rational(0, order)
        for exps, coeff in self.terms.items():
            value = coeff
            for i, e in enumerate(exps):
                if e:
                    cached = powers[i].get(e)
                    if cached is None:
                        cached = coords[i] ** e
                        powers[i][e] = cached
                    value = value * cached
            total = total + value
        return total

    def power_substitute(self, k):
        """Substitute t_s -> t_s^k for every variable."""
        if not isinstance(k, int) or k < 1:
            raise ValueError("substitution power must be a positive integer")
        return LaurentPoly._raw(self.nvars, self.order,
                                {tuple(x * k for x in e): c for e, c in self.terms.items()})

    def scalar_ratio(self, other):
        """The value c with self == other.scale(c), or None if no single
        scalar matches every term."""
        if not isinstance(other, LaurentPoly) or self.nvars != other.nvars:
            return None
        if not other.terms or set(self.terms) != set(other.terms):
            return None
        probe = next(iter(other.terms))
        ratio = self.terms[probe] / other.terms[probe]
        for exps, value in other.terms.items():
            if self.terms[exps] != value * ratio:
                return None
        return ratio

    def to_text(self):
        """Render as `(coeff) * t1^a1 t2^a2 ...`, coefficients written as
        polynomials in z, terms in graded lexicographic order."""
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            factors = " ".join(
                f"t{i + 1}" if e == 1 else f"t{i + 1}^{e}"
                for i, e in enumerate(exps) if e
            )
            coeff = f"({self.terms[exps]})"
            parts.append(f"{coeff} * {factors}" if factors else coeff)
        return " + ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"LaurentPoly({self.nvars}, {self.to_text()})"


def block_specialize(exponents, m, n):
    """Monomial picked up by substituting coordinate k*m+s -> zeta_n^k * t_s.

    `exponents` has length m*n, read as n consecutive blocks of m; the
    result is a single-term polynomial in t_1..t_m over Q(zeta_n).
    """
    if len(exponents) != m * n:
        raise ValueError("exponent vector length must be m*n")
    texp = [0] * m
    twist = 0
    for pos, e in enumerate(exponents):
        k, s = divmod(pos, m)
        texp[s] += e
        twist += k * e
    return LaurentPoly(m, {tuple(texp): zeta(n, twist)}, order=n)
