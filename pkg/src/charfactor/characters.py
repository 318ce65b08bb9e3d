"""Alternants, twisted-point specializations, and Schur character values.

The twisted point attaches the m parameters t_1..t_m to every power of a
primitive n-th root of unity: coordinate k*m+s carries zeta_n^k * t_s.
Everything here is exact over Q(zeta_N).

Two independent evaluation routes for characters are kept side by side on
purpose.  The tableau route builds the character as an explicit Laurent
polynomial from semistandard tableaux; the alternant-ratio route divides
two determinants over a cyclotomic field at a concrete regular point.
They cross-check each other in the test suite.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .cyclotomic import Cyclotomic, as_cyclotomic, field_degree, zeta
from .laurent import LaurentPoly
from .perms import (DEFAULT_ENUMERATION_BOUND, EnumerationTooLarge,
                    permutation_parity)
from .weights import check_dominant, shifted_weight


def twisted_numerator(mu, m, n, bound=DEFAULT_ENUMERATION_BOUND):
    """Alternating sum, over the full symmetric group on m*n letters, of
    the block-specialized monomials of mu.

    The result is an exact Laurent polynomial in t_1..t_m over Q(zeta_n).
    It is antisymmetric in mu; it collapses to the zero polynomial exactly
    when the residue classes of mu mod n are not uniformly filled.
    """
    total = m * n
    if len(mu) != total:
        raise ValueError("mu length must be m*n")
    if total > bound:
        raise EnumerationTooLarge(f"S_{total} exceeds the enumeration bound {bound}")
    mu = tuple(mu)
    pos_block = tuple(p // m for p in range(total))
    pos_var = tuple(p % m for p in range(total))
    # accumulate integer multiplicities per (t-exponent, zeta-power) first;
    # cyclotomic reduction happens once per distinct monomial at the end
    counts = {}
    for images in itertools.permutations(range(total)):
        parity = permutation_parity(images)
        texp = [0] * m
        twist = 0
        for p in range(total):
            e = mu[images[p]]
            texp[pos_var[p]] += e
            twist += pos_block[p] * e
        key = tuple(texp)
        row = counts.get(key)
        if row is None:
            row = [0] * n
            counts[key] = row
        row[twist % n] += parity

    deg = field_degree(n)
    basis = [zeta(n, j).coeffs for j in range(n)]
    terms = {}
    for key, row in counts.items():
        vec = [Fraction(0)] * deg
        for j, cnt in enumerate(row):
            if cnt:
                for i, b in enumerate(basis[j]):
                    if b:
                        vec[i] += cnt * b
        if any(vec):
            terms[key] = Cyclotomic(n, vec)
    return LaurentPoly._raw(m, n, terms)


def alternant(exponents, power=1):
    """Alternating sum over all arrangements of the given exponent vector,
    as a Laurent polynomial; with power=k the variables are t_s^k."""
    size = len(exponents)
    counts = {}
    for images in itertools.permutations(range(size)):
        parity = permutation_parity(images)
        key = tuple(exponents[images[s]] * power for s in range(size))
        counts[key] = counts.get(key, 0) + parity
    return LaurentPoly(size, {k: c for k, c in counts.items() if c})


def twisted_vandermonde_product(m, n):
    """prod_(a<b) (x_a - x_b) over the m*n twisted coordinates
    x_(k*m+s) = zeta_n^k * t_s, multiplied out exactly."""
    total = m * n
    coords = []
    for p in range(total):
        k, s = divmod(p, m)
        exps = [0] * m
        exps[s] = 1
        coords.append(LaurentPoly(m, {tuple(exps): zeta(n, k)}, order=n))
    out = LaurentPoly.one(m)
    for a in range(total):
        for b in range(a + 1, total):
            out = out * (coords[a] - coords[b])
    return out


def denominator_scalar(m, n):
    """The constant in the factored twisted Vandermonde:
    (-1)^(C(m,2)*C(n,2)) * prod_(i<j) (zeta_n^i - zeta_n^j)^m."""
    c = Cyclotomic.rational(1, n)
    for i in range(n):
        for j in range(i + 1, n):
            c = c * (zeta(n, i) - zeta(n, j))
    c = c ** m
    if (m * (m - 1) // 2) * (n * (n - 1) // 2) % 2:
        c = -c
    return c


def twisted_vandermonde_closed(m, n):
    """Factored form of the twisted Vandermonde: the scalar above times
    prod_(i<j) (t_i^n - t_j^n)^n times (t_1 ... t_m)^(n(n-1)/2)."""
    poly = LaurentPoly.monomial((n * (n - 1) // 2,) * m, denominator_scalar(m, n))
    for i in range(m):
        for j in range(i + 1, m):
            ei = [0] * m
            ej = [0] * m
            ei[i] = n
            ej[j] = n
            diff = LaurentPoly(m, {tuple(ei): 1, tuple(ej): -1})
            poly = poly * diff ** n
    return poly


def _ssyt_weights(shape, nvars):
    # content vectors of all semistandard tableaux of the given shape with
    # entries in 1..nvars: rows weakly increase, columns strictly increase
    rows = [r for r in shape if r > 0]
    if not rows:
        yield (0,) * nvars
        return
    cells = [(r, c) for r, width in enumerate(rows) for c in range(width)]
    grid = [[0] * width for width in rows]
    weight = [0] * nvars

    def fill(idx):
        if idx == len(cells):
            yield tuple(weight)
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = grid[r][c - 1]
        if r > 0 and grid[r - 1][c] + 1 > lo:
            lo = grid[r - 1][c] + 1
        for val in range(lo, nvars + 1):
            grid[r][c] = val
            weight[val - 1] += 1
            yield from fill(idx + 1)
            weight[val - 1] -= 1
        grid[r][c] = 0

    yield from fill(0)


@lru_cache(maxsize=None)
def schur_polynomial(lam):
    """Schur character of the dominant weight lam as an explicit Laurent
    polynomial in len(lam) variables, summed over semistandard tableaux.

    Negative entries are handled by twisting with a power of the
    determinant character: shift every entry by -lam[-1], then multiply
    the result by (t_1 ... t_N)^lam[-1].
    """
    lam = tuple(lam)
    check_dominant(lam)
    nvars = len(lam)
    base = lam[-1]
    shape = tuple(x - base for x in lam)
    counts = {}
    for w in _ssyt_weights(shape, nvars):
        key = tuple(x + base for x in w)
        counts[key] = counts.get(key, 0) + 1
    return LaurentPoly(nvars, counts)


def det_fraction_free(matrix):
    """Exact determinant by fraction-free (Bareiss) elimination with row
    pivoting; entries may mix rationals and cyclotomic values."""
    size = len(matrix)
    if size == 0:
        return Cyclotomic.rational(1)
    order = 1
    rows = []
    for row in matrix:
        if len(row) != size:
            raise ValueError("matrix must be square")
        row = [as_cyclotomic(x) for x in row]
        for x in row:
            order = lcm(order, x.order)
        rows.append(row)
    rows = [[x.embed(order) for x in row] for row in rows]
    sign = 1
    prev = Cyclotomic.rational(1, order)
    zero = Cyclotomic.rational(0, order)
    for p in range(size - 1):
        if not rows[p][p]:
            for r in range(p + 1, size):
                if rows[r][p]:
                    rows[p], rows[r] = rows[r], rows[p]
                    sign = -sign
                    break
            else:
                return zero
        pivot = rows[p][p]
        for r in range(p + 1, size):
            head = rows[r][p]
            for c in range(p + 1, size):
                rows[r][c] = (pivot * rows[r][c] - head * rows[p][c]) / prev
            rows[r][p] = zero
        prev = pivot
    det = rows[-1][-1]
    return -det if sign < 0 else det


def alternant_at_point(exponents, point):
    """det(point_i ^ exponents_j), the alternant value at a concrete point."""
    coords = [as_cyclotomic(x) for x in point]
    if len(coords) != len(exponents):
        raise ValueError("point arity mismatch")
    if any(e < 0 for e in exponents) and any(not c for c in coords):
        raise ValueError("pole at evaluation point")
    return det_fraction_free([[c ** e for e in exponents] for c in coords])


def schur_at_point(lam, point):
    """Character value at a regular point: the ratio of the alternant of
    the shifted weight by the Vandermonde of the point."""
    lam = tuple(lam)
    check_dominant(lam)
    coords = [as_cyclotomic(x) for x in point]
    if len(coords) != len(lam):
        raise ValueError("point arity mismatch")
    denom = Cyclotomic.rational(1)
    for i in range(len(coords)):
        for j in range(i + 1, len(coords)):
            denom = denom * (coords[i] - coords[j])
    if not denom:
        raise ValueError("point not regular; use tableau method")
    return alternant_at_point(shifted_weight(lam), coords) / denom


def coxeter_value(lam, conjugate=False):
    """Character value at the regular point (1, w, w^2, ...), w a primitive
    root of unity of order len(lam); always 0, 1, or -1.

    With conjugate=True the point is built from the inverse root instead;
    the result must agree whenever it is determined.
    """
    lam = tuple(lam)
    size = len(lam)
    nu = shifted_weight(lam)
    step = -1 if conjugate else 1
    matrix = [[zeta(size, step * i * e) for e in nu] for i in range(size)]
    num = det_fraction_free(matrix)
    den = Cyclotomic.rational(1, size)
    for i in range(size):
        for j in range(i + 1, size):
            den = den * (zeta(size, step * i) - zeta(size, step * j))
    value = num / den
    if not (value == 0 or value == 1 or value == -1):
        raise RuntimeError(f"character value at a Coxeter point outside 0,+1,-1: {value}")
    return value
