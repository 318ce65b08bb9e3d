"""End-to-end factorization of twisted-point character values.

Given a dominant weight for the rank m*n group, the pipeline shifts by the
staircase, tests the residue-balance condition, normalizes into residue
blocks, reads off one rank-m weight per block, and pins the overall sign.
The resulting certificate is exact and independently checkable two ways:
numerically (exact equality at random rational points) and symbolically
(the full alternating-sum identity, term by term).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyclotomic, as_cyclotomic, omega_power_of, zeta
from .laurent import LaurentPoly, block_specialize
from .perms import (DEFAULT_ENUMERATION_BOUND, BlockStructure,
                    EnumerationTooLarge, is_column_row_product,
                    row_coset_reps, row_subgroup, column_subgroup)
from .characters import (alternant, coxeter_value, denominator_scalar,
                         schur_at_point, twisted_numerator)
from .weights import (check_dominant, factor_weights, is_residue_balanced,
                      normalize_residue_blocks, shifted_weight, staircase)

DEFAULT_SEED = 1729


@dataclass(frozen=True)
class FactorizationCertificate:
    """Outcome of `factorize`.

    When balanced is False the character is identically zero at every
    twisted point and the remaining fields stay None.  Otherwise mu is the
    residue-normalized shifted weight, w0_sign the sign of the normalizing
    rearrangement, etas the n factor weights of rank m, and epsilon the
    global sign of the factorization.
    """

    m: int
    n: int
    lam: tuple
    balanced: bool
    mu: tuple | None = None
    w0_sign: int | None = None
    etas: tuple | None = None
    epsilon: int | None = None

    def to_dict(self):
        return {
            "m": self.m,
            "n": self.n,
            "lambda": list(self.lam),
            "balanced": self.balanced,
            "mu": list(self.mu) if self.mu is not None else None,
            "w0_sign": self.w0_sign,
            "etas": [list(e) for e in self.etas] if self.etas is not None else None,
            "epsilon": self.epsilon,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            m=int(data["m"]),
            n=int(data["n"]),
            lam=tuple(data["lambda"]),
            balanced=bool(data["balanced"]),
            mu=tuple(data["mu"]) if data.get("mu") is not None else None,
            w0_sign=data.get("w0_sign"),
            etas=tuple(tuple(e) for e in data["etas"])
            if data.get("etas") is not None else None,
            epsilon=data.get("epsilon"),
        )


def twisted_point(t, n):
    """The m*n coordinates (t, w t, ..., w^(n-1) t), w = zeta_n."""
    coords = []
    for k in range(n):
        w = zeta(n, k)
        for x in t:
            coords.append(w * as_cyclotomic(x))
    return coords


def factorize(lam, m, n, bound=DEFAULT_ENUMERATION_BOUND):
    """Produce the factorization certificate for a dominant weight of
    length m*n; a vanishing certificate when the residue balance fails."""
    lam = tuple(lam)
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if len(lam) != m * n:
        raise ValueError(f"weight length {len(lam)} does not match m*n = {m * n}")
    check_dominant(lam)
    shifted = shifted_weight(lam)
    if not is_residue_balanced(shifted, m, n):
        return FactorizationCertificate(m=m, n=n, lam=lam, balanced=False)
    mu, w0_sign = normalize_residue_blocks(shifted, m, n)
    etas = factor_weights(mu, m, n)
    epsilon = sign_via_coxeter(lam, etas, m, n)
    return FactorizationCertificate(m=m, n=n, lam=lam, balanced=True,
                                    mu=mu, w0_sign=w0_sign, etas=etas,
                                    epsilon=epsilon)


def sign_via_coxeter(lam, etas, m, n, conjugate=False):
    """Global sign of the factorization.

    Both sides of the identity take values in {0, +1, -1} at the
    primitive-root point (1, a, a^2, ...) with a of order m*n, whose n-th
    powers give the analogous rank-m point; when both are nonzero their
    ratio is the sign.  Both may vanish there, in which case the sign is
    pinned at the first generic rational point instead, where the factored
    side is a strictly positive rational.
    """
    big = coxeter_value(tuple(lam), conjugate=conjugate).embed(m * n)
    small = Cyclotomic.rational(1, m * n)
    for eta in etas:
        small = small * coxeter_value(tuple(eta), conjugate=conjugate).embed(m * n)
    if small:
        if not big:
            raise RuntimeError("factored side nonzero but direct side zero "
                               "at the Coxeter point")
        value = big / small
    else:
        if big:
            raise RuntimeError("direct side nonzero but factored side zero "
                               "at the Coxeter point")
        value = _sign_at_generic_point(lam, etas, m, n)
    if value == 1:
        return 1
    if value == -1:
        return -1
    raise RuntimeError(f"factorization sign is not +-1: {value}")


_GENERIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _sign_at_generic_point(lam, etas, m, n):
    for start in range(len(_GENERIC_BASES) - m + 1):
        t = [Fraction(x) for x in _GENERIC_BASES[start:start + m]]
        rhs = Cyclotomic.rational(1)
        powers = [x ** n for x in t]
        for eta in etas:
            rhs = rhs * schur_at_point(tuple(eta), powers)
        if not rhs:
            # unreachable at positive coordinates; kept as a guard
            continue
        lhs = schur_at_point(tuple(lam), twisted_point(t, n))
        return lhs / rhs
    raise RuntimeError("no usable generic point found")


def random_regular_point(rng, m, n, retries=64):
    """Random rational coordinates in [2, 97] whose n-th powers are
    pairwise distinct; redraws (bounded) on collision."""
    for _ in range(retries):
        t = [Fraction(x) for x in rng.sample(range(2, 98), m)]
        if len({x ** n for x in t}) == m:
            return t
    raise RuntimeError("failed to draw a regular sample point")


def verify_numeric(cert, samples=5, seed=DEFAULT_SEED):
    """Exact spot-check of the certificate: at each sampled point the direct
    character value must equal epsilon times the product of the factor
    values at the n-th powers."""
    if not cert.balanced:
        raise ValueError("certificate is a vanishing certificate; nothing to factor")
    rng = random.Random(seed)
    for _ in range(samples):
        t = random_regular_point(rng, cert.m, cert.n)
        lhs = schur_at_point(cert.lam, twisted_point(t, cert.n))
        rhs = Cyclotomic.rational(cert.epsilon)
        powers = [x ** cert.n for x in t]
        for eta in cert.etas:
            rhs = rhs * schur_at_point(eta, powers)
        if lhs != rhs:
            return False
    return True


def verify_symbolic(cert, bound=DEFAULT_ENUMERATION_BOUND):
    """Check the alternating-sum identity behind the certificate.

    The full twisted numerator of mu must equal a single scalar times
    (t_1..t_m)^(n(n-1)/2) times the product of the block alternants in the
    variables t^n; and that scalar, combined with the rearrangement sign
    and the denominator constant, must reproduce epsilon.  Returns
    (ok, scalar); scalar is None when no single scalar matches.
    """
    if not cert.balanced:
        raise ValueError("certificate is a vanishing certificate; nothing to factor")
    m, n = cert.m, cert.n
    lhs = twisted_numerator(cert.mu, m, n, bound=bound)
    rho = staircase(m)
    rhs = LaurentPoly.monomial((n * (n - 1) // 2,) * m, 1)
    for eta in cert.etas:
        rhs = rhs * alternant(tuple(e + r for e, r in zip(eta, rho)), power=n)
    scalar = lhs.scalar_ratio(rhs)
    if scalar is None:
        return False, None
    ok = scalar * cert.w0_sign == denominator_scalar(m, n) * cert.epsilon
    return ok, scalar


def vanishes_numerically(lam, m, n, samples=5, seed=DEFAULT_SEED):
    """Spot-check that the character is exactly zero at random twisted
    points (the expected behavior of an unbalanced weight)."""
    rng = random.Random(seed)
    lam = tuple(lam)
    for _ in range(samples):
        t = random_regular_point(rng, m, n)
        if schur_at_point(lam, twisted_point(t, n)):
            return False
    return True


def coset_block_sum(mu, m, n, rep, bound=DEFAULT_ENUMERATION_BOUND):
    """Signed sum of block-specialized monomials over the left coset of the
    row subgroup represented by rep."""
    if m * n > bound:
        raise EnumerationTooLarge(f"S_{m * n} exceeds the enumeration bound {bound}")
    total = LaurentPoly._raw(m, n, {})
    rep_sign = rep.sign
    for sigma in row_subgroup(m, n):
        tau = rep * sigma
        term = block_specialize(tau.act(mu), m, n)
        if rep_sign * sigma.sign < 0:
            term = -term
        total = total + term
    return total


@dataclass
class CosetAuditReport:
    """Findings of `coset_audit`; empty failures means everything passed."""

    m: int
    n: int
    lam: tuple
    tested_outside: int
    tested_inside: int
    constants: dict
    omega_powers: dict
    invariance_checked: bool
    failures: list

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return {
            "m": self.m,
            "n": self.n,
            "lambda": list(self.lam),
            "tested_outside": self.tested_outside,
            "tested_inside": self.tested_inside,
            "constants": [
                {"perm": list(perm.images), "omega_power": self.omega_powers[perm]}
                for perm in sorted(self.constants, key=lambda p: p.images)
            ],
            "invariance_checked": self.invariance_checked,
            "failures": list(self.failures),
            "passed": self.passed,
        }


def coset_audit(lam, m, n, outside_sample=None, sigma_sample=None,
                seed=DEFAULT_SEED, bound=DEFAULT_ENUMERATION_BOUND):
    """Audit the coset structure of the alternating sum for one balanced
    weight.

    Checks (a) every sampled coset with no column-row representative sums
    to the zero polynomial, and (b) every column element rescales the base
    monomial by a power of zeta_n that is unchanged under the row action.
    """
    lam = tuple(lam)
    mu, _ = normalize_residue_blocks(shifted_weight(lam), m, n)
    blocks = BlockStructure(m, n)
    rng = random.Random(seed)
    failures = []

    outside = [rep for rep in row_coset_reps(m, n, bound=bound)
               if not is_column_row_product(rep, blocks)]
    if outside_sample is not None and outside_sample < len(outside):
        outside = rng.sample(outside, outside_sample)
    for rep in outside:
        if coset_block_sum(mu, m, n, rep, bound=bound):
            failures.append(f"nonzero block sum on the coset of {rep!r}")

    base = block_specialize(mu, m, n)
    constants = {}
    omega_powers = {}
    for eta in column_subgroup(m, n):
        ratio = block_specialize(eta.act(mu), m, n).scalar_ratio(base)
        power = None if ratio is None else omega_power_of(ratio, n)
        if power is None:
            failures.append(f"column element {eta!r} does not rescale by a root of unity")
            continue
        constants[eta] = ratio
        omega_powers[eta] = power

    sigmas = list(row_subgroup(m, n))
    if sigma_sample is not None and sigma_sample < len(sigmas):
        sigmas = rng.sample(sigmas, sigma_sample)
    for eta, ratio in constants.items():
        for sigma in sigmas:
            shuffled = sigma.act(mu)
            again = block_specialize(eta.act(shuffled), m, n).scalar_ratio(
                block_specialize(shuffled, m, n))
            if again != ratio:
                failures.append(f"constant of {eta!r} changes under row element {sigma!r}")
                break

    return CosetAuditReport(m=m, n=n, lam=lam,
                            tested_outside=len(outside),
                            tested_inside=len(constants),
                            constants=constants,
                            omega_powers=omega_powers,
                            invariance_checked=True,
                            failures=failures)
