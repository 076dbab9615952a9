"""Seeded random and exhaustive generation of code specs.

Shared by the randomized test suites and the CLI search command.  Random
standard-form specs are built from factor subsets of x^m - lambda, so the
standard-form conditions hold by construction; pairs can additionally be
drawn from a complementary construction that makes LCP verdicts common
enough to be worth testing.
"""

from __future__ import annotations

import random

from .ff import Field
from .poly import Poly, factor_xm_minus_lambda, gcd
from .qtcode import QtCodeSpec


def random_lambda(field: Field, rng: random.Random) -> int:
    return rng.randrange(1, field.order)


def random_poly(field: Field, num_coeffs: int, rng: random.Random) -> Poly:
    """Uniform polynomial with degree < num_coeffs (possibly zero)."""
    if num_coeffs <= 0:
        return Poly.zero(field)
    return Poly(field, [rng.randrange(field.order) for _ in range(num_coeffs)])


def _mask_product(factors, mask: int) -> Poly:
    field = factors[0].field
    out = Poly.one(field)
    for i, f in enumerate(factors):
        if mask >> i & 1:
            out = out * f
    return out


def _g12_for(g11: Poly, g22: Poly, rng: random.Random) -> Poly:
    """A g12 with deg g12 < deg g22 and gcd(g11, g22) | g12."""
    g = gcd(g11, g22)
    bound = int(g22.degree) - int(g.degree)
    return g * random_poly(g11.field, bound, rng)


def random_standard_spec(field: Field, m: int, lam: int,
                         rng: random.Random) -> QtCodeSpec:
    """A uniformly random valid standard-form spec over (q, m, lambda)."""
    factors = factor_xm_minus_lambda(field, m, lam).factors
    t = len(factors)
    g11 = _mask_product(factors, rng.randrange(1 << t))
    g22 = _mask_product(factors, rng.randrange(1 << t))
    return QtCodeSpec.standard(field, m, lam, g11, _g12_for(g11, g22, rng), g22)


def random_one_gen_spec(field: Field, m: int, lam: int,
                        rng: random.Random) -> QtCodeSpec:
    factors = factor_xm_minus_lambda(field, m, lam).factors
    g11 = _mask_product(factors, rng.randrange(1 << len(factors)))
    g12 = random_poly(field, m, rng)
    return QtCodeSpec.one_gen(field, m, lam, g11, g12)


def random_standard_pair(field: Field, m: int, lam: int, rng: random.Random):
    """A random pair of valid standard-form specs over the same ambient.

    Half the draws are independent; the other half use a complementary
    factor partition (dim C + dim D = 2m with the crossed gcd/lcm
    conditions satisfied), which leaves the verdict hanging on the last
    determinant-style condition and yields a healthy rate of true LCPs.
    """
    if rng.random() < 0.5:
        return (random_standard_spec(field, m, lam, rng),
                random_standard_spec(field, m, lam, rng))
    factors = factor_xm_minus_lambda(field, m, lam).factors
    labels = [rng.randrange(4) for _ in factors]  # 0: both-of-C, 1/2: split, 3: both-of-D
    mask_g = sum(1 << i for i, l in enumerate(labels) if l == 0)
    mask_s1 = sum(1 << i for i, l in enumerate(labels) if l == 1)
    mask_s2 = sum(1 << i for i, l in enumerate(labels) if l == 2)
    mask_f = sum(1 << i for i, l in enumerate(labels) if l == 3)
    # f11 takes a random part of s2 (keeping gcd(f11, g11) = 1); f22 the rest
    mask_x = mask_s2 & rng.randrange(1 << len(factors))
    g11 = _mask_product(factors, mask_g | mask_s1)
    g22 = _mask_product(factors, mask_g | mask_s2)
    f11 = _mask_product(factors, mask_f | mask_x)
    f22 = _mask_product(factors, mask_f | ((mask_s1 | mask_s2) ^ mask_x))
    c = QtCodeSpec.standard(field, m, lam, g11, _g12_for(g11, g22, rng), g22)
    d = QtCodeSpec.standard(field, m, lam, f11, _g12_for(f11, f22, rng), f22)
    return c, d


def random_one_gen_pair(field: Field, m: int, lam: int, rng: random.Random):
    return (random_one_gen_spec(field, m, lam, rng),
            random_one_gen_spec(field, m, lam, rng))


def iter_standard_specs(field: Field, m: int, lam: int, dim: int | None = None):
    """Exhaustively yield valid standard-form specs in canonical order.

    Ordering: factor-subset masks for g11 then g22 (ascending), then the
    g12 cofactor by ascending coefficient codes.  The stream can be huge;
    callers are expected to cap it with a budget.
    """
    factors = factor_xm_minus_lambda(field, m, lam).factors
    t = len(factors)
    q = field.order
    for mask1 in range(1 << t):
        g11 = _mask_product(factors, mask1)
        for mask2 in range(1 << t):
            g22 = _mask_product(factors, mask2)
            if dim is not None and \
                    2 * m - int(g11.degree) - int(g22.degree) != dim:
                continue
            g = _mask_product(factors, mask1 & mask2)
            bound = int(g22.degree) - int(g.degree)
            if bound <= 0:
                yield QtCodeSpec.standard(field, m, lam, g11,
                                          Poly.zero(field), g22)
                continue
            for code in range(q**bound):
                r = Poly(field, _digits(code, q, bound))
                yield QtCodeSpec.standard(field, m, lam, g11, g * r, g22)


def _digits(code: int, q: int, width: int):
    out = []
    for _ in range(width):
        code, rem = divmod(code, q)
        out.append(rem)
    return out
