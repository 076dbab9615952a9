"""Independent brute-force oracles used to freeze expected test values.

Everything here is deliberately written from scratch against the raw
definitions (no calls into the package's algorithms under test), so each
oracle can certify the corresponding fast path.
"""

from __future__ import annotations

import itertools

import numpy as np


# --- tiny standalone GF(4) built by digit convolution mod x^2 + x + 1 ------

def gf4_mul(a: int, b: int) -> int:
    """Multiply F_4 codes (base-2 digits = coeffs of 1, w) the slow way."""
    da = (a & 1, a >> 1)
    db = (b & 1, b >> 1)
    conv = [0, 0, 0]
    for i in range(2):
        for j in range(2):
            conv[i + j] ^= da[i] & db[j]
    # w^2 = w + 1
    c0 = conv[0] ^ conv[2]
    c1 = conv[1] ^ conv[2]
    return c0 | (c1 << 1)


# --- polynomial helpers over an arbitrary Field, definition-level only ------

def horner_eval(field, coeffs, x: int) -> int:
    acc = 0
    for c in reversed(list(coeffs)):
        acc = field.add(field.mul(acc, x), c)
    return acc


def poly_mul_codes(field, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(x, y))
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_mod_codes(field, a, b):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    inv_lead = field.inv(b[-1])
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        coef = field.mul(a[-1], inv_lead)
        shift = len(a) - 1 - db
        for j, y in enumerate(b):
            a[shift + j] = field.sub(a[shift + j], field.mul(coef, y))
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def monic_polys(field, degree: int):
    """All monic polynomials of the given degree, as coefficient code lists."""
    for lower in itertools.product(range(field.order), repeat=degree):
        yield list(lower) + [1]


def trial_division_factor(field, coeffs):
    """Complete factorization into monic irreducibles by trial division."""
    remaining = list(coeffs)
    lead_inv = field.inv(remaining[-1])
    remaining = [field.mul(lead_inv, c) for c in remaining]
    factors = []
    d = 1
    while len(remaining) - 1 > 0:
        if len(remaining) - 1 < 2 * d:
            factors.append(tuple(remaining))
            break
        hit = None
        for cand in monic_polys(field, d):
            if not poly_mod_codes(field, remaining, cand):
                hit = cand
                break
        if hit is None:
            d += 1
            continue
        factors.append(tuple(hit))
        remaining = _exact_div(field, remaining, hit)
    return sorted(factors, key=lambda f: (len(f), f))


def _exact_div(field, a, b):
    a = list(a)
    db = len(b) - 1
    inv_lead = field.inv(b[-1])
    quot = [0] * (len(a) - db)
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        coef = field.mul(a[-1], inv_lead)
        shift = len(a) - 1 - db
        quot[shift] = coef
        for j, y in enumerate(b):
            a[shift + j] = field.sub(a[shift + j], field.mul(coef, y))
        a.pop()
    assert not any(a), "division was not exact"
    while quot and quot[-1] == 0:
        quot.pop()
    return quot


def is_irreducible_by_trial_division(field, coeffs) -> bool:
    deg = len(coeffs) - 1
    if deg <= 0:
        return False
    for d in range(1, deg // 2 + 1):
        for cand in monic_polys(field, d):
            if not poly_mod_codes(field, coeffs, cand):
                return False
    return True


# --- rank by an independent elimination (row echelon, no normalization) -----

def rank_oracle(field, rows) -> int:
    M = [list(int(x) for x in row) for row in rows]
    if not M:
        return 0
    ncols = len(M[0])
    rank = 0
    col = 0
    while col < ncols and rank < len(M):
        pivot = None
        for r in range(rank, len(M)):
            if M[r][col]:
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        inv = field.inv(M[rank][col])
        for r in range(rank + 1, len(M)):
            if M[r][col]:
                fac = field.mul(M[r][col], inv)
                M[r] = [field.sub(M[r][j], field.mul(fac, M[rank][j]))
                        for j in range(ncols)]
        rank += 1
        col += 1
    return rank


# --- minimum distance by raw message enumeration ----------------------------

def min_distance_oracle(field, gen_rows) -> int:
    """Walk every nonzero message u and take the lightest u @ G."""
    G = [list(int(x) for x in row) for row in gen_rows]
    k = len(G)
    n = len(G[0])
    best = n + 1
    for msg in itertools.product(range(field.order), repeat=k):
        if not any(msg):
            continue
        cw = [0] * n
        for u, row in zip(msg, G):
            if u:
                for j in range(n):
                    cw[j] = field.add(cw[j], field.mul(u, row[j]))
        w = sum(1 for x in cw if x)
        best = min(best, w)
    return best


def matmul_oracle(field, A, B):
    """Plain triple-loop matrix product over the field."""
    rows, inner, cols = len(A), len(B), len(B[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for j in range(cols):
            acc = 0
            for t in range(inner):
                acc = field.add(acc, field.mul(int(A[i][t]), int(B[t][j])))
            out[i][j] = acc
    return out


def scramble_rows(field, mat, rng):
    """Random invertible row operations: shuffle plus row additions."""
    data = [list(int(x) for x in row) for row in mat.data]
    rng.shuffle(data)
    k = len(data)
    for _ in range(2 * k):
        i, j = rng.randrange(k), rng.randrange(k)
        if i == j:
            continue
        c = rng.randrange(1, field.order)
        data[i] = [field.add(a, field.mul(c, b)) for a, b in zip(data[i], data[j])]
    return np.array(data, dtype=np.int32).reshape(k, -1)
