"""Univariate polynomial arithmetic over a finite field.

Polynomials are immutable: a tuple of element codes, low degree first,
with no trailing zeros.  The zero polynomial is the empty tuple; its
degree is the sentinel NEG_INF, which compares below every integer, so
deg(fg) = deg f + deg g holds for nonzero f, g, and degree comparisons in
validation code need no special cases.

The module also factors x^m - lambda into distinct monic irreducibles
(guaranteed square-free when gcd(m, q) = 1), builds the quotient fields
F_q[x]/(f_i), and reduces polynomials into them.  Quotient fields over an
extension base (e.g. constituents over F_4 or F_9) are flattened to fresh
fields over the prime subfield via a deterministic generator search, so
every field element in the package has the same uniform representation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    DivisionByZeroPoly,
    FieldMismatch,
    NonCoprimeParameters,
    ReducibleModulus,
    ZeroLambda,
)
from .ff import Field, FieldElement
from .matrix import GenMatrix

NEG_INF = float("-inf")

# fixed seed for the equal-degree splitting; determinism of the public
# result comes from the canonical factor ordering, not the splitting order.
_EDF_SEED = 0x1CEB00DA


class Poly:
    """A dense polynomial over a :class:`Field`."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not 0 <= c < field.order:
                raise ValueError(f"coefficient code {c} outside field of order {field.order}")
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: Field, degree: int, coef: int = 1) -> "Poly":
        return cls(field, (0,) * degree + (coef,))

    @classmethod
    def constant(cls, field: Field, coef: int) -> "Poly":
        return cls(field, (coef,))

    @classmethod
    def from_elements(cls, elems) -> "Poly":
        elems = list(elems)
        if not elems:
            raise ValueError("from_elements needs at least one element")
        field = elems[0].field
        return cls(field, [e.code for e in elems])

    @classmethod
    def from_text(cls, field: Field, text: str) -> "Poly":
        """Parse the CLI-wide format: comma-separated element tokens, low degree first."""
        tokens = [t for t in text.split(",")]
        return cls(field, [field.parse(t).code for t in tokens])

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        return ",".join(self.field.format(c) for c in self.coeffs)

    # -- basic queries ----------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def lc(self) -> int:
        """Leading coefficient code; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Poly({self.pretty()})"

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        f = self.field
        parts = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            cs = f.format(c)
            if "+" in cs or "-" in cs:
                cs = f"({cs})"
            if j == 0:
                parts.append(cs)
            else:
                xp = "x" if j == 1 else f"x^{j}"
                parts.append(xp if cs == "1" else f"{cs}{xp}")
        return " + ".join(parts)

    # -- arithmetic ---------------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.field != other.field:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(f, out)

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(f)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = f.add(out[i + j], f.mul(x, y))
        return Poly(f, out)

    def scale(self, c: int) -> "Poly":
        f = self.field
        return Poly(f, [f.mul(c, x) for x in self.coeffs])

    def __divmod__(self, other: "Poly"):
        self._check(other)
        if other.is_zero():
            raise DivisionByZeroPoly("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = f.inv(other.lc())
        quot = [0] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db:
            if rem[-1] == 0:
                rem.pop()
                continue
            coef = f.mul(rem[-1], inv_lead)
            shift = len(rem) - 1 - db
            quot[shift] = coef
            for j, y in enumerate(other.coeffs):
                rem[shift + j] = f.sub(rem[shift + j], f.mul(coef, y))
            rem.pop()
        return Poly(f, quot), Poly(f, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        """Whether self divides other; the zero polynomial divides only itself."""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def monic(self) -> "Poly":
        if self.is_zero() or self.lc() == 1:
            return self
        return self.scale(self.field.inv(self.lc()))

    def evaluate(self, x: int) -> int:
        """Horner evaluation at the element with code x."""
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def pow_mod(self, e: int, mod: "Poly") -> "Poly":
        result = Poly.one(self.field)
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result


def divrem(a: Poly, b: Poly):
    """Quotient and remainder with deg r < deg b."""
    return divmod(a, b)


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def ext_gcd(a: Poly, b: Poly):
    """(g, u, v) with u*a + v*b = g, g the monic gcd."""
    f = a.field
    r0, r1 = a, b
    s0, s1 = Poly.one(f), Poly.zero(f)
    t0, t1 = Poly.zero(f), Poly.one(f)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lead_inv = f.inv(r0.lc())
    return r0.monic(), s0.scale(lead_inv), t0.scale(lead_inv)


def lcm(a: Poly, b: Poly) -> Poly:
    """Monic lcm; lcm(a, 0) = 0."""
    a._check(b)
    if a.is_zero() or b.is_zero():
        return Poly.zero(a.field)
    return ((a * b) // gcd(a, b)).monic()


def xm_minus_lambda(field: Field, m: int, lam: int) -> Poly:
    return Poly(field, (field.neg(lam),) + (0,) * (m - 1) + (1,))


def is_irreducible(f: Poly) -> bool:
    """Rabin irreducibility test over the coefficient field."""
    d = f.degree
    if d is NEG_INF or d == 0:
        return False
    if d == 1:
        return True
    q = f.field.order
    x = Poly.x(f.field)
    if x.pow_mod(q**d, f) != x % f:
        return False
    dd, r = d, 2
    primes = set()
    while r * r <= dd:
        if dd % r == 0:
            primes.add(r)
            while dd % r == 0:
                dd //= r
        r += 1
    if dd > 1:
        primes.add(dd)
    for r in primes:
        h = x.pow_mod(q ** (d // r), f) - x
        if not gcd(h, f).is_one():
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """x^m - lambda written as a product of distinct monic irreducibles.

    Factors are ordered canonically (by degree, then lexicographically on
    coefficients, low degree first); this ordering defines the constituent
    indices used throughout the package.
    """

    modulus: Poly
    factors: tuple
    m: int
    lam: int

    def __len__(self):
        return len(self.factors)


def factor_xm_minus_lambda(field: Field, m: int, lam) -> Factorization:
    """Factor x^m - lambda into distinct monic irreducibles over the field.

    Requires gcd(m, q) = 1 (so the polynomial is square-free) and a nonzero
    lambda.  Distinct-degree splitting followed by seeded equal-degree
    splitting; results are cached per (field, m, lambda).
    """
    if isinstance(lam, FieldElement):
        if lam.field != field:
            raise FieldMismatch("lambda from a different field")
        lam = lam.code
    lam = int(lam)
    if lam == 0:
        raise ZeroLambda("lambda must be a unit")
    if m < 1 or m % field.p == 0:
        raise NonCoprimeParameters(f"m={m} shares a factor with q={field.order}")
    return _factor_cached(field, m, lam)


@lru_cache(maxsize=None)
def _factor_cached(field: Field, m: int, lam: int) -> Factorization:
    target = xm_minus_lambda(field, m, lam)
    rng = random.Random(_EDF_SEED)
    factors = []
    for g, d in _distinct_degree_split(target):
        factors.extend(_equal_degree_split(g, d, rng))
    factors.sort(key=lambda f: (f.degree, f.coeffs))
    fact = Factorization(target, tuple(factors), m, lam)
    # reconstruction check: cheap, and catches splitting bugs immediately
    prod = Poly.one(field)
    for f in fact.factors:
        prod = prod * f
    if prod != target:
        raise AssertionError("factor product does not reconstruct x^m - lambda")
    return fact


def _distinct_degree_split(f: Poly):
    """Yield (product-of-irreducibles, degree) pairs for square-free monic f."""
    q = f.field.order
    x = Poly.x(f.field)
    h = x
    d = 0
    rest = f.monic()
    while rest.degree > 0 and 2 * (d + 1) <= rest.degree:
        d += 1
        h = h.pow_mod(q, rest)
        g = gcd(h - x, rest)
        if not g.is_one():
            yield g, d
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        yield rest, int(rest.degree)


def _equal_degree_split(g: Poly, d: int, rng: random.Random):
    """Cantor-Zassenhaus split of g into its degree-d irreducible factors."""
    field = g.field
    if g.degree == d:
        return [g.monic()]
    q = field.order
    while True:
        h = Poly(field, [rng.randrange(q) for _ in range(g.degree)])
        if h.is_zero():
            continue
        if field.p == 2:
            # additive trace map from F_{q^d} down to F_2
            t = h % g
            acc = t
            e_bits = field.k * d
            for _ in range(e_bits - 1):
                t = (t * t) % g
                acc = acc + t
            probe = acc
        else:
            probe = h.pow_mod((q**d - 1) // 2, g) - Poly.one(field)
        w = gcd(probe, g)
        if not w.is_one() and w.degree < g.degree:
            return _equal_degree_split(w, d, rng) + \
                _equal_degree_split(g // w, d, rng)


# ---------------------------------------------------------------------------
# quotient fields F_q[x]/(f) and the reduction map into them


def quotient_field(f: Poly) -> Field:
    """The field F_q[x]/(f) for monic irreducible f over F_q.

    For a linear f this is the base field itself; for prime base fields it
    is a plain extension with modulus f; otherwise the tower is flattened
    to a single extension of the prime subfield.
    """
    return _quotient_info(f)[0]


def reduce_mod(a: Poly, f: Poly) -> FieldElement:
    """The image of a in F_q[x]/(f); a ring homomorphism for fixed f."""
    a._check(f)
    qf, embed = _quotient_info(f)
    return FieldElement(qf, embed(a % f))


@lru_cache(maxsize=None)
def _quotient_info(f: Poly):
    base = f.field
    f = f.monic()
    d = f.degree
    if d is NEG_INF or d == 0:
        raise ReducibleModulus("quotient modulus must have degree >= 1")
    if not is_irreducible(f):
        raise ReducibleModulus(f"{f.pretty()} is reducible over {base}")
    if d == 1:
        root = base.neg(f.coeffs[0])

        def embed_linear(r: Poly) -> int:
            return r.evaluate(root)

        return base, embed_linear
    if base.k == 1:
        qf = Field(base.p, d, modulus=f.coeffs)

        def embed_prime(r: Poly) -> int:
            return qf.from_coeffs(r.coeffs + (0,) * (d - len(r.coeffs)))

        return qf, embed_prime
    return _flatten_tower(f)


def _flatten_tower(f: Poly):
    """Express F_q[x]/(f) (q = p^k, deg f = d) as one extension of F_p.

    Finds the first element theta of the quotient, in canonical code order,
    whose powers span the quotient over F_p; its minimal polynomial becomes
    the modulus of the flat field, and reduction coordinates are obtained
    from the change-of-basis matrix.
    """
    base = f.field
    p, k, d = base.p, base.k, f.degree
    n = k * d
    prime = Field(p)

    def nat_coords(r: Poly):
        out = []
        for b in range(d):
            c = r.coeffs[b] if b < len(r.coeffs) else 0
            out.extend(base.coeffs(c))
        return out

    q = base.order
    for idx in range(q, q**d):
        theta = Poly(base, _digits(idx, q, d))
        powers = [Poly.one(base)]
        for _ in range(n):
            powers.append((powers[-1] * theta) % f)
        M = GenMatrix(prime, np.array([nat_coords(pw) for pw in powers[:n]],
                                      dtype=np.int32).T)
        rank, _, _ = M.rref()
        if rank < n:
            continue
        # minimal polynomial: theta^n = sum c_t theta^t
        sol = _solve(prime, M, nat_coords(powers[n]))
        mu = [prime.neg(c) for c in sol] + [1]
        flat = Field(p, n, modulus=mu)
        minv = _inverse(prime, M)

        def embed_flat(r: Poly, _minv=minv, _flat=flat, _nc=nat_coords):
            coords = np.asarray(_nc(r), dtype=np.int32)
            digits = _matvec(prime, _minv, coords)
            return _flat.from_coeffs(digits)

        return flat, embed_flat
    raise ReducibleModulus("no generator found for quotient field")  # pragma: no cover


def _digits(idx: int, q: int, d: int):
    out = []
    for _ in range(d):
        idx, r = divmod(idx, q)
        out.append(r)
    return out


def _solve(prime: Field, M: GenMatrix, rhs):
    """Solve M x = rhs for square invertible M over the prime field."""
    n = M.rows
    aug = GenMatrix(prime, np.hstack([M.data, np.asarray(rhs, dtype=np.int32).reshape(-1, 1)]))
    _, R, _ = aug.rref()
    return [int(R.data[i, n]) for i in range(n)]


def _inverse(prime: Field, M: GenMatrix):
    n = M.rows
    aug = GenMatrix(prime, np.hstack([M.data, np.eye(n, dtype=np.int32)]))
    rank, R, _ = aug.rref()
    if rank < n:
        raise RuntimeError("singular change-of-basis matrix")  # pragma: no cover
    return R.data[:, n:]


def _matvec(prime: Field, A, v):
    out = []
    for i in range(A.shape[0]):
        acc = 0
        for j in range(A.shape[1]):
            acc = prime.add(acc, prime.mul(int(A[i, j]), int(v[j])))
        out.append(acc)
    return out
