"""Exact arithmetic in prime fields F_p and extension fields F_{p^k}.

An element of F_{p^k} is stored as an integer code in [0, p^k): the base-p
digits of the code are the coefficients of 1, w, ..., w^{k-1}, where w is
the image of the generator in F_p[w]/(modulus).  Codes 0 and 1 are always
the additive and multiplicative identities.

Element text syntax (used verbatim by the CLI):

* an integer, optionally negative, reduced mod p ("2", "-1");
* a pure power of the generator "w^j" (requires w to generate the
  multiplicative group, validated once per field);
* an additive form combining integer and generator terms, e.g.
  "2*w+1", "w^2+w", "1+w^2".

Fields are small by design (order capped at 2**20); everything is computed
with dense coefficient vectors and modular reduction, no discrete-log
tables.  Values are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import re

import numpy as np

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    ElementSyntaxError,
    FieldMismatch,
    NonPrimeCharacteristic,
    NonPrimitiveGeneratorForPowerForm,
    ReducibleModulus,
    ValueOutOfField,
)

ORDER_CAP = 1 << 20
# q*q lookup tables are only materialized for fields at least this small.
TABLE_CAP = 512


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over the prime subfield, used only for field set-up.
# Polynomials are tuples of ints in [0, p), low degree first, no trailing 0s.

def _pp_trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _pp_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pp_trim(out)


def _pp_mod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while a and a[-1] == 0:
        a.pop()
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        for j, y in enumerate(b):
            a[shift + j] = (a[shift + j] - coef * y) % p
        a.pop()
    return _pp_trim(a)


def _pp_gcd(a, b, p):
    a, b = _pp_trim(a), _pp_trim(b)
    while b:
        a, b = b, _pp_mod(a, b, p)
    return a


def _pp_powmod(a, e, mod, p):
    result = (1,)
    base = _pp_mod(a, mod, p)
    while e:
        if e & 1:
            result = _pp_mod(_pp_mul(result, base, p), mod, p)
        base = _pp_mod(_pp_mul(base, base, p), mod, p)
        e >>= 1
    return result


def _pp_is_irreducible(f, p) -> bool:
    """Rabin test for f (monic, degree >= 1) over F_p."""
    k = len(f) - 1
    if k == 1:
        return True
    x = (0, 1)
    # x^(p^k) == x mod f
    if _pp_powmod(x, p**k, f, p) != x:
        return False
    # gcd(x^(p^(k/r)) - x, f) == 1 for every prime r | k
    kk, r = k, 2
    primes = set()
    while r * r <= kk:
        if kk % r == 0:
            primes.add(r)
            while kk % r == 0:
                kk //= r
        r += 1
    if kk > 1:
        primes.add(kk)
    for r in primes:
        h = _pp_powmod(x, p ** (k // r), f, p)
        diff = list(h) + [0] * (2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _pp_gcd(_pp_trim(diff), f, p)
        if len(g) != 1:
            return False
    return True


def default_modulus(p: int, k: int) -> tuple:
    """Lexicographically smallest monic irreducible of degree k over F_p.

    Coefficients are compared low degree first, so the result is
    deterministic across runs.
    """
    from itertools import product

    for lower in product(range(p), repeat=k):
        f = lower + (1,)
        if _pp_is_irreducible(f, p):
            return f
    raise ReducibleModulus(f"no irreducible of degree {k} over F_{p}")  # pragma: no cover


class Field:
    """The finite field F_{p^k}.

    Parameters: characteristic p (prime), extension degree k >= 1, and for
    k > 1 an optional monic irreducible modulus of degree k over F_p given
    as a coefficient sequence, low degree first.  When the modulus is
    omitted it defaults to the lexicographically smallest monic
    irreducible, so two calls with equal inputs produce structurally equal
    fields.
    """

    __slots__ = ("p", "k", "order", "modulus", "symbol", "_xpow",
                 "_tables", "_w_primitive")

    def __init__(self, p: int, k: int = 1, modulus=None, symbol: str = "w"):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        if k < 1:
            raise DegreeMismatch(f"extension degree must be >= 1, got {k}")
        if p**k > ORDER_CAP:
            raise DegreeMismatch(f"field order {p}^{k} exceeds cap {ORDER_CAP}")
        self.p = p
        self.k = k
        self.order = p**k
        self.symbol = symbol
        if k == 1:
            if modulus is not None:
                raise DegreeMismatch("prime field takes no modulus")
            self.modulus = None
        else:
            if modulus is None:
                mod = default_modulus(p, k)
            else:
                mod = tuple(int(c) % p for c in modulus)
                if len(mod) != k + 1 or mod[-1] != 1:
                    raise DegreeMismatch(
                        f"modulus must be monic of degree {k} over F_{p}")
                if not _pp_is_irreducible(mod, p):
                    raise ReducibleModulus(
                        f"modulus {list(mod)} is reducible over F_{p}")
            self.modulus = mod
        # reductions of w^k .. w^(2k-2), as digit tuples
        xpow = []
        if k > 1:
            cur = tuple((-c) % p for c in self.modulus[:k])  # w^k
            xpow.append(cur)
            for _ in range(k - 2):
                shifted = (0,) + cur[: k - 1]
                top = cur[k - 1]
                cur = tuple((shifted[i] + top * xpow[0][i]) % p for i in range(k))
                xpow.append(cur)
        self._xpow = tuple(xpow)
        self._tables = None
        self._w_primitive = None

    # -- structural identity -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.k, self.modulus, self.symbol) == \
            (other.p, other.k, other.modulus, other.symbol)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus, self.symbol))

    def __repr__(self):
        if self.k == 1:
            return f"Field(GF({self.p}))"
        return f"Field(GF({self.p}^{self.k}), {self.symbol}: {list(self.modulus)})"

    # -- digit conversions ---------------------------------------------------

    def coeffs(self, a: int) -> tuple:
        """Base-p digits of a code: coefficients of 1, w, ..., w^(k-1)."""
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def from_coeffs(self, cs) -> int:
        code = 0
        for c in reversed(list(cs)):
            code = code * self.p + (int(c) % self.p)
        return code

    # -- arithmetic on integer codes ------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        code, mult = 0, 1
        for _ in range(self.k):
            code += (a % p + b % p) % p * mult
            a //= p
            b //= p
            mult *= p
        return code

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        code, mult = 0, 1
        for _ in range(self.k):
            code += (-(a % p)) % p * mult
            a //= p
            mult *= p
        return code

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        p, k = self.p, self.k
        da, db = self.coeffs(a), self.coeffs(b)
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] += x * y
        out = [c % p for c in conv[:k]]
        for i in range(k, 2 * k - 1):
            c = conv[i] % p
            if c:
                red = self._xpow[i - k]
                for t in range(k):
                    out[t] = (out[t] + c * red[t]) % p
        return self.from_coeffs(out)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    # -- lookup tables for vectorized linear algebra and the kernels ----------

    @property
    def tables(self):
        """(add, sub, mul, inv, neg) numpy lookup tables, or None if q > cap."""
        if self.order > TABLE_CAP:
            return None
        if self._tables is None:
            q = self.order
            add = np.empty((q, q), dtype=np.int32)
            mul = np.empty((q, q), dtype=np.int32)
            for a in range(q):
                for b in range(a, q):
                    s = self.add(a, b)
                    m = self.mul(a, b)
                    add[a, b] = add[b, a] = s
                    mul[a, b] = mul[b, a] = m
            neg = np.array([self.neg(a) for a in range(q)], dtype=np.int32)
            sub = add[:, neg]
            inv = np.zeros(q, dtype=np.int32)
            for a in range(1, q):
                inv[a] = self.inv(a)
            self._tables = (add, sub, mul, inv, neg)
        return self._tables

    # -- elements --------------------------------------------------------------

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def gen(self) -> "FieldElement":
        """The generator w (only defined for extension fields)."""
        if self.k == 1:
            raise ValueOutOfField(f"prime field F_{self.p} has no generator symbol")
        return FieldElement(self, self.p)

    def elem(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("element belongs to a different field")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise ValueOutOfField(f"code {value} outside [0, {self.order})")
            return FieldElement(self, value)
        raise ElementSyntaxError(f"cannot build an element from {value!r}")

    def elements(self):
        return (FieldElement(self, c) for c in range(self.order))

    # -- text syntax -------------------------------------------------------------

    def w_is_primitive(self) -> bool:
        """Whether the generator w has multiplicative order q - 1 (cached)."""
        if self.k == 1:
            return False
        if self._w_primitive is None:
            w, acc, order = self.p, self.p, 1
            while acc != 1:
                acc = self.mul(acc, w)
                order += 1
            self._w_primitive = order == self.order - 1
        return self._w_primitive

    _POWER_RE = re.compile(r"^(\w+)\^(\d+)$")
    _TERM_RE = re.compile(r"^(?:(\d+)\*?)?(\w+)(?:\^(\d+))?$")

    def parse(self, text: str) -> "FieldElement":
        s = text.replace(" ", "")
        if not s:
            raise ElementSyntaxError("empty element token")
        m = self._POWER_RE.match(s)
        if m and m.group(1) == self.symbol:
            # pure power form: demands a primitive generator
            if self.k == 1:
                raise ValueOutOfField(
                    f"prime field F_{self.p} has no generator {self.symbol!r}")
            if not self.w_is_primitive():
                raise NonPrimitiveGeneratorForPowerForm(
                    f"{self.symbol} does not generate F_{self.order}^*")
            return FieldElement(self, self.pow(self.p, int(m.group(2))))
        # additive form: signed terms in the generator and integers
        code = 0
        for sign, term in _split_terms(s):
            value = self._parse_term(term)
            code = self.add(code, value if sign > 0 else self.neg(value))
        return FieldElement(self, code)

    def _parse_term(self, term: str) -> int:
        if not term:
            raise ElementSyntaxError("empty term in element")
        if term.isdigit():
            return int(term) % self.p
        m = self._TERM_RE.match(term)
        if not m or m.group(2) != self.symbol:
            raise ElementSyntaxError(f"bad element term {term!r}")
        if self.k == 1:
            raise ValueOutOfField(
                f"prime field F_{self.p} has no generator {self.symbol!r}")
        coef = int(m.group(1)) % self.p if m.group(1) else 1
        exp = int(m.group(3)) if m.group(3) else 1
        return self.mul(coef, self.pow(self.p, exp))

    def format(self, a: int) -> str:
        if a == 0:
            return "0"
        if self.k == 1:
            return str(a)
        parts = []
        digits = self.coeffs(a)
        for j in range(self.k - 1, -1, -1):
            c = digits[j]
            if not c:
                continue
            if j == 0:
                parts.append(str(c))
            else:
                wpart = self.symbol if j == 1 else f"{self.symbol}^{j}"
                parts.append(wpart if c == 1 else f"{c}*{wpart}")
        return "+".join(parts)


def _split_terms(s: str):
    """Split '2*w+1-w^2' into signed terms [(+1,'2*w'), (+1,'1'), (-1,'w^2')]."""
    terms = []
    sign, cur = 1, []
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0:
            terms.append((sign, "".join(cur)))
            sign, cur = (1 if ch == "+" else -1), []
        elif ch == "+" and i == 0:
            continue
        elif ch == "-" and i == 0:
            sign = -1
        else:
            cur.append(ch)
    terms.append((sign, "".join(cur)))
    return terms


class FieldElement:
    """An immutable element of a :class:`Field`, identified by its code."""

    __slots__ = ("field", "code")

    def __init__(self, field: Field, code: int):
        self.field = field
        self.code = code

    @property
    def coeffs(self) -> tuple:
        return self.field.coeffs(self.code)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(
                    f"cannot mix elements of {self.field} and {other.field}")
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        c = self._other(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._other(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.code, c))

    def __rsub__(self, other):
        c = self._other(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(c, self.code))

    def __mul__(self, other):
        c = self._other(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._other(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.code, c))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.code))

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.code))

    def __repr__(self):
        return self.field.format(self.code)


def frobenius_fixed(field: Field) -> bool:
    """Exhaustively check (a+b)^p == a^p + b^p; used by the test suite."""
    p = field.p
    for a in range(field.order):
        for b in range(field.order):
            lhs = field.pow(field.add(a, b), p)
            rhs = field.add(field.pow(a, p), field.pow(b, p))
            if lhs != rhs:
                return False
    return True


def multiplicative_group_is_cyclic(field: Field) -> bool:
    """Exhaustively verify F_q^* is cyclic of order q-1 (small fields only)."""
    q = field.order
    for a in range(1, q):
        acc, order = a, 1
        while acc != 1:
            acc = field.mul(acc, a)
            order += 1
            if order > q:  # pragma: no cover
                return False
        if order == q - 1:
            return True
    return q == 2  # F_2^* = {1} is trivially cyclic
