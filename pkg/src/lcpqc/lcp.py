"""Polynomial characterizations of linear complementary pairs (LCP).

A pair (C, D) of length-2m codes is an LCP when C + D = F_q^(2m) with
trivial intersection.  For index-2 quasi-cyclic / quasi-twisted codes this
is decidable from the generator polynomials alone:

* two-generator engine: four gcd/lcm conditions named I-IV;
* one-generator engine: three gcd conditions named A-C;
* double-circulant corollary: the single condition
  gcd(a - b, x^m - lambda) = 1 for C = <(1, a)>, D = <(1, b)>;
* constituent engine: factor x^m - lambda and test each projected pair of
  2x2 matrices over the quotient fields.

All engines return an :class:`LcpReport`; the linear-algebra ground truth
lives in :mod:`lcpqc.oracle` and never looks at polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import poly as P
from .errors import DegreeTooLarge, InvalidStandardForm, NotDivisor
from .ff import Field
from .matrix import GenMatrix
from .poly import Poly, factor_xm_minus_lambda, quotient_field, reduce_mod
from .qtcode import (
    QtCodeSpec,
    _check_ambient,
    to_standard,
    validate_standard_form,
)


@dataclass(frozen=True)
class LcpReport:
    """Verdict of one engine, with the full per-condition profile.

    Every condition is evaluated even after one fails, so reports show the
    complete failure profile.  For a failed verdict, ``witness`` is the
    first irreducible factor of x^m - lambda (in canonical order) that
    violates a failed condition.
    """

    verdict: bool
    engine: str
    conditions: dict
    witness: Poly | None
    dims: tuple  # (dim C, dim D, 2m)
    lam: int
    field: Field
    details: dict = dc_field(default_factory=dict)

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "engine": self.engine,
            "conditions": dict(self.conditions),
            "witness": self.witness.to_text() if self.witness else None,
            "dims": list(self.dims),
            "lambda": self.field.format(self.lam),
            "details": dict(self.details),
        }


def _first_violating_factor(factors, predicates):
    """First factor (canonical order) satisfying any of the predicates."""
    for fi in factors:
        for pred in predicates:
            if pred(fi):
                return fi
    return None


def lcp_two_generator(c_spec: QtCodeSpec, d_spec: QtCodeSpec) -> LcpReport:
    """Decide LCP for two standard-form codes via conditions I-IV.

    With g = gcd(g11, g22), f = gcd(f11, f22), g22' = g22/g, f22' = f22/f:

        I    gcd(f11, g11) = 1
        II   g = (x^m - lambda) / lcm(f11, f22)
        III  f = (x^m - lambda) / lcm(g11, g22)
        IV   gcd(g22', f22', g11*f12 - g12*f11) = 1

    All gcds are monic and the II/III equalities compare monic forms.
    """
    _check_ambient(c_spec, d_spec)
    c_spec, d_spec = to_standard(c_spec), to_standard(d_spec)
    for spec in (c_spec, d_spec):
        if not validate_standard_form(spec).passed:
            raise InvalidStandardForm("spec fails the standard-form conditions")
    mod = c_spec.modulus_poly()
    g11, g12, g22 = c_spec.g11, c_spec.g12, c_spec.g22
    f11, f12, f22 = d_spec.g11, d_spec.g12, d_spec.g22

    g = P.gcd(g11, g22)
    f = P.gcd(f11, f22)
    g22p = (g22 // g).monic()
    f22p = (f22 // f).monic()
    rhs_ii = (mod // P.lcm(f11, f22)).monic()
    rhs_iii = (mod // P.lcm(g11, g22)).monic()
    combo = g11 * f12 - g12 * f11

    cond = {
        "I": P.gcd(f11, g11).is_one(),
        "II": g == rhs_ii,
        "III": f == rhs_iii,
        "IV": P.gcd(P.gcd(g22p, f22p), combo).is_one(),
    }
    verdict = all(cond.values())
    witness = None
    if not verdict:
        factors = factor_xm_minus_lambda(c_spec.field, c_spec.m, c_spec.lam).factors
        witness = _first_violating_factor(factors, [
            lambda fi: not cond["I"] and fi.divides(f11) and fi.divides(g11),
            lambda fi: not cond["II"] and fi.divides(g) != fi.divides(rhs_ii),
            lambda fi: not cond["III"] and fi.divides(f) != fi.divides(rhs_iii),
            lambda fi: (not cond["IV"] and fi.divides(g22p)
                        and fi.divides(f22p) and fi.divides(combo)),
        ])
    m = c_spec.m
    dims = (c_spec.dimension(), d_spec.dimension(), 2 * m)
    details = {"g": g.to_text(), "f": f.to_text(),
               "g22_prime": g22p.to_text(), "f22_prime": f22p.to_text()}
    return LcpReport(verdict, "two-gen-characterization", cond, witness,
                     dims, c_spec.lam, c_spec.field, details)


def lcp_one_generator(c_spec: QtCodeSpec, d_spec: QtCodeSpec) -> LcpReport:
    """Decide LCP for one-generator codes C = <(g11, g12)>, D = <(f11, f12)>.

        A    gcd(g11, g12) = 1
        B    gcd(f11, f12) = 1
        C    gcd(x^m - lambda, g11*f12 - g12*f11) = 1

    Equivalent to :func:`lcp_two_generator` on the normalized forms.
    """
    _check_ambient(c_spec, d_spec)
    if c_spec.is_standard or d_spec.is_standard:
        raise InvalidStandardForm("one-generator engine needs one-generator specs")
    mod = c_spec.modulus_poly()
    for spec in (c_spec, d_spec):
        if not spec.g11.divides(mod):
            raise NotDivisor("g11 must divide x^m - lambda")
    g11, g12 = c_spec.g11, c_spec.g12
    f11, f12 = d_spec.g11, d_spec.g12
    ga = P.gcd(g11, g12)
    gb = P.gcd(f11, f12)
    combo = g11 * f12 - g12 * f11
    gc = P.gcd(mod, combo)
    cond = {"A": ga.is_one(), "B": gb.is_one(), "C": gc.is_one()}
    verdict = all(cond.values())
    witness = None
    if not verdict:
        factors = factor_xm_minus_lambda(c_spec.field, c_spec.m, c_spec.lam).factors
        witness = _first_violating_factor(factors, [
            lambda fi: not cond["A"] and fi.divides(ga),
            lambda fi: not cond["B"] and fi.divides(gb),
            lambda fi: not cond["C"] and fi.divides(gc),
        ])
    m = c_spec.m
    dims = (m - int(ga.degree), m - int(gb.degree), 2 * m)
    return LcpReport(verdict, "one-gen-characterization", cond, witness,
                     dims, c_spec.lam, c_spec.field,
                     {"gcd_c": ga.to_text(), "gcd_d": gb.to_text()})


def lcp_dc(a: Poly, b: Poly, m: int, lam) -> LcpReport:
    """LCP of the double-circulant codes <(1, a)> and <(1, b)>.

    Holds iff gcd(a - b, x^m - lambda) = 1; agrees with the one-generator
    engine on the specs (1, a), (1, b).
    """
    field = a.field
    c_spec = QtCodeSpec.one_gen(field, m, lam, Poly.one(field), a)
    d_spec = QtCodeSpec.one_gen(field, m, lam, Poly.one(field), b)
    if a.degree >= m or b.degree >= m:
        raise DegreeTooLarge("DC generators must have degree < m")
    mod = c_spec.modulus_poly()
    g = P.gcd(a - b, mod)
    verdict = g.is_one()
    witness = None
    if not verdict:
        factors = factor_xm_minus_lambda(field, m, c_spec.lam).factors
        witness = _first_violating_factor(factors, [lambda fi: fi.divides(g)])
    return LcpReport(verdict, "dc-corollary", {"C": verdict}, witness,
                     (m, m, 2 * m), c_spec.lam, field,
                     {"gcd": g.to_text()})


# ---------------------------------------------------------------------------
# constituent decomposition


@dataclass(frozen=True)
class Constituent:
    """Projection of one code into F_q[x]/(f_i): an upper-triangular 2x2."""

    index: int
    factor: Poly
    subfield: Field
    gmat: GenMatrix


@dataclass(frozen=True)
class ConstituentPair:
    index: int
    factor: Poly
    subfield: Field
    g_i: GenMatrix
    h_i: GenMatrix
    lcp_i: bool


def constituents(spec: QtCodeSpec) -> list:
    """Per-factor 2x2 matrices [[g11, g12], [0, g22]] over F_q[x]/(f_i).

    The factor list is the canonical factorization of x^m - lambda, so
    constituent indices are stable.  Summing deg(f_i) * rank(G_i) over all
    factors recovers the code dimension.
    """
    spec = to_standard(spec)
    if not validate_standard_form(spec).passed:
        raise InvalidStandardForm("spec fails the standard-form conditions")
    fact = factor_xm_minus_lambda(spec.field, spec.m, spec.lam)
    out = []
    for i, fi in enumerate(fact.factors, start=1):
        sub = quotient_field(fi)
        g11 = reduce_mod(spec.g11, fi).code
        g12 = reduce_mod(spec.g12, fi).code
        g22 = reduce_mod(spec.g22, fi).code
        out.append(Constituent(i, fi, sub,
                               GenMatrix.from_rows(sub, [[g11, g12], [0, g22]])))
    return out


def constituent_pairs(c_spec: QtCodeSpec, d_spec: QtCodeSpec) -> list:
    """Pair up the constituents of C and D and test each for LCP."""
    _check_ambient(c_spec, d_spec)
    pairs = []
    for cc, dd in zip(constituents(c_spec), constituents(d_spec)):
        rank_g = cc.gmat.rank()
        rank_h = dd.gmat.rank()
        full = cc.gmat.stack(dd.gmat).rank()
        lcp_i = rank_g + rank_h == 2 and full == 2
        pairs.append(ConstituentPair(cc.index, cc.factor, cc.subfield,
                                     cc.gmat, dd.gmat, lcp_i))
    return pairs


def lcp_via_constituents(c_spec: QtCodeSpec, d_spec: QtCodeSpec) -> LcpReport:
    """LCP holds iff every constituent pair is an LCP over its subfield."""
    pairs = constituent_pairs(c_spec, d_spec)
    cond = {str(p.index): p.lcp_i for p in pairs}
    verdict = all(cond.values())
    witness = None
    for p in pairs:
        if not p.lcp_i:
            witness = p.factor
            break
    dim_c = sum(int(p.factor.degree) * p.g_i.rank() for p in pairs)
    dim_d = sum(int(p.factor.degree) * p.h_i.rank() for p in pairs)
    m = c_spec.m
    return LcpReport(verdict, "constituents", cond, witness,
                     (dim_c, dim_d, 2 * m), c_spec.lam, c_spec.field)
