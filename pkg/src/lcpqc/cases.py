"""Bundled reference cases for the reproduce command.

Each case is an LCP pair with known parameters (n, k, d_lcp) plus the
best-known-distance value d_bklc for the same (n, k), kept as external
reference data.  Generator polynomials are stored verbatim in the
ascending-coefficient text format; coefficient tokens such as "1+w^2" are
reduced by the element parser, never rewritten in the fixture.

Some fixtures print g12 unreduced modulo g22 (or pair it with the
degenerate second row (0, x^m - lambda)).  Construction reduces g12 mod
g22, which leaves the row space untouched because (0, g22) is itself a
generator; everything else about the inputs is used exactly as stored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ff import Field
from .poly import Poly
from .qtcode import QtCodeSpec


@dataclass(frozen=True)
class ReproCase:
    case_id: str
    q: int
    ext_modulus: str | None  # coefficient text over F_p, low degree first
    m: int
    lam: str
    c_gens: tuple  # (g11, g12, g22) text
    d_gens: tuple
    expected_n: int
    expected_k: int
    expected_dlcp: int
    d_bklc: int


CASES = {
    "ex1": ReproCase(
        "ex1", 5, None, 8, "1",
        ("2,3,1", "4,4,1,4,4,1", "3,1,1,0,3,1,1"),
        ("3,1", "2,1,2,1", "2,4,3,1,2,4,3,1"),
        16, 8, 6, 7),
    "ex2": ReproCase(
        "ex2", 3, None, 4, "1",
        ("1,1", "1,1,1", "2,1,2,1"),
        ("2,1", "2,1,1", "1,1,1,1"),
        8, 4, 4, 4),
    "ex3": ReproCase(
        "ex3", 3, None, 5, "1",
        ("2,1", "2,2,1", "1,1,1,1,1"),
        ("1", "1,2,2,1", "-1,0,0,0,0,1"),
        10, 5, 5, 5),
    "table1-row1": ReproCase(
        "table1-row1", 4, None, 3, "1",
        ("w,1", "1+w^2,1", "w^2,w,1"),
        ("1", "1,w^2,w,w", "-1,0,0,1"),
        6, 3, 3, 4),
    "table1-row2": ReproCase(
        "table1-row2", 4, None, 5, "1",
        ("1,1", "0,w,w,1", "1,1,1,1,1"),
        ("1", "w,1,0,w,1", "-1,0,0,0,0,1"),
        10, 5, 5, 5),
    "table1-row3": ReproCase(
        "table1-row3", 4, None, 7, "1",
        ("1,1", "w,w^2,0,1", "1,0,1,1,1"),
        ("1,0,1,1", "1,0,1,1", "1,1,1,1,1,1,1"),
        14, 9, 4, 4),
    "qt1": ReproCase(
        "qt1", 5, None, 11, "2",
        ("2,1", "3,1,3,2,0,4,1", "4,3,1,2,4,3,1,2,4,3,1"),
        ("1", "1,2,1,0,2,4,2,1,2,1", "-2,0,0,0,0,0,0,0,0,0,0,1"),
        22, 11, 8, 8),
    "qt2": ReproCase(
        "qt2", 9, "2,2,1", 10, "w",
        ("w,2,1", "w^3,w^2,w^6,w^5,w^2,1", "2,w^3,w^5,w^3,w^7,w^2,w^3,1,1"),
        ("w,w^7,1", "0,w^3,w^7,1,w^6,w,w^7,1", "2,w^6,w,1,w,w^7,w^7,w^3,1"),
        20, 10, 8, 10),
    "qt3": ReproCase(
        "qt3", 9, "2,2,1", 10, "w",
        ("1", "w^2,0,w^5,w,1,1", "w^3,w^5,w^5,w,2,w^3,1"),
        ("w^2,1,w^5,w^7,1", "0,w^5,1,w^3,w^7,w^6,w^7,w^3,w^6",
         "w^5,0,0,0,0,0,0,0,0,0,1"),
        20, 14, 5, 6),
}

CASE_IDS = tuple(CASES)


def field_for_order(q: int, modulus_text: str | None = None,
                    symbol: str = "w") -> Field:
    """Build F_q from its order; q must be a prime power."""
    p, k = _prime_power(q)
    if k == 1:
        return Field(p)
    modulus = None
    if modulus_text:
        modulus = [int(t) % p for t in modulus_text.split(",")]
    return Field(p, k, modulus=modulus, symbol=symbol)


def _prime_power(q: int):
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    if q != 1:
        raise ValueError("field order must be a prime power")
    return p, k


def build_case(case: ReproCase):
    """Parse a case into (field, c_spec, d_spec), reducing g12 mod g22."""
    field = field_for_order(case.q, case.ext_modulus)
    lam = field.parse(case.lam).code

    def spec(texts):
        g11, g12, g22 = (Poly.from_text(field, t) for t in texts)
        return QtCodeSpec.standard(field, case.m, lam, g11, g12, g22).reduce_g12()

    return field, spec(case.c_gens), spec(case.d_gens)
