"""Index-2 quasi-cyclic and quasi-twisted codes from polynomial generators.

A code of length n = 2m over F_q is specified by its ambient (q, m, lambda)
and either

* a single generator (g11, g12) with g11 | x^m - lambda, or
* the standard two-row form {(g11, g12), (0, g22)} whose validity
  conditions are: g11 and g22 divide x^m - lambda, deg g12 < deg g22, and
  g11*g22 divides (x^m - lambda)*g12.

lambda = 1 gives quasi-cyclic codes; any unit lambda gives quasi-twisted
codes, and the two share one code path throughout.  Codewords correspond
to pairs (c0(x), c1(x)) of residues mod x^m - lambda, laid out in F_q^(2m)
by interleaving coefficients: coordinate 2j+b holds the x^j coefficient of
block b.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import poly as P
from .errors import (
    BudgetExceeded,
    FieldMismatch,
    InvalidStandardForm,
    MismatchedAmbient,
    NonCoprimeParameters,
    NotDivisor,
    RankDeficient,
    ZeroCode,
    ZeroLambda,
)
from .ff import Field, FieldElement
from .kernels import get_backend
from .matrix import GenMatrix
from .poly import Poly

# strategy switch and default work budget for exact distance computation
ENUM_LIMIT = 10**8
DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class QtCodeSpec:
    """Generators of an index-2 code; g22 is None for one-generator specs."""

    field: Field
    m: int
    lam: int
    g11: Poly
    g12: Poly
    g22: Poly | None = None

    def __post_init__(self):
        if self.m < 1 or self.m % self.field.p == 0:
            raise NonCoprimeParameters(
                f"m={self.m} must be coprime to q={self.field.order}")
        if not 0 < self.lam < self.field.order:
            raise ZeroLambda(f"lambda code {self.lam} is not a unit")
        for g in (self.g11, self.g12, self.g22):
            if g is not None and g.field != self.field:
                raise FieldMismatch("generator over a different field")

    @classmethod
    def standard(cls, field, m, lam, g11, g12, g22) -> "QtCodeSpec":
        return cls(field, m, _lam_code(field, lam), g11, g12, g22)

    @classmethod
    def one_gen(cls, field, m, lam, g11, g12) -> "QtCodeSpec":
        return cls(field, m, _lam_code(field, lam), g11, g12, None)

    @property
    def is_standard(self) -> bool:
        return self.g22 is not None

    @property
    def is_quasi_cyclic(self) -> bool:
        return self.lam == 1

    def modulus_poly(self) -> Poly:
        return P.xm_minus_lambda(self.field, self.m, self.lam)

    def reduce_g12(self) -> "QtCodeSpec":
        """Replace g12 by g12 mod g22 (same row space, since (0, g22) is a row)."""
        if not self.is_standard:
            return self
        return QtCodeSpec(self.field, self.m, self.lam,
                          self.g11, self.g12 % self.g22, self.g22)

    def dimension(self) -> int:
        """2m - deg g11 - deg g22 for a valid standard form."""
        spec = to_standard(self)
        return 2 * spec.m - int(spec.g11.degree) - int(spec.g22.degree)

    def generators_text(self) -> str:
        parts = [self.g11.to_text(), self.g12.to_text()]
        if self.g22 is not None:
            parts.append(self.g22.to_text())
        return ";".join(parts)


def _lam_code(field: Field, lam) -> int:
    if isinstance(lam, FieldElement):
        if lam.field != field:
            raise FieldMismatch("lambda from a different field")
        return lam.code
    if isinstance(lam, str):
        return field.parse(lam).code
    return int(lam)


@dataclass(frozen=True)
class ValidationReport:
    """Per-condition outcome of the standard-form check."""

    g11_divides: bool
    g22_divides: bool
    degree_ok: bool
    product_divides: bool
    gcd_form: bool  # gcd(g11, g22) | g12, the equivalent form when gcd(m,q)=1

    @property
    def passed(self) -> bool:
        return (self.g11_divides and self.g22_divides
                and self.degree_ok and self.product_divides)

    def to_dict(self):
        return {
            "g11_divides": self.g11_divides,
            "g22_divides": self.g22_divides,
            "degree_ok": self.degree_ok,
            "product_divides": self.product_divides,
            "gcd_form": self.gcd_form,
            "passed": self.passed,
        }


def validate_standard_form(spec: QtCodeSpec) -> ValidationReport:
    """Check the standard-form conditions, reporting each one separately."""
    if not spec.is_standard:
        raise InvalidStandardForm("spec is in one-generator form")
    mod = spec.modulus_poly()
    g11, g12, g22 = spec.g11, spec.g12, spec.g22
    return ValidationReport(
        g11_divides=g11.divides(mod),
        g22_divides=g22.divides(mod),
        degree_ok=g12.degree < g22.degree,
        product_divides=(g11 * g22).divides(mod * g12),
        gcd_form=P.gcd(g11, g22).divides(g12),
    )


def normalize_one_generator(spec: QtCodeSpec) -> QtCodeSpec:
    """Rewrite a one-generator spec in standard form (same code).

    With g = gcd(g11, g12): keeps g11, sets g22 = (x^m - lambda)/(g11/g)
    and reduces g12 mod g22.  The result satisfies the standard-form
    conditions with gcd(g11, g22) = g and lcm(g11, g22) = x^m - lambda.
    """
    if spec.is_standard:
        raise InvalidStandardForm("spec is already in standard form")
    mod = spec.modulus_poly()
    if not spec.g11.divides(mod):
        raise NotDivisor("g11 does not divide x^m - lambda")
    g = P.gcd(spec.g11, spec.g12)
    g11_prime = spec.g11 // g
    g22 = mod // g11_prime
    g12 = spec.g12 % g22
    return QtCodeSpec(spec.field, spec.m, spec.lam, spec.g11, g12, g22)


def to_standard(spec: QtCodeSpec) -> QtCodeSpec:
    return spec if spec.is_standard else normalize_one_generator(spec)


# ---------------------------------------------------------------------------
# expansion to generator matrices over F_q


def _xshift(block, field: Field, lam: int):
    """Multiply a length-m coefficient block by x, wrapping mod x^m - lambda."""
    return [field.mul(lam, block[-1])] + block[:-1]


def _blockify(p: Poly, mod: Poly, m: int):
    r = p % mod
    return list(r.coeffs) + [0] * (m - len(r.coeffs))


def _interleave(b0, b1):
    row = []
    for x, y in zip(b0, b1):
        row.append(x)
        row.append(y)
    return row


def generator_matrix(spec: QtCodeSpec, check: bool = True) -> GenMatrix:
    """Expand a spec to its (2m - deg g11 - deg g22) x 2m generator matrix.

    Rows are x^j * (g11, g12) for j < m - deg g11 followed by
    x^j * (0, g22) for j < m - deg g22; for a valid standard form these are
    linearly independent, so the rank equals the dimension formula.
    """
    spec = to_standard(spec)
    if check and not validate_standard_form(spec).passed:
        raise InvalidStandardForm(
            f"generators do not satisfy the standard-form conditions: "
            f"{validate_standard_form(spec).to_dict()}")
    f, m, lam = spec.field, spec.m, spec.lam
    mod = spec.modulus_poly()
    rows = []
    b0 = _blockify(spec.g11, mod, m)
    b1 = _blockify(spec.g12, mod, m)
    for _ in range(m - int(spec.g11.degree)):
        rows.append(_interleave(b0, b1))
        b0 = _xshift(b0, f, lam)
        b1 = _xshift(b1, f, lam)
    zero = [0] * m
    c1 = _blockify(spec.g22, mod, m)
    for _ in range(m - int(spec.g22.degree)):
        rows.append(_interleave(zero, c1))
        c1 = _xshift(c1, f, lam)
    if not rows:
        return GenMatrix.zeros(f, 0, 2 * m)
    return GenMatrix.from_rows(f, rows)


def expand_one_generator(spec: QtCodeSpec) -> GenMatrix:
    """The m rows x^j * (g11, g12), j < m, spanning a one-generator code."""
    if spec.is_standard:
        raise InvalidStandardForm("expected a one-generator spec")
    f, m, lam = spec.field, spec.m, spec.lam
    mod = spec.modulus_poly()
    b0 = _blockify(spec.g11, mod, m)
    b1 = _blockify(spec.g12, mod, m)
    rows = []
    for _ in range(m):
        rows.append(_interleave(b0, b1))
        b0 = _xshift(b0, f, lam)
        b1 = _xshift(b1, f, lam)
    return GenMatrix.from_rows(f, rows)


def twisted_shift(vec, field: Field, lam: int, times: int = 1):
    """Apply T_lambda: (x0, ..., x_{n-1}) -> (lambda*x_{n-1}, x0, ..., x_{n-2})."""
    v = list(int(x) for x in vec)
    for _ in range(times):
        v = [field.mul(lam, v[-1])] + v[:-1]
    return np.array(v, dtype=np.int32)


# ---------------------------------------------------------------------------
# exact minimum distance


@dataclass(frozen=True)
class DistanceResult:
    distance: int
    method: str  # "codeword-enumeration" or "parity-column-search"
    work_count: int

    def to_dict(self):
        return {"distance": self.distance, "method": self.method,
                "work_count": self.work_count}


def min_distance(mat: GenMatrix, budget: int = DEFAULT_BUDGET,
                 strategy: str = "auto", backend: str | None = None) -> DistanceResult:
    """Exact minimum Hamming weight of the nonzero codewords of ``mat``.

    Strategy "auto" enumerates all q^k messages when q^k <= 10^8 (walking
    one representative per 1-D subspace), and otherwise searches for the
    smallest set of linearly dependent columns of the parity-check matrix.
    ``budget`` caps the elementary operations; exceeding it raises
    :class:`BudgetExceeded` carrying the bounds established so far.
    """
    f = mat.field
    k, n = mat.rows, mat.cols
    if k == 0 or n == 0 or mat.is_zero():
        raise ZeroCode("minimum distance is undefined for the zero code")
    if mat.rank() < k:
        raise RankDeficient("generator matrix must have full row rank")
    tables = f.tables
    if tables is None:
        raise NotImplementedError(
            f"distance search needs lookup tables; field order {f.order} too large")
    add_t, sub_t, mul_t, inv_t, _ = tables
    if strategy == "auto":
        strategy = "enumeration" if f.order**k <= ENUM_LIMIT else "column-search"
    kern = get_backend(backend)
    if strategy == "enumeration":
        max_cw = max(budget // n, 1)
        best, examined, completed = kern.enum_min_weight(
            mat.data, add_t, mul_t, max_cw)
        if not completed:
            raise BudgetExceeded(
                f"enumeration stopped after {examined} codewords",
                lower=1, upper=(best if best <= n else None), work=examined)
        return DistanceResult(int(best), "codeword-enumeration", int(examined))
    if strategy == "column-search":
        h = mat.dual()
        r = h.rows
        found, completed_rounds, nodes = kern.column_search_min_weight(
            h.data, add_t, sub_t, mul_t, inv_t, budget, r + 1)
        if found < 0:
            raise BudgetExceeded(
                f"column search exhausted budget during round {completed_rounds + 1}",
                lower=completed_rounds + 1, upper=None, work=nodes)
        return DistanceResult(int(found), "parity-column-search", int(nodes))
    raise ValueError(f"unknown strategy {strategy!r}")


@dataclass(frozen=True)
class DlcpResult:
    """d(C), d(D-dual), and the security parameter min of the two."""

    d_c: DistanceResult
    d_dual_d: DistanceResult
    value: int
    dim_c: int
    dim_d: int

    def to_dict(self):
        return {"d_c": self.d_c.distance, "d_dual_d": self.d_dual_d.distance,
                "value": self.value}


def d_lcp(c_spec: QtCodeSpec, d_spec: QtCodeSpec,
          budget: int = DEFAULT_BUDGET, backend: str | None = None) -> DlcpResult:
    """Compute min{d(C), d(D-dual)} for a pair over the same ambient."""
    _check_ambient(c_spec, d_spec)
    gc = generator_matrix(c_spec)
    gd = generator_matrix(d_spec)
    d_c = min_distance(gc, budget=budget, backend=backend)
    hd = gd.dual()
    d_dd = min_distance(hd, budget=budget, backend=backend)
    return DlcpResult(d_c, d_dd, min(d_c.distance, d_dd.distance),
                      gc.rows, gd.rows)


def _check_ambient(a: QtCodeSpec, b: QtCodeSpec):
    if a.field != b.field or a.m != b.m or a.lam != b.lam:
        raise MismatchedAmbient(
            "codes live in different ambients (q, m, lambda)")
