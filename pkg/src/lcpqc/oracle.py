"""Ground-truth LCP decision by plain linear algebra over F_q.

Deliberately independent of all polynomial machinery: the verdict is
computed from ranks of the given generator matrices alone, so it can
cross-check every characterization engine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeMismatch
from .matrix import GenMatrix


@dataclass(frozen=True)
class OracleVerdict:
    verdict: bool
    dim_c: int
    dim_d: int
    dim_sum_space: int
    ambient: int

    def to_dict(self):
        return {"verdict": self.verdict, "dim_c": self.dim_c,
                "dim_d": self.dim_d, "dim_sum_space": self.dim_sum_space,
                "ambient": self.ambient}


def lcp_oracle(gc: GenMatrix, gd: GenMatrix) -> OracleVerdict:
    """True iff row spaces satisfy C + D = F_q^n with dim C + dim D = n.

    Together these force C and D to intersect trivially.  Redundant rows
    are fine; ranks are computed internally.
    """
    if gc.field != gd.field or gc.cols != gd.cols:
        raise ShapeMismatch("matrices must share a field and a length")
    n = gc.cols
    dim_c = gc.rank()
    dim_d = gd.rank()
    dim_sum = gc.stack(gd).rank()
    return OracleVerdict(dim_c + dim_d == n and dim_sum == n,
                         dim_c, dim_d, dim_sum, n)


def intersection_dim(gc: GenMatrix, gd: GenMatrix) -> int:
    """dim(C intersect D) = rank(GC) + rank(GD) - rank of the stack."""
    if gc.field != gd.field or gc.cols != gd.cols:
        raise ShapeMismatch("matrices must share a field and a length")
    return gc.rank() + gd.rank() - gc.stack(gd).rank()
