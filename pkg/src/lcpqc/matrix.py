"""Dense matrices over a finite field: rank, reduced row echelon form, duals.

Entries are integer codes of field elements kept in a numpy int32 array.
Row operations use the field's q x q lookup tables when the field is small
enough, and fall back to scalar arithmetic otherwise.
"""

from __future__ import annotations

import numpy as np

from .errors import FieldMismatch, RankDeficient, ShapeMismatch
from .ff import Field


class GenMatrix:
    """A rows x cols matrix over a finite field, treated as immutable."""

    __slots__ = ("field", "data")

    def __init__(self, field: Field, data):
        arr = np.asarray(data, dtype=np.int32)
        if arr.ndim != 2:
            raise ShapeMismatch(f"expected a 2-D array, got shape {arr.shape}")
        self.field = field
        self.data = arr

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "GenMatrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int32))

    @classmethod
    def identity(cls, field: Field, n: int) -> "GenMatrix":
        return cls(field, np.eye(n, dtype=np.int32))

    @classmethod
    def from_rows(cls, field: Field, rows) -> "GenMatrix":
        return cls(field, np.array([list(r) for r in rows], dtype=np.int32))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def stack(self, other: "GenMatrix") -> "GenMatrix":
        if other.field != self.field:
            raise FieldMismatch("cannot stack matrices over different fields")
        if other.cols != self.cols:
            raise ShapeMismatch(f"column mismatch: {self.cols} vs {other.cols}")
        return GenMatrix(self.field, np.vstack([self.data, other.data]))

    def __eq__(self, other):
        if not isinstance(other, GenMatrix):
            return NotImplemented
        return self.field == other.field and \
            self.data.shape == other.data.shape and \
            bool(np.array_equal(self.data, other.data))

    def __repr__(self):
        return f"GenMatrix({self.rows}x{self.cols} over {self.field})"

    # -- elimination ----------------------------------------------------------

    def rref(self):
        """Return (rank, R, pivot_columns) with R the canonical RREF."""
        f = self.field
        M = self.data.copy()
        nrows, ncols = M.shape
        tables = f.tables
        pivots = []
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            hit = np.nonzero(M[r:, c])[0]
            if hit.size == 0:
                continue
            pr = r + int(hit[0])
            if pr != r:
                M[[r, pr]] = M[[pr, r]]
            if tables is not None:
                add_t, sub_t, mul_t, inv_t, _ = tables
                piv_inv = inv_t[M[r, c]]
                M[r] = mul_t[piv_inv, M[r]]
                others = np.nonzero(M[:, c])[0]
                others = others[others != r]
                if others.size:
                    factors = M[others, c]
                    M[others] = sub_t[M[others], mul_t[factors[:, None], M[r][None, :]]]
            else:
                piv_inv = f.inv(int(M[r, c]))
                M[r] = [f.mul(piv_inv, int(x)) for x in M[r]]
                for i in range(nrows):
                    if i != r and M[i, c]:
                        fac = int(M[i, c])
                        M[i] = [f.sub(int(M[i, j]), f.mul(fac, int(M[r, j])))
                                for j in range(ncols)]
            pivots.append(c)
            r += 1
        return r, GenMatrix(f, M), tuple(pivots)

    def rank(self) -> int:
        return self.rref()[0]

    def dual(self) -> "GenMatrix":
        """A full-rank H with self @ H.T == 0, i.e. a basis of the null space.

        Requires full row rank.  Built from the RREF in systematic form with
        the column permutation undone before returning.
        """
        f = self.field
        k, n = self.rows, self.cols
        rank, R, pivots = self.rref()
        if rank != k:
            raise RankDeficient(f"matrix has rank {rank} < {k} rows")
        free = [c for c in range(n) if c not in set(pivots)]
        H = np.zeros((len(free), n), dtype=np.int32)
        for i, fc in enumerate(free):
            H[i, fc] = 1
            for r, pc in enumerate(pivots):
                H[i, pc] = f.neg(int(R.data[r, fc]))
        return GenMatrix(f, H)

    def mul_transpose(self, other: "GenMatrix") -> "GenMatrix":
        """self @ other.T over the field (used for orthogonality checks)."""
        if other.field != self.field:
            raise FieldMismatch("field mismatch")
        if other.cols != self.cols:
            raise ShapeMismatch("inner dimension mismatch")
        f = self.field
        out = np.zeros((self.rows, other.rows), dtype=np.int32)
        tables = f.tables
        if tables is not None:
            add_t, _, mul_t, _, _ = tables
            for c in range(self.cols):
                prod = mul_t[self.data[:, c][:, None], other.data[:, c][None, :]]
                out = add_t[out, prod]
        else:
            for i in range(self.rows):
                for j in range(other.rows):
                    acc = 0
                    for c in range(self.cols):
                        acc = f.add(acc, f.mul(int(self.data[i, c]),
                                               int(other.data[j, c])))
                    out[i, j] = acc
        return GenMatrix(f, out)

    def is_zero(self) -> bool:
        return not self.data.any()

    def row_space_equals(self, other: "GenMatrix") -> bool:
        ra, rb = self.rank(), other.rank()
        return ra == rb and self.stack(other).rank() == ra

    def row_space_contains(self, vec) -> bool:
        v = GenMatrix(self.field, np.asarray(vec, dtype=np.int32).reshape(1, -1))
        return self.stack(v).rank() == self.rank()

    # -- text format: one row per line, space-separated element tokens ---------

    def to_text(self) -> str:
        f = self.field
        return "\n".join(" ".join(f.format(int(x)) for x in row)
                         for row in self.data)

    @classmethod
    def from_text(cls, field: Field, text: str) -> "GenMatrix":
        rows = []
        for line in text.strip().splitlines():
            line = line.strip()
            if not line:
                continue
            rows.append([field.parse(tok).code for tok in line.split()])
        if not rows:
            raise ShapeMismatch("empty matrix text")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeMismatch("ragged matrix text")
        return cls.from_rows(field, rows)
