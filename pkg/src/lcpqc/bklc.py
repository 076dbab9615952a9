"""Lookup of best-known linear code distances from a local CSV reference.

The table is user-supplied (header ``q,n,k,d``, integer fields) and never
fetched over a network; unknown entries render as "-" in reports.
"""

from __future__ import annotations

import csv

from .errors import TableParseError


class BklcTable:
    def __init__(self, entries: dict):
        self._entries = dict(entries)

    def lookup(self, q: int, n: int, k: int):
        """The best known distance for (q, n, k), or None when unknown."""
        return self._entries.get((q, n, k))

    def __len__(self):
        return len(self._entries)


EMPTY_TABLE = BklcTable({})


def load_bklc_table(path) -> BklcTable:
    entries = {}
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip().lower() for h in header] != ["q", "n", "k", "d"]:
            raise TableParseError(f"expected header q,n,k,d in {path}", line=1)
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != 4:
                raise TableParseError(f"expected 4 fields, got {len(row)}", line=lineno)
            try:
                q, n, k, d = (int(cell) for cell in row)
            except ValueError as exc:
                raise TableParseError(f"non-integer field: {exc}", line=lineno) from exc
            entries[(q, n, k)] = d
    return BklcTable(entries)
