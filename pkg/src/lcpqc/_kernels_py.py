"""Pure-Python fallback for the distance-search kernels.

Same contracts as the compiled extension in ``_kernels``:

* ``enum_min_weight`` walks every 1-D subspace representative (messages
  whose first nonzero digit is 1) and reports the lightest codeword.
  Suffix codewords are precomputed in numpy blocks so the inner loop is
  vectorized table lookups.
* ``column_search_min_weight`` finds the smallest w such that some w
  columns of the parity-check matrix are linearly dependent, by
  depth-first search over column subsets in increasing w.

Both count their own work and stop once the caller's budget is exhausted.
"""

from __future__ import annotations

import numpy as np

BLOCK_LIMIT = 16384


def enum_min_weight(gen, add_t, mul_t, max_codewords):
    """Minimum nonzero-codeword weight by projective message enumeration.

    Returns (best_weight, codewords_examined, completed).  When not
    completed, best_weight is only an upper bound (or n+1 if nothing was
    examined).
    """
    gen = np.ascontiguousarray(gen, dtype=np.int32)
    k, n = gen.shape
    q = add_t.shape[0]

    # blocks[j]: codewords of all digit combinations of the last j rows
    blocks = [np.zeros((1, n), dtype=np.int32)]
    jmax = 0
    while q ** (jmax + 1) <= BLOCK_LIMIT and jmax + 1 <= k - 1:
        jmax += 1
        row = gen[k - jmax]
        scaled = mul_t[np.arange(q, dtype=np.int32)[:, None], row[None, :]]
        prev = blocks[-1]
        blocks.append(add_t[scaled[:, None, :], prev[None, :, :]].reshape(-1, n))

    best = n + 1
    examined = 0
    for first in range(k):
        suffix_len = k - 1 - first
        j = min(jmax, suffix_len)
        block = blocks[j]
        prefix_rows = gen[first + 1:k - j]
        num_prefix = len(prefix_rows)
        digits = [0] * num_prefix
        partial = [gen[first]] * (num_prefix + 1)
        while True:
            cw = add_t[block, partial[-1][None, :]]
            examined += block.shape[0]
            w = int(np.count_nonzero(cw, axis=1).min())
            if w < best:
                best = w
                if best == 1:
                    return best, examined, True
            t = _advance(digits, q)
            if t is None:
                break
            if examined >= max_codewords:
                return best, examined, False
            partial[t + 1] = add_t[partial[t], mul_t[digits[t], prefix_rows[t]]]
            for u in range(t + 1, num_prefix):
                partial[u + 1] = partial[u]
        if examined >= max_codewords and first < k - 1:
            return best, examined, False
    return best, examined, True


def _advance(digits, q):
    """Base-q odometer step; returns the bumped index or None when done."""
    t = len(digits) - 1
    while t >= 0 and digits[t] == q - 1:
        digits[t] = 0
        t -= 1
    if t < 0:
        return None
    digits[t] += 1
    return t


def column_search_min_weight(h, add_t, sub_t, mul_t, inv_t, max_work, wmax):
    """Smallest w with w linearly dependent columns of h.

    Returns (found_w, completed_rounds, subsets_examined): found_w is -1
    when the budget ran out (completed_rounds proves no dependent set of
    that size or smaller exists).
    """
    h = np.ascontiguousarray(h, dtype=np.int32)
    r, n = h.shape
    if r == 0:
        # every column is the empty vector, hence dependent
        return (1 if n >= 1 else -1), 0, 0
    cols = [h[:, c].copy() for c in range(n)]
    state = {"work": 0, "nodes": 0}

    def dfs(start, pivots, leads, depth, w):
        for c in range(start, n - (w - depth) + 1):
            v = cols[c]
            for pv, ld in zip(pivots, leads):
                f = v[ld]
                if f:
                    v = sub_t[v, mul_t[f, pv]]
            state["work"] += r * (len(pivots) + 1)
            state["nodes"] += 1
            nz = np.nonzero(v)[0]
            if nz.size == 0:
                return depth + 1
            if state["work"] > max_work:
                return -1
            if depth + 1 < w:
                lead = int(nz[0])
                pv = mul_t[inv_t[v[lead]], v] if v[lead] != 1 else v
                res = dfs(c + 1, pivots + [pv], leads + [lead], depth + 1, w)
                if res:
                    return res
        return 0

    for w in range(1, wmax + 1):
        res = dfs(0, [], [], 0, w)
        if res == -1:
            return -1, w - 1, state["nodes"]
        if res:
            return res, w - 1, state["nodes"]
    return -1, wmax, state["nodes"]
