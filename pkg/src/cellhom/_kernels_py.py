"""Pure-Python elimination kernels (arbitrary-precision integers).

Both functions take a sparse matrix as ``{(row, col): value}``.
"""


def smith_diagonal(entries, nrows, ncols):
    """Absolute values of the nonzero diagonal after unimodular row and column
    operations; not yet normalised to a divisibility chain."""
    rows = {}
    cols = {}
    for (r, c), v in entries.items():
        if v:
            rows.setdefault(r, {})[c] = v
            cols.setdefault(c, {})[r] = v

    def setv(r, c, v):
        if v:
            rows.setdefault(r, {})[c] = v
            cols.setdefault(c, {})[r] = v
        else:
            rr = rows.get(r)
            if rr is not None and c in rr:
                del rr[c]
                if not rr:
                    del rows[r]
                cc = cols[c]
                del cc[r]
                if not cc:
                    del cols[c]

    diag = []
    while rows:
        # pivot: entry of minimal absolute value
        best = None
        for r, rr in rows.items():
            for c, v in rr.items():
                a = -v if v < 0 else v
                if best is None or a < best[0]:
                    best = (a, r, c)
                    if a == 1:
                        break
            if best[0] == 1:
                break
        _, pr, pc = best
        while True:
            p = rows[pr][pc]
            clean = True
            # row operations clear the pivot column
            for r in [r for r in cols[pc] if r != pr]:
                q = cols[pc][r] // p
                for c, v in list(rows[pr].items()):
                    setv(r, c, rows.get(r, {}).get(c, 0) - q * v)
                if pc in rows.get(r, ()):
                    clean = False
            # column operations clear the pivot row
            for c in [c for c in rows[pr] if c != pc]:
                q = rows[pr][c] // p
                for r, v in list(cols[pc].items()):
                    setv(r, c, rows.get(r, {}).get(c, 0) - q * v)
                if c in rows.get(pr, ()):
                    clean = False
            if clean and len(rows[pr]) == 1 and len(cols[pc]) == 1:
                break
            # a remainder is now smaller than the pivot; move the pivot there
            best = None
            for r, v in cols[pc].items():
                if r != pr and (best is None or abs(v) < best[0]):
                    best = (abs(v), r, pc)
            for c, v in rows[pr].items():
                if c != pc and (best is None or abs(v) < best[0]):
                    best = (abs(v), pr, c)
            _, pr, pc = best
        p = rows[pr][pc]
        diag.append(-p if p < 0 else p)
        setv(pr, pc, 0)
    return diag


def rank_mod2(entries, nrows, ncols):
    basis = {}  # leading bit -> row bitmask
    rows = {}
    for (r, c), v in entries.items():
        if v & 1:
            rows[r] = rows.get(r, 0) ^ (1 << c)
    for x in rows.values():
        while x:
            top = x.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = x
                break
            x ^= b
    return len(basis)
