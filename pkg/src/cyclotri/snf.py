"""Exact Smith normal form over the integers.

The eliminator works on a sparse dict-of-rows representation with arbitrary
precision Python integers, so no result is ever approximate.  Row operations
can be recorded as an operation log instead of materialising the left
transform; applying the log to a vector gives U*x, applying the inverted log
in reverse gives U^{-1}*x.  This keeps the homology-basis machinery cheap on
complexes with a few thousand faces, where a dense unimodular transform would
dominate the cost.

Pivoting prefers singleton rows and columns (which eliminate without fill),
then falls back to entries of smallest magnitude with a fill-in tie-break.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class SNFResult:
    """Diagonal d_0 | d_1 | ... plus optional transform data.

    ``diag`` has one entry per potential pivot index; zeros mark the part of
    the domain that maps to nothing (rank deficiency).  ``left_ops`` and
    ``right_ops`` are operation logs; ``u``/``v`` are materialised matrices
    when requested.
    """

    nrows: int
    ncols: int
    diag: list
    left_ops: list | None = None
    right_ops: list | None = None
    u: list | None = None
    v: list | None = None

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d)


def apply_ops(ops, vec: dict) -> dict:
    """Apply a row-operation log to a sparse column vector (U * x)."""
    for op in ops:
        kind = op[0]
        if kind == "add":
            _, i, j, c = op
            vj = vec.get(j)
            if vj:
                new = vec.get(i, 0) + c * vj
                if new:
                    vec[i] = new
                else:
                    vec.pop(i, None)
        elif kind == "swap":
            _, i, j = op
            vi, vj = vec.pop(i, None), vec.pop(j, None)
            if vj is not None:
                vec[i] = vj
            if vi is not None:
                vec[j] = vi
        else:  # neg
            _, i = op
            if i in vec:
                vec[i] = -vec[i]
    return vec


def apply_ops_inverse(ops, vec: dict) -> dict:
    """Apply the inverse of a row-operation log (U^{-1} * x)."""
    for op in reversed(ops):
        kind = op[0]
        if kind == "add":
            _, i, j, c = op
            vj = vec.get(j)
            if vj:
                new = vec.get(i, 0) - c * vj
                if new:
                    vec[i] = new
                else:
                    vec.pop(i, None)
        elif kind == "swap":
            _, i, j = op
            vi, vj = vec.pop(i, None), vec.pop(j, None)
            if vj is not None:
                vec[i] = vj
            if vi is not None:
                vec[j] = vi
        else:
            _, i = op
            if i in vec:
                vec[i] = -vec[i]
    return vec


class _Eliminator:
    def __init__(self, nrows, ncols, entries, track_left, track_right):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = {}
        self.cols = {}
        for r, c, v in entries:
            if v:
                self.rows.setdefault(r, {})[c] = self.rows.get(r, {}).get(c, 0) + v
        for r, row in self.rows.items():
            for c in [c for c, v in row.items() if not v]:
                del row[c]
            for c in row:
                self.cols.setdefault(c, set()).add(r)
        self.lops = [] if track_left else None
        self.rops = [] if track_right else None
        self.active_rows = set(self.rows)
        self.active_cols = set(self.cols)
        self.single_rows = [r for r in self.rows if len(self.rows[r]) == 1]
        self.single_cols = [c for c in self.cols if len(self.cols[c]) == 1]

    # -- primitive operations -------------------------------------------

    def _set(self, r, c, v):
        row = self.rows.setdefault(r, {})
        if v:
            fresh = c not in row
            row[c] = v
            if fresh:
                col = self.cols.setdefault(c, set())
                col.add(r)
                if len(row) == 1:
                    self.single_rows.append(r)
                if len(col) == 1:
                    self.single_cols.append(c)
        elif c in row:
            del row[c]
            col = self.cols[c]
            col.discard(r)
            if len(row) == 1:
                self.single_rows.append(r)
            if len(col) == 1:
                self.single_cols.append(c)

    def row_swap(self, i, j):
        if i == j:
            return
        ri = self.rows.pop(i, {})
        rj = self.rows.pop(j, {})
        if rj:
            self.rows[i] = rj
        if ri:
            self.rows[j] = ri
        for c in ri.keys() | rj.keys():
            col = self.cols.setdefault(c, set())
            col.discard(i)
            col.discard(j)
            if c in rj:
                col.add(i)
            if c in ri:
                col.add(j)
        if self.lops is not None:
            self.lops.append(("swap", i, j))

    def row_negate(self, i):
        for c in self.rows.get(i, {}):
            self.rows[i][c] = -self.rows[i][c]
        if self.lops is not None:
            self.lops.append(("neg", i))

    def row_addmul(self, i, j, coef):
        """row_i += coef * row_j"""
        for c, v in list(self.rows.get(j, {}).items()):
            self._set(i, c, self.rows.get(i, {}).get(c, 0) + coef * v)
        if self.lops is not None:
            self.lops.append(("add", i, j, coef))

    def col_swap(self, i, j):
        if i == j:
            return
        ci = self.cols.pop(i, set())
        cj = self.cols.pop(j, set())
        if cj:
            self.cols[i] = set(cj)
        if ci:
            self.cols[j] = set(ci)
        for r in ci | cj:
            row = self.rows[r]
            vi = row.pop(i, None)
            vj = row.pop(j, None)
            if vi is not None:
                row[j] = vi
            if vj is not None:
                row[i] = vj
        if self.rops is not None:
            self.rops.append(("swap", i, j))

    def col_negate(self, c):
        for r in self.cols.get(c, set()):
            self.rows[r][c] = -self.rows[r][c]
        if self.rops is not None:
            self.rops.append(("neg", c))

    def col_addmul(self, i, j, coef):
        """col_i += coef * col_j"""
        for r in list(self.cols.get(j, set())):
            self._set(r, i, self.rows.get(r, {}).get(i, 0) + coef * self.rows[r][j])
        if self.rops is not None:
            self.rops.append(("add", i, j, coef))

    # -- pivoting ---------------------------------------------------------

    def _positivise(self, r, c):
        if self.rows[r][c] < 0:
            # negate on the untracked side when one exists
            if self.rops is None and self.lops is not None:
                self.col_negate(c)
            else:
                self.row_negate(r)

    def _clear_pivot(self, r, c):
        """Make (r, c) the only nonzero of its row and column."""
        while True:
            self._positivise(r, c)
            d = self.rows[r][c]
            moved = False
            for r2 in sorted(self.cols[c] - {r}):
                v = self.rows[r2].get(c, 0)
                if not v:
                    continue
                q = v // d
                if q:
                    self.row_addmul(r2, r, -q)
                if self.rows.get(r2, {}).get(c, 0):
                    self.row_swap(r, r2)  # remainder is a smaller pivot
                    moved = True
                    break
            if moved:
                continue
            for c2 in sorted(set(self.rows[r]) - {c}):
                v = self.rows[r].get(c2, 0)
                if not v:
                    continue
                q = v // d
                if q:
                    self.col_addmul(c2, c, -q)
                if self.rows[r].get(c2, 0):
                    self.col_swap(c, c2)
                    moved = True
                    break
            if not moved:
                return

    def _pop_single_col(self):
        while self.single_cols:
            c = self.single_cols.pop()
            if c in self.active_cols and len(self.cols.get(c, ())) == 1:
                (r,) = self.cols[c]
                if r in self.active_rows:
                    return r, c
        return None

    def _pop_single_row(self):
        while self.single_rows:
            r = self.single_rows.pop()
            if r in self.active_rows and len(self.rows.get(r, ())) == 1:
                (c,) = self.rows[r]
                if c in self.active_cols:
                    return r, c
        return None

    def _scan_pivot(self):
        best = None
        for r in self.active_rows:
            row = self.rows.get(r)
            if not row:
                continue
            rlen = len(row)
            for c, v in row.items():
                key = (abs(v), (rlen - 1) * (len(self.cols[c]) - 1), r, c)
                if best is None or key < best:
                    best = key
        if best is None:
            return None
        return best[2], best[3]

    def run(self):
        pivots = []
        while True:
            pick = self._pop_single_col() or self._pop_single_row()
            if pick is None:
                # active structures may hold emptied rows; prune lazily
                self.active_rows = {r for r in self.active_rows if self.rows.get(r)}
                self.active_cols = {c for c in self.active_cols if self.cols.get(c)}
                pick = self._scan_pivot()
            if pick is None:
                break
            r, c = pick
            self._clear_pivot(r, c)
            self._positivise(r, c)
            pivots.append((r, c))
            self.active_rows.discard(r)
            self.active_cols.discard(c)
        return pivots

    # -- normal form ------------------------------------------------------

    def compact(self, pivots):
        """Swap pivots onto the leading diagonal, in discovery order."""
        rpos: dict = {}
        rocc: dict = {}
        cpos: dict = {}
        cocc: dict = {}
        for s, (r, c) in enumerate(pivots):
            cur = rpos.get(r, r)
            if cur != s:
                self.row_swap(s, cur)
                other = rocc.get(s, s)
                rpos[r], rpos[other] = s, cur
                rocc[s], rocc[cur] = r, other
            cur = cpos.get(c, c)
            if cur != s:
                self.col_swap(s, cur)
                other = cocc.get(s, s)
                cpos[c], cpos[other] = s, cur
                cocc[s], cocc[cur] = c, other

    def chain_fixup(self, rank):
        """Sort the diagonal and enforce d_i | d_{i+1}."""
        changed = True
        while changed:
            changed = False
            for i in range(rank):
                for j in range(i + 1, rank):
                    a = self.rows[i][i]
                    b = self.rows[j][j]
                    if b % a == 0:
                        continue
                    changed = True
                    # 2x2 block [[a,0],[0,b]] -> [[gcd,0],[0,lcm]]
                    self.row_addmul(i, j, 1)
                    self._clear_pivot(i, i)
                    self._positivise(i, i)
                    self._positivise(j, j)

    def diagonal(self, size):
        out = []
        for s in range(size):
            out.append(self.rows.get(s, {}).get(s, 0))
        return out


def _as_entries(matrix):
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    for r, row in enumerate(matrix):
        if len(row) != ncols:
            raise ValueError("ragged matrix")
        for c, v in enumerate(row):
            if v:
                yield r, c, int(v)


def snf_diagonal(entries, nrows, ncols) -> list:
    """Invariant factors only (no transforms), for sparse input."""
    elim = _Eliminator(nrows, ncols, entries, track_left=False, track_right=False)
    pivots = elim.run()
    elim.compact(pivots)
    elim.chain_fixup(len(pivots))
    return elim.diagonal(min(nrows, ncols))


def snf_left_tracked(entries, nrows, ncols) -> SNFResult:
    """Diagonal plus the left operation log (right transform discarded)."""
    elim = _Eliminator(nrows, ncols, entries, track_left=True, track_right=False)
    pivots = elim.run()
    elim.compact(pivots)
    elim.chain_fixup(len(pivots))
    diag = elim.diagonal(nrows)
    return SNFResult(nrows, ncols, diag, left_ops=elim.lops)


def _materialise_left(ops, n) -> list:
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for op in ops:
        if op[0] == "add":
            _, i, j, c = op
            row_j = u[j]
            row_i = u[i]
            for k in range(n):
                if row_j[k]:
                    row_i[k] += c * row_j[k]
        elif op[0] == "swap":
            _, i, j = op
            u[i], u[j] = u[j], u[i]
        else:
            _, i = op
            u[i] = [-x for x in u[i]]
    return u


def _materialise_right(ops, n) -> list:
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for op in ops:
        if op[0] == "add":
            _, i, j, c = op
            for row in v:
                if row[j]:
                    row[i] += c * row[j]
        elif op[0] == "swap":
            _, i, j = op
            for row in v:
                row[i], row[j] = row[j], row[i]
        else:
            _, i = op
            for row in v:
                row[i] = -row[i]
    return v


def matmul(a, b) -> list:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            v = ai[k]
            if v:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        oi[j] += v * bk[j]
    return out


def det_unimodular(m) -> int:
    """Determinant by fraction-free Gaussian elimination (Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(matrix):
    """Full SNF of a dense integer matrix: returns (D, U, V) with U*M*V = D.

    D is diagonal with non-negative entries in a divisibility chain; U and V
    are unimodular.  The factorisation is re-multiplied and checked before
    returning, so a silent bookkeeping bug cannot leak out.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    elim = _Eliminator(nrows, ncols, _as_entries(matrix), track_left=True, track_right=True)
    pivots = elim.run()
    elim.compact(pivots)
    elim.chain_fixup(len(pivots))
    diag = elim.diagonal(min(nrows, ncols))
    u = _materialise_left(elim.lops, nrows)
    v = _materialise_right(elim.rops, ncols)
    d = [[0] * ncols for _ in range(nrows)]
    for s, val in enumerate(diag):
        d[s][s] = val
    if nrows and ncols:
        check = matmul(matmul(u, [list(map(int, row)) for row in matrix]), v)
        if check != d:
            raise AssertionError("SNF verification failed: U*M*V != D")
    if abs(det_unimodular(u)) != 1 or abs(det_unimodular(v)) != 1:
        raise AssertionError("SNF transform is not unimodular")
    return SNFResult(nrows, ncols, diag, u=u, v=v)


def invariant_factors_of_multiset(values) -> tuple:
    """Combine torsion orders into a divisibility chain.

    Each value >= 2 is split into prime powers; for every prime the powers
    are sorted and the largest are multiplied together first, which is the
    invariant-factor decomposition of the direct sum.
    """
    powers: dict = {}
    for val in values:
        v = int(val)
        if v < 2:
            continue
        p = 2
        while p * p <= v:
            if v % p == 0:
                e = 0
                while v % p == 0:
                    v //= p
                    e += 1
                powers.setdefault(p, []).append(p**e)
            p += 1
        if v > 1:
            powers.setdefault(v, []).append(v)
    for p in powers:
        powers[p].sort(reverse=True)
    depth = max((len(v) for v in powers.values()), default=0)
    chain = []
    for i in range(depth):
        f = 1
        for p in powers:
            if i < len(powers[p]):
                f *= powers[p][i]
        chain.append(f)
    chain.reverse()
    return tuple(chain)
