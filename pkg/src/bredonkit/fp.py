"""Exact linear algebra over F_p.

Vectors are dense tuples of ints in [0, p); for p = 2 the elimination runs
on integer bitmasks.  Everything is deterministic: pivots are chosen at the
smallest available coordinate, so kernel bases and coset representatives do
not depend on dict ordering.
"""

from __future__ import annotations


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("no inverse of 0")
    return pow(a, p - 2, p)


class Echelon:
    """Incremental row echelon form over F_p with pivot bookkeeping."""

    def __init__(self, ncols: int, p: int):
        self.ncols = ncols
        self.p = p
        self.pivots: dict[int, object] = {}  # pivot column -> normalized row

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce2(self, mask: int) -> int:
        for col in sorted(self.pivots):
            if mask >> col & 1:
                mask ^= self.pivots[col]
        return mask

    def _reducep(self, row):
        row = list(row)
        for col in sorted(self.pivots):
            c = row[col] % self.p
            if c:
                piv = self.pivots[col]
                row = [(x - c * y) % self.p for x, y in zip(row, piv)]
        return row

    def reduce(self, vec):
        """Residue of vec modulo the current span (same encoding as input)."""
        if self.p == 2:
            return self._reduce2(vec if isinstance(vec, int) else mask_of(vec))
        return tuple(self._reducep(vec))

    def insert(self, vec) -> bool:
        """Add vec to the span; True when the rank grew."""
        if self.p == 2:
            mask = self._reduce2(vec if isinstance(vec, int) else mask_of(vec))
            if mask == 0:
                return False
            col = (mask & -mask).bit_length() - 1
            for c, r in self.pivots.items():
                if r >> col & 1:
                    self.pivots[c] = r ^ mask
            self.pivots[col] = mask
            return True
        row = self._reducep(vec)
        col = next((i for i, x in enumerate(row) if x % self.p), None)
        if col is None:
            return False
        inv = inv_mod(row[col], self.p)
        row = [x * inv % self.p for x in row]
        for c in list(self.pivots):
            r = self.pivots[c]
            f = r[col]
            if f:
                self.pivots[c] = [(x - f * y) % self.p for x, y in zip(r, row)]
        self.pivots[col] = row
        return True

    def contains(self, vec) -> bool:
        res = self.reduce(vec)
        return res == 0 if self.p == 2 else not any(res)


def mask_of(vec) -> int:
    mask = 0
    for i, x in enumerate(vec):
        if x % 2:
            mask |= 1 << i
    return mask


def vec_of_mask(mask: int, ncols: int):
    return tuple(mask >> i & 1 for i in range(ncols))


def rank_and_kernel(rows, ncols: int, p: int):
    """Gaussian elimination: rank of the matrix and a basis of its kernel.

    rows are the matrix rows (length ncols); the kernel is the solution
    space of M x = 0, returned as tuples.
    """
    if p == 2:
        work = [mask_of(r) if not isinstance(r, int) else r for r in rows]
        pivots = {}
        for mask in work:
            for col in sorted(pivots):
                if mask >> col & 1:
                    mask ^= pivots[col]
            if mask:
                col = (mask & -mask).bit_length() - 1
                pivots[col] = mask
        rank = len(pivots)
        # back-substitute for clean pivot rows
        ech = Echelon(ncols, 2)
        for mask in pivots.values():
            ech.insert(mask)
        piv_cols = sorted(ech.pivots)
        free = [c for c in range(ncols) if c not in ech.pivots]
        kernel = []
        for f in free:
            vec = [0] * ncols
            vec[f] = 1
            for c in piv_cols:
                if ech.pivots[c] >> f & 1:
                    vec[c] = 1
            kernel.append(tuple(vec))
        return rank, kernel

    ech = Echelon(ncols, p)
    for r in rows:
        ech.insert(r)
    piv_cols = sorted(ech.pivots)
    free = [c for c in range(ncols) if c not in ech.pivots]
    kernel = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for c in piv_cols:
            vec[c] = (-ech.pivots[c][f]) % p
        kernel.append(tuple(vec))
    return ech.rank, kernel


def span_rank(vectors, ncols: int, p: int) -> int:
    ech = Echelon(ncols, p)
    for v in vectors:
        ech.insert(v)
    return ech.rank


def matrix_kernel_dim(columns, nrows: int, p: int) -> int:
    """Kernel dimension of the map sending basis vector j to columns[j]."""
    rank = span_rank(columns, nrows, p)
    return len(columns) - rank


def intersect_spans(avecs, bvecs, ncols: int, p: int):
    """Basis of span(avecs) & span(bvecs), via the pullback of pairs.

    Solves [A | -B] x = 0 and returns the A-parts of a kernel basis,
    re-echelonized.  Exact for any p.
    """
    acols = [tuple(v) for v in avecs]
    bcols = [tuple(v) for v in bvecs]
    cols = acols + [tuple((-x) % p for x in v) for v in bcols]
    if not cols:
        return []
    rows = [tuple(col[i] for col in cols) for i in range(ncols)]
    _, kernel = rank_and_kernel(rows, len(cols), p)
    ech = Echelon(ncols, p)
    basis = []
    for coeffs in kernel:
        vec = [0] * ncols
        for j, c in enumerate(coeffs[: len(acols)]):
            if c:
                for i, x in enumerate(acols[j]):
                    vec[i] = (vec[i] + c * x) % p
        if ech.insert(tuple(vec)):
            basis.append(tuple(vec))
    return basis


def intersection_dim_by_ranks(avecs, bvecs, ncols: int, p: int) -> int:
    """dim(A & B) = rank A + rank B - rank(A + B); independent cross-check."""
    ra = span_rank(avecs, ncols, p)
    rb = span_rank(bvecs, ncols, p)
    rab = span_rank(list(avecs) + list(bvecs), ncols, p)
    return ra + rb - rab


def preimage_dim(columns, target_vectors, nrows: int, p: int) -> int:
    """dim of f^{-1}(W) for f with the given columns and W spanned as given.

    Equals dim ker f + dim(W & im f); W is intersected with the image first.
    """
    kdim = matrix_kernel_dim(columns, nrows, p)
    wim = intersect_spans(target_vectors, columns, nrows, p)
    return kdim + len(wim)


def quotient_representatives(ncols: int, sub_vectors, p: int):
    """Indices of standard basis vectors spanning a complement of the span.

    Deterministic: scan coordinates in order, keep those that enlarge the
    span of sub_vectors.
    """
    ech = Echelon(ncols, p)
    for v in sub_vectors:
        ech.insert(v)
    reps = []
    for i in range(ncols):
        unit = (1 << i) if p == 2 else tuple(1 if j == i else 0 for j in range(ncols))
        if ech.insert(unit):
            reps.append(i)
    return reps


class GF2Quotient:
    """Quotient of F_2^n by a span, with canonical coset coordinates.

    Representatives are the standard coordinates that survive greedy
    completion of the span's echelon; coords() expresses a coset in that
    representative basis.
    """

    def __init__(self, ncols: int, ideal_vectors):
        self.ncols = ncols
        self.ech = Echelon(ncols, 2)
        for v in ideal_vectors:
            self.ech.insert(v)
        probe = Echelon(ncols, 2)
        for c, r in self.ech.pivots.items():
            probe.insert(r)
        self.reps = []
        for i in range(ncols):
            if probe.insert(1 << i):
                self.reps.append(i)
        # solver rows: residues of rep units with coefficient tracking
        self._solver = {}  # pivot col -> (residue, coeff mask over reps)
        for n, i in enumerate(self.reps):
            res = self.ech.reduce(1 << i)
            coeff = 1 << n
            for col in sorted(self._solver):
                if res >> col & 1:
                    r2, c2 = self._solver[col]
                    res ^= r2
                    coeff ^= c2
            col = (res & -res).bit_length() - 1
            self._solver[col] = (res, coeff)

    @property
    def dim(self) -> int:
        return len(self.reps)

    def coords(self, vec) -> int:
        """Coset coordinates of vec as a bitmask over the representatives."""
        res = self.ech.reduce(vec if isinstance(vec, int) else mask_of(vec))
        coeff = 0
        while res:
            col = (res & -res).bit_length() - 1
            row, c = self._solver[col]
            res ^= row
            coeff ^= c
        return coeff

    def contains_zero_coset(self, vec) -> bool:
        return self.ech.contains(vec)


def dot_rows(coeffs, vectors, ncols: int, p: int):
    out = [0] * ncols
    for c, v in zip(coeffs, vectors):
        if c % p:
            for i, x in enumerate(v):
                out[i] = (out[i] + c * x) % p
    return tuple(out)
