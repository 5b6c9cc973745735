"""Multivariate Laurent-plus-exterior monomial algebra over F_p.

A GeneratorTable fixes an ordered alphabet of generators, each carrying an
RO-degree and a flavor: polynomial (exponents >= 0), invertible (any
integer exponent), exterior (exponents in {0, 1}, square zero).  Elements
are finite F_p-combinations of exponent tuples.  Products of odd-dimensional
generators anticommute; the sign is the usual inversion count, which only
matters for odd p.

Degree-piece enumeration solves the linear system "sum of exponent times
generator degree = target" by exact Gaussian elimination plus Fourier-
Motzkin bounds on the free directions; a query whose solution set contains
a lattice ray raises UnboundedEnumerationError instead of truncating.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .degrees import Degree, GroupSpec, SubDegree, exact_lattice_solve


class UnboundedEnumerationError(ValueError):
    """Degree query admits infinitely many monomials and no box was given."""


FLAVORS = ("polynomial", "invertible", "exterior")


def degree_tuple(deg) -> tuple:
    if isinstance(deg, Degree):
        return (deg.c, *deg.a, deg.b)
    if isinstance(deg, SubDegree):
        return (deg.m, deg.n)
    return tuple(deg)


@dataclass(frozen=True)
class GeneratorTable:
    """Ordered generator alphabet with degrees and flavors."""

    group: GroupSpec
    names: tuple
    degrees: tuple  # coordinate tuples, matching self.names
    flavors: tuple

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be unique")
        for f in self.flavors:
            if f not in FLAVORS:
                raise ValueError(f"unknown flavor {f!r}")
        for name, d, f in zip(self.names, self.degrees, self.flavors):
            if self.group.p != 2 and sum_dim(self.group, d) % 2 and f != "exterior":
                raise ValueError(f"odd-dimensional generator {name} must be exterior")

    @classmethod
    def build(cls, group: GroupSpec, entries) -> "GeneratorTable":
        names, degs, flavs = [], [], []
        for name, deg, flavor in entries:
            names.append(name)
            degs.append(degree_tuple(deg))
            flavs.append(flavor)
        return cls(group, tuple(names), tuple(degs), tuple(flavs))

    def index(self, name: str) -> int:
        return self.names.index(name)

    def zero_exps(self) -> tuple:
        return (0,) * len(self.names)

    def monomial_degree(self, exps: tuple) -> tuple:
        n = len(self.degrees[0])
        out = [0] * n
        for e, d in zip(exps, self.degrees):
            if e:
                for i in range(n):
                    out[i] += e * d[i]
        return tuple(out)

    def odd_slots(self) -> tuple:
        return tuple(
            i for i, d in enumerate(self.degrees) if sum_dim(self.group, d) % 2
        )


def sum_dim(group: GroupSpec, coords: tuple) -> int:
    d = group.irr_dim
    if len(coords) == 2:  # rank-one lattice (m, n)
        return coords[0] + d * coords[1]
    return coords[0] + d * sum(coords[1:])


def mul_sign(table: GeneratorTable, e1: tuple, e2: tuple, p: int) -> int:
    """Koszul sign for merging two monomials into table order."""
    if p == 2:
        return 1
    odd = table.odd_slots()
    left = [i for i in odd if e1[i]]
    right = [j for j in odd if e2[j]]
    inversions = sum(1 for i in left for j in right if i > j)
    return -1 if inversions % 2 else 1


@dataclass
class AmbientElement:
    """F_p-combination of monomials over a fixed table."""

    table: GeneratorTable
    terms: dict = field(default_factory=dict)  # exps tuple -> coeff in [1, p)
    p: int = 0

    def __post_init__(self):
        if not self.p:
            self.p = self.table.group.p

    @classmethod
    def zero(cls, table, p=None):
        return cls(table, {}, p or table.group.p)

    @classmethod
    def monomial(cls, table, exps, coeff=1, p=None):
        p = p or table.group.p
        coeff %= p
        return cls(table, {tuple(exps): coeff} if coeff else {}, p)

    @classmethod
    def generator(cls, table, name, power=1, p=None):
        exps = list(table.zero_exps())
        exps[table.index(name)] = power
        return cls.monomial(table, exps, 1, p)

    def is_zero(self) -> bool:
        return not self.terms

    def add_term(self, exps, coeff):
        exps = tuple(exps)
        c = (self.terms.get(exps, 0) + coeff) % self.p
        if c:
            self.terms[exps] = c
        else:
            self.terms.pop(exps, None)

    def __add__(self, other):
        out = AmbientElement(self.table, dict(self.terms), self.p)
        for exps, c in other.terms.items():
            out.add_term(exps, c)
        return out

    def __sub__(self, other):
        out = AmbientElement(self.table, dict(self.terms), self.p)
        for exps, c in other.terms.items():
            out.add_term(exps, -c)
        return out

    def scale(self, c):
        c %= self.p
        if not c:
            return AmbientElement.zero(self.table, self.p)
        return AmbientElement(
            self.table, {e: (c * x) % self.p for e, x in self.terms.items()}, self.p
        )

    def __eq__(self, other):
        return isinstance(other, AmbientElement) and self.terms == other.terms

    def degree(self):
        """Common degree of all terms; None for 0, error if inhomogeneous."""
        degs = {self.table.monomial_degree(e) for e in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("inhomogeneous element")
        return degs.pop()

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps in sorted(self.terms):
            c = self.terms[exps]
            mono = "*".join(
                f"{n}^{e}" if e != 1 else n
                for n, e in zip(self.table.names, exps)
                if e
            ) or "1"
            bits.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(bits)


def poly_mul(x: AmbientElement, y: AmbientElement) -> AmbientElement:
    """Graded-commutative product; exterior squares are dropped."""
    if x.table is not y.table and x.table != y.table:
        raise ValueError("product requires a common generator table")
    table, p = x.table, x.p
    out = AmbientElement.zero(table, p)
    flavors = table.flavors
    for e1, c1 in x.terms.items():
        for e2, c2 in y.terms.items():
            merged = tuple(a + b for a, b in zip(e1, e2))
            if any(
                f == "exterior" and e > 1 for f, e in zip(flavors, merged)
            ):
                continue
            sign = mul_sign(table, e1, e2, p)
            out.add_term(merged, sign * c1 * c2)
    return out


def poly_pow(x: AmbientElement, n: int) -> AmbientElement:
    if n < 0:
        raise ValueError("negative powers only via explicit inverse generators")
    out = AmbientElement.monomial(x.table, x.table.zero_exps(), 1, x.p)
    for _ in range(n):
        out = poly_mul(out, x)
    return out


# ---------------------------------------------------------------------------
# Lattice-point enumeration for degree pieces.

def _fm_interval(ineqs, nvars):
    """Fourier-Motzkin projection onto variable 0.

    ineqs: rows (a_0..a_{n-1}, const) meaning sum a_i x_i + const >= 0.
    Returns the (lo, hi) interval for x_0 with None for an unbounded side,
    or the string "infeasible".
    """
    rows = [tuple(map(Fraction, r)) for r in ineqs]
    for var in range(nvars - 1, 0, -1):
        pos = [r for r in rows if r[var] > 0]
        neg = [r for r in rows if r[var] < 0]
        keep = [r for r in rows if r[var] == 0]
        seen = set(keep)
        for rp in pos:
            for rn in neg:
                f = -rn[var] / rp[var]
                comb = tuple(f * a + b for a, b in zip(rp, rn))
                if comb not in seen:
                    seen.add(comb)
                    keep.append(comb)
        rows = keep
    lo, hi = None, None
    for r in rows:
        a, c = r[0], r[-1]
        if a == 0:
            if c < 0:
                return "infeasible"
        elif a > 0:
            bound = -c / a
            lo = bound if lo is None else max(lo, bound)
        else:
            bound = -c / a
            hi = bound if hi is None else min(hi, bound)
    if lo is not None and hi is not None and lo > hi:
        return "infeasible"
    return lo, hi


def _variable_interval(columns, target, lowers, uppers, var):
    """Exact rational interval for one exponent subject to the full system.

    Equalities are solved out first; Fourier-Motzkin bounds the free
    directions.  Returns None when infeasible and raises
    UnboundedEnumerationError on an unbounded side.
    """
    solved = exact_lattice_solve(columns, target)
    if solved is None:
        return None
    x0, kernel = solved
    k = len(kernel)
    # x_i = x0[i] + sum_j kernel[j][i] y_j; FM rows are (t, y_1..y_k, const)
    rows = []
    for i in range(len(columns)):
        if lowers[i] is not None:
            rows.append(
                (Fraction(0),)
                + tuple(Fraction(kernel[j][i]) for j in range(k))
                + (Fraction(x0[i]) - lowers[i],)
            )
        if uppers[i] is not None:
            rows.append(
                (Fraction(0),)
                + tuple(-Fraction(kernel[j][i]) for j in range(k))
                + (Fraction(uppers[i]) - Fraction(x0[i]),)
            )
    obj = tuple(Fraction(kernel[j][var]) for j in range(k))
    rows.append((Fraction(1),) + tuple(-v for v in obj) + (-Fraction(x0[var]),))
    rows.append((Fraction(-1),) + obj + (Fraction(x0[var]),))
    res = _fm_interval(rows, k + 1)
    if res == "infeasible":
        return None
    lo, hi = res
    if lo is None or hi is None:
        raise UnboundedEnumerationError(
            "degree piece is infinite; supply a box for the unbounded directions"
        )
    return lo, hi


def graded_basis(table: GeneratorTable, target, box=None, p=None):
    """All monomials of the given degree, in lexicographic table order.

    box maps generator names to (lo, hi) and is required whenever the
    degree equations leave a lattice ray inside the flavor bounds.
    """
    target = degree_tuple(target)
    n = len(table.names)
    columns = [table.degrees[i] for i in range(n)]
    lowers, uppers = [], []
    for i, f in enumerate(table.flavors):
        lo = 0 if f in ("polynomial", "exterior") else None
        hi = 1 if f == "exterior" else None
        if box and table.names[i] in box:
            blo, bhi = box[table.names[i]]
            lo = blo if lo is None else max(lo, blo)
            hi = bhi if hi is None else min(hi, bhi)
        lowers.append(lo)
        uppers.append(hi)

    out = []

    def dfs(idx, assigned, rhs):
        if idx == n:
            if not any(rhs):
                out.append(tuple(assigned))
            return
        rest_cols = columns[idx:]
        rest_lo = lowers[idx:]
        rest_hi = uppers[idx:]
        interval = _variable_interval(rest_cols, rhs, rest_lo, rest_hi, 0)
        if interval is None:
            return
        lo, hi = interval
        for v in range(math.ceil(lo), math.floor(hi) + 1):
            new_rhs = tuple(r - v * c for r, c in zip(rhs, columns[idx]))
            dfs(idx + 1, assigned + [v], new_rhs)

    dfs(0, [], target)
    return sorted(out)
