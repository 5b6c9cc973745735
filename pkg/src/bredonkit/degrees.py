"""RO(C_p x C_p), RO(C_p) and RO(C_2) degree lattices.

A degree is an integer tuple (c; a_0..a_{p-1}; b): c copies of the trivial
representation, a_i copies of the irreducible with kernel H_i = <ab^i>, and
b copies of the irreducible with kernel K = <b>.  Distinct rotation speeds
of the same kernel are collapsed to a single symbol at construction time;
the collapse is a normalization, not an option.  For odd p the nontrivial
irreducibles are two-dimensional, for p = 2 one-dimensional.

beta is kept separate from the a_i even though some sources alias it as an
extra "alpha_p"; subgroup tags accept the alias.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class GroupSpec:
    """Ambient group of a degree: C_p x C_p, C_p, C_2 or the quotient line K4/K."""

    p: int
    kind: str = "CpxCp"  # one of CpxCp, Cp, C2, K4-quotient-line

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.kind not in ("CpxCp", "Cp", "C2", "K4-quotient-line"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.kind == "C2" and self.p != 2:
            raise ValueError("kind C2 requires p = 2")
        if self.kind == "K4-quotient-line" and self.p != 2:
            raise ValueError("kind K4-quotient-line is only valid with p = 2")

    @property
    def irr_dim(self) -> int:
        """Real dimension of the nontrivial irreducibles (2 for odd p, 1 for p = 2)."""
        return 1 if self.p == 2 else 2

    def subgroup_tags(self):
        """All subgroups of C_p x C_p: e, the p+1 order-p subgroups, the full group."""
        return ("e", *(f"H{i}" for i in range(self.p)), "K", "full")


@dataclass(frozen=True)
class Degree:
    """An RO(C_p x C_p) degree c + sum a_i.alpha_i + b.beta."""

    c: int
    a: tuple
    b: int
    group: GroupSpec

    def __post_init__(self):
        if self.group.kind not in ("CpxCp",):
            raise ValueError("Degree is the rank-two lattice; use SubDegree for C_p/C_2")
        if len(self.a) != self.group.p:
            raise ValueError(
                f"alpha tuple has length {len(self.a)}, expected p = {self.group.p}"
            )
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))

    @property
    def p(self) -> int:
        return self.group.p

    def __add__(self, other: "Degree") -> "Degree":
        self._check(other)
        return Degree(
            self.c + other.c,
            tuple(x + y for x, y in zip(self.a, other.a)),
            self.b + other.b,
            self.group,
        )

    def __sub__(self, other: "Degree") -> "Degree":
        self._check(other)
        return Degree(
            self.c - other.c,
            tuple(x - y for x, y in zip(self.a, other.a)),
            self.b - other.b,
            self.group,
        )

    def __neg__(self) -> "Degree":
        return Degree(-self.c, tuple(-x for x in self.a), -self.b, self.group)

    def scale(self, n: int) -> "Degree":
        return Degree(n * self.c, tuple(n * x for x in self.a), n * self.b, self.group)

    def _check(self, other):
        if self.group != other.group:
            raise ValueError("degree arithmetic requires matching groups")

    def is_zero(self) -> bool:
        return self.c == 0 and self.b == 0 and not any(self.a)

    def key(self):
        return (self.c, self.a, self.b)

    def __str__(self) -> str:
        return format_degree(self)


@dataclass(frozen=True)
class SubDegree:
    """An RO(C_p) degree m + n.xi (odd p) or RO(C_2) degree m + n.sigma."""

    m: int
    n: int
    group: GroupSpec

    def __post_init__(self):
        if self.group.kind not in ("Cp", "C2", "K4-quotient-line"):
            raise ValueError("SubDegree lives over a rank-one group")

    @property
    def p(self) -> int:
        return self.group.p

    def __add__(self, other: "SubDegree") -> "SubDegree":
        if self.group != other.group:
            raise ValueError("degree arithmetic requires matching groups")
        return SubDegree(self.m + other.m, self.n + other.n, self.group)

    def dim(self) -> int:
        return self.m + self.group.irr_dim * self.n

    def fixed_dim(self) -> int:
        """Dimension of the fixed part: the n nontrivial summands die."""
        return self.m

    def key(self):
        return (self.m, self.n)

    def __str__(self) -> str:
        return f"{self.m};{self.n}"


def dim(gamma: Degree) -> int:
    """Total real dimension: c + d(sum a_i) + d b with d the irreducible dimension."""
    d = gamma.group.irr_dim
    return gamma.c + d * sum(gamma.a) + d * gamma.b


def fixed_dim(gamma: Degree, subgroup: str) -> int:
    """Dimension of the H-fixed part of gamma, H given by tag.

    Tags: "e", "H0".."H{p-1}", "K", "full".  alpha_i is fixed exactly by H_i
    and beta exactly by K; everything nontrivial dies at the full group.
    """
    d = gamma.group.irr_dim
    if subgroup == "e":
        return dim(gamma)
    if subgroup == "full":
        return gamma.c
    if subgroup == "K":
        return gamma.c + d * gamma.b
    if subgroup.startswith("H"):
        j = int(subgroup[1:])
        if not 0 <= j < gamma.p:
            raise ValueError(f"no subgroup {subgroup} for p = {gamma.p}")
        return gamma.c + d * gamma.a[j]
    raise ValueError(f"unknown subgroup tag {subgroup!r}")


def restrict(gamma: Degree, subgroup: str) -> SubDegree:
    """Restriction to an order-p subgroup, as m + n.xi (resp. m + n.sigma).

    res_{H_j} keeps alpha_j trivial and folds the remaining alphas and beta
    onto the single nontrivial irreducible; res_K keeps beta trivial.
    """
    d = gamma.group.irr_dim
    sub = GroupSpec(gamma.p, "C2" if gamma.p == 2 else "Cp")
    if subgroup == "K":
        return SubDegree(gamma.c + d * gamma.b, sum(gamma.a), sub)
    if subgroup.startswith("H"):
        j = int(subgroup[1:])
        if not 0 <= j < gamma.p:
            raise ValueError(f"no subgroup {subgroup} for p = {gamma.p}")
        n = gamma.b + sum(x for i, x in enumerate(gamma.a) if i != j)
        return SubDegree(gamma.c + d * gamma.a[j], n, sub)
    raise ValueError("restrict expects an order-p subgroup tag, not e or full")


def vanishes_by_criterion(gamma: Degree) -> bool:
    """True when every fixed-point dimension is <= -1.

    In that range the point cohomology is zero in degree gamma, for any
    prime; used to certify truncations elsewhere.
    """
    return all(fixed_dim(gamma, h) <= -1 for h in gamma.group.subgroup_tags())


def zero_degree(group: GroupSpec) -> Degree:
    return Degree(0, (0,) * group.p, 0, group)


def parse_degree(text: str, p: int | None = None) -> Degree:
    """Parse "c;a0,a1,...,a_{p-1};b"; p is inferred from the alpha count."""
    parts = text.strip().split(";")
    if len(parts) != 3:
        raise ValueError(f"degree {text!r} is not of the form c;a0,...;b")
    try:
        c = int(parts[0])
        a = tuple(int(x) for x in parts[1].split(",")) if parts[1] else ()
        b = int(parts[2])
    except ValueError as exc:
        raise ValueError(f"degree {text!r}: {exc}") from None
    if p is not None and len(a) != p:
        raise ValueError(f"degree {text!r} has {len(a)} alpha slots, expected {p}")
    return Degree(c, a, b, GroupSpec(len(a)))


def format_degree(gamma: Degree) -> str:
    return f"{gamma.c};{','.join(str(x) for x in gamma.a)};{gamma.b}"


def parse_subdegree(text: str, p: int) -> SubDegree:
    """Parse "m;n" for the rank-one lattice of C_p (odd p) or C_2."""
    parts = text.strip().split(";")
    if len(parts) != 2:
        raise ValueError(f"subdegree {text!r} is not of the form m;n")
    m, n = int(parts[0]), int(parts[1])
    return SubDegree(m, n, GroupSpec(p, "C2" if p == 2 else "Cp"))


def degree_window(group: GroupSpec, c_max: int, a_max: int, b_max: int):
    """All degrees with |c| <= c_max, |a_i| <= a_max, |b| <= b_max, lex order."""
    from itertools import product

    ranges = [range(-c_max, c_max + 1)]
    ranges += [range(-a_max, a_max + 1)] * group.p
    ranges.append(range(-b_max, b_max + 1))
    for tup in product(*ranges):
        yield Degree(tup[0], tup[1:-1], tup[-1], group)


def exact_lattice_solve(columns, target):
    """Solve sum x_j columns[j] = target over the rationals, exactly.

    Returns (particular solution, kernel basis) with Fraction entries, or
    None when inconsistent.  Small dense Gauss; columns are integer tuples.
    """
    if not columns:
        return (None if any(target) else ((), ()))
    nrows = len(columns[0])
    ncols = len(columns)
    mat = [[Fraction(columns[j][i]) for j in range(ncols)] + [Fraction(target[i])]
           for i in range(nrows)]
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [x * inv for x in mat[row]]
        for r in range(nrows):
            if r != row and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    for r in range(row, nrows):
        if mat[r][ncols] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        sol[col] = mat[r][ncols]
    free = [c for c in range(ncols) if c not in pivots]
    kernel = []
    for fcol in free:
        vec = [Fraction(0)] * ncols
        vec[fcol] = Fraction(1)
        for r, col in enumerate(pivots):
            vec[col] = -mat[r][fcol]
        kernel.append(tuple(vec))
    return tuple(sol), tuple(kernel)
